#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sumcomp/datagen.hpp"
#include "sumcomp/exhaustive.hpp"
#include "sumcomp/existential.hpp"

namespace sumcomp {

enum class BenchMode : std::uint8_t { kExhaustive, kExistential, kOracle };

std::string_view bench_mode_name(BenchMode m);
std::optional<BenchMode> bench_mode_from_name(std::string_view name);

struct BenchGrid {
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> m_values;
    std::vector<std::pair<Value, Value>> ranges;
    Rule rule = Rule::kR1;
};

struct BenchOptions {
    std::uint64_t trials = 100;
    std::uint64_t seed_base = 0;
    /// Worker threads over grid cells; result columns are independent of
    /// the schedule because every record's seed is derived from its cell
    /// and trial indices.
    unsigned threads = 1;
    /// Per-trial wall-clock cap; expiry flags the record aborted instead
    /// of failing the grid. Zero disables.
    std::chrono::milliseconds trial_timeout{0};
    /// Run and discard one untimed trial per cell before measuring.
    bool warmup = true;
    ExistOptions exist_options;
    EnumerateOptions enum_options;
};

/// One trial's measurements. count is meaningful for the exhaustive and
/// oracle modes, (exists, exit) and the reduction sizes for the
/// existential mode; the two groups are mutually exclusive.
struct BenchRecord {
    BenchMode mode = BenchMode::kExhaustive;
    Rule rule = Rule::kR1;
    std::uint64_t n = 0, m = 0;
    Value lo = 0, hi = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::int64_t elapsed_us = 0;
    bool aborted = false;
    std::uint64_t count = 0;
    bool exists = false;
    Exit exit = Exit::kSearch;
    std::uint64_t a_before = 0, b_before = 0, a_after = 0, b_after = 0;
};

/// Runs trials at every valid grid cell (cells with m >= n are skipped:
/// the generator requires 2 <= m < n). Records are ordered cell-major,
/// trial-minor regardless of thread count. Oracle mode rejects grids
/// beyond the oracle size limits up front.
std::vector<BenchRecord> run_grid(BenchMode mode, const BenchGrid& grid,
                                  const BenchOptions& opts);

/// Per-cell aggregates over the non-aborted records.
struct SummaryRow {
    BenchMode mode;
    Rule rule;
    std::uint64_t n, m;
    Value lo, hi;
    std::uint64_t trials = 0;
    std::uint64_t aborted = 0;
    double mean_count = 0.0;
    double mean_us = 0.0;
    double median_us = 0.0;
    std::int64_t max_us = 0;
    double pct_exists = 0.0;
    /// Exit-variant shares (existential mode); they sum to 100 per cell.
    double pct_line1 = 0.0, pct_b = 0.0, pct_c = 0.0, pct_e = 0.0, pct_f = 0.0, pct_g = 0.0,
           pct_aux = 0.0, pct_div = 0.0;
    /// Share of records decided without entering the search.
    double pct_full_simplification = 0.0;
    /// Share of records whose A shrank before the search, and the mean
    /// removed fraction of A.
    double pct_a_reduced = 0.0;
    double mean_a_reduction = 0.0;
};

std::vector<SummaryRow> summarize(std::span<const BenchRecord> records);

/// CSV emission with stable headers (asserted by tests).
extern const char* const kRecordCsvHeader;
extern const char* const kSummaryCsvHeader;
void write_records_csv(std::ostream& os, std::span<const BenchRecord> records);
void write_summary_csv(std::ostream& os, std::span<const SummaryRow> rows);

}  // namespace sumcomp
