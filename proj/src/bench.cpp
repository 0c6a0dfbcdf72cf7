#include "sumcomp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sumcomp/errors.hpp"
#include "sumcomp/oracle.hpp"

namespace sumcomp {

std::string_view bench_mode_name(BenchMode m) {
    switch (m) {
        case BenchMode::kExhaustive: return "exhaustive";
        case BenchMode::kExistential: return "existential";
        case BenchMode::kOracle: return "oracle";
    }
    return "?";
}

std::optional<BenchMode> bench_mode_from_name(std::string_view name) {
    for (BenchMode m : {BenchMode::kExhaustive, BenchMode::kExistential, BenchMode::kOracle}) {
        if (bench_mode_name(m) == name) return m;
    }
    return std::nullopt;
}

namespace {

struct Cell {
    std::uint64_t n, m;
    Value lo, hi;
};

std::vector<Cell> expand_cells(const BenchGrid& grid) {
    std::vector<Cell> cells;
    for (std::uint64_t n : grid.n_values) {
        for (std::uint64_t m : grid.m_values) {
            if (m < 2 || m >= n) continue;
            for (const auto& [lo, hi] : grid.ranges) {
                cells.push_back({n, m, lo, hi});
            }
        }
    }
    return cells;
}

BenchRecord run_trial(BenchMode mode, Rule rule, const Cell& cell, std::uint64_t seed,
                      std::uint64_t trial, const BenchOptions& opts) {
    BenchRecord rec;
    rec.mode = mode;
    rec.rule = rule;
    rec.n = cell.n;
    rec.m = cell.m;
    rec.lo = cell.lo;
    rec.hi = cell.hi;
    rec.seed = seed;
    rec.trial = trial;

    GenConfig config{cell.n, cell.m, cell.lo, cell.hi, rule, seed, false};
    Instance inst = gen_instance(config);

    const auto start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (opts.trial_timeout.count() > 0) deadline = start + opts.trial_timeout;

    switch (mode) {
        case BenchMode::kExhaustive: {
            EnumerateOptions eopts = opts.enum_options;
            eopts.deadline = deadline;
            EnumerationStats stats;
            rec.count = count_decompositions(inst.a, inst.b, eopts, &stats);
            rec.aborted = stats.timed_out;
            break;
        }
        case BenchMode::kExistential: {
            ExistOptions xopts = opts.exist_options;
            xopts.deadline = deadline;
            ExistReport report = sum_comp_exist(inst.a, inst.b, xopts);
            rec.exists = report.exists;
            rec.exit = report.exit;
            rec.a_before = report.a_parts_before;
            rec.b_before = report.b_parts_before;
            rec.a_after = report.a_parts_after;
            rec.b_after = report.b_parts_after;
            rec.aborted = report.timed_out;
            break;
        }
        case BenchMode::kOracle: {
            rec.count = oracle_decompositions(inst.a, inst.b).size();
            break;
        }
    }
    rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (rec.aborted) {
        rec.count = 0;
        rec.exists = false;
    }
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_grid(BenchMode mode, const BenchGrid& grid,
                                  const BenchOptions& opts) {
    if (opts.trials == 0) throw std::invalid_argument("bench: trials must be >= 1");
    const std::vector<Cell> cells = expand_cells(grid);
    if (cells.empty()) throw std::invalid_argument("bench: grid has no valid cells");
    if (mode == BenchMode::kOracle) {
        for (const Cell& c : cells) {
            if (c.n > kOracleMaxElements || c.m > kOracleMaxBlocks) {
                throw ResourceLimitError("bench: oracle mode limited to n <= " +
                                         std::to_string(kOracleMaxElements) + ", m <= " +
                                         std::to_string(kOracleMaxBlocks));
            }
        }
    }

    std::vector<BenchRecord> records(cells.size() * opts.trials);
    auto run_cell = [&](std::size_t cell_index) {
        const Cell& cell = cells[cell_index];
        const std::uint64_t first_seed = opts.seed_base + cell_index * opts.trials;
        if (opts.warmup) {
            run_trial(mode, grid.rule, cell, first_seed, 0, opts);
        }
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            records[cell_index * opts.trials + t] =
                run_trial(mode, grid.rule, cell, first_seed + t, t, opts);
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, cells.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    run_cell(i);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }
    return records;
}

std::vector<SummaryRow> summarize(std::span<const BenchRecord> records) {
    using Key = std::tuple<BenchMode, Rule, std::uint64_t, std::uint64_t, Value, Value>;
    std::map<Key, std::vector<const BenchRecord*>> groups;
    for (const BenchRecord& r : records) {
        groups[{r.mode, r.rule, r.n, r.m, r.lo, r.hi}].push_back(&r);
    }

    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, recs] : groups) {
        SummaryRow row{};
        std::tie(row.mode, row.rule, row.n, row.m, row.lo, row.hi) = key;
        row.trials = recs.size();

        std::vector<std::int64_t> times;
        double count_sum = 0, exists_n = 0, full_n = 0, reduced_n = 0, reduction_sum = 0;
        std::uint64_t variant[8] = {};
        std::size_t ok = 0;
        for (const BenchRecord* r : recs) {
            if (r->aborted) {
                ++row.aborted;
                continue;
            }
            ++ok;
            times.push_back(r->elapsed_us);
            count_sum += static_cast<double>(r->count);
            if (r->exists) ++exists_n;
            variant[static_cast<std::size_t>(r->exit)]++;
            if (r->exit != Exit::kSearch) ++full_n;
            if (r->a_after < r->a_before) ++reduced_n;
            if (r->a_before > 0) {
                reduction_sum +=
                    static_cast<double>(r->a_before - r->a_after) / static_cast<double>(r->a_before);
            }
        }
        if (ok > 0) {
            std::sort(times.begin(), times.end());
            row.mean_count = count_sum / static_cast<double>(ok);
            double time_sum = 0;
            for (std::int64_t t : times) time_sum += static_cast<double>(t);
            row.mean_us = time_sum / static_cast<double>(ok);
            row.median_us = (ok % 2 == 1)
                                ? static_cast<double>(times[ok / 2])
                                : (static_cast<double>(times[ok / 2 - 1]) +
                                   static_cast<double>(times[ok / 2])) /
                                      2.0;
            row.max_us = times.back();
            auto pct = [&](double x) { return 100.0 * x / static_cast<double>(ok); };
            row.pct_exists = pct(exists_n);
            row.pct_line1 = pct(variant[static_cast<std::size_t>(Exit::kSumMismatch)]);
            row.pct_b = pct(variant[static_cast<std::size_t>(Exit::kLengthBound)]);
            row.pct_c = pct(variant[static_cast<std::size_t>(Exit::kEndpointBound)]);
            row.pct_e = pct(variant[static_cast<std::size_t>(Exit::kEqualReduced)]);
            row.pct_f = pct(variant[static_cast<std::size_t>(Exit::kCardinalityBound)]);
            row.pct_g = pct(variant[static_cast<std::size_t>(Exit::kPrefixSumBound)]);
            row.pct_aux = pct(variant[static_cast<std::size_t>(Exit::kSearch)]);
            row.pct_div = pct(variant[static_cast<std::size_t>(Exit::kDivisibility)]);
            row.pct_full_simplification = pct(full_n);
            row.pct_a_reduced = pct(reduced_n);
            row.mean_a_reduction = reduction_sum / static_cast<double>(ok);
        }
        rows.push_back(row);
    }
    return rows;
}

const char* const kRecordCsvHeader =
    "mode,rule,n,m,lo,hi,seed,trial,elapsed_us,aborted,count,exists,exit,"
    "a_before,b_before,a_after,b_after";

const char* const kSummaryCsvHeader =
    "mode,rule,n,m,lo,hi,trials,aborted,mean_count,mean_us,median_us,max_us,pct_exists,"
    "pct_line1,pct_B,pct_C,pct_E,pct_F,pct_G,pct_aux,pct_div,pct_full_simpl,"
    "pct_a_reduced,mean_a_reduction";

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

void write_records_csv(std::ostream& os, std::span<const BenchRecord> records) {
    os << kRecordCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        os << bench_mode_name(r.mode) << ',' << rule_name(r.rule) << ',' << r.n << ',' << r.m
           << ',' << r.lo << ',' << r.hi << ',' << r.seed << ',' << r.trial << ','
           << r.elapsed_us << ',' << (r.aborted ? 1 : 0) << ',';
        if (r.mode == BenchMode::kExistential) {
            os << ',' << (r.exists ? "true" : "false") << ',' << exit_tag(r.exit) << ','
               << r.a_before << ',' << r.b_before << ',' << r.a_after << ',' << r.b_after;
        } else {
            os << r.count << ",,,,,,";
        }
        os << '\n';
    }
}

void write_summary_csv(std::ostream& os, std::span<const SummaryRow> rows) {
    os << kSummaryCsvHeader << '\n';
    for (const SummaryRow& s : rows) {
        os << bench_mode_name(s.mode) << ',' << rule_name(s.rule) << ',' << s.n << ',' << s.m
           << ',' << s.lo << ',' << s.hi << ',' << s.trials << ',' << s.aborted << ','
           << fmt_double(s.mean_count) << ',' << fmt_double(s.mean_us) << ','
           << fmt_double(s.median_us) << ',' << s.max_us << ',' << fmt_double(s.pct_exists)
           << ',' << fmt_double(s.pct_line1) << ',' << fmt_double(s.pct_b) << ','
           << fmt_double(s.pct_c) << ',' << fmt_double(s.pct_e) << ',' << fmt_double(s.pct_f)
           << ',' << fmt_double(s.pct_g) << ',' << fmt_double(s.pct_aux) << ','
           << fmt_double(s.pct_div) << ',' << fmt_double(s.pct_full_simplification) << ','
           << fmt_double(s.pct_a_reduced) << ',' << fmt_double(s.mean_a_reduction) << '\n';
    }
}

}  // namespace sumcomp
