#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sumcomp/partition.hpp"

namespace sumcomp {

/// The pinned generator for every seeded draw in this project, chosen for
/// trivially portable cross-language reproduction. Golden instances in
/// the tests depend on this exact sequence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi] via lo + next() mod (hi - lo + 1).
    /// The modulo bias is accepted; reproducibility is the goal here,
    /// not statistical fidelity.
    std::uint64_t bounded(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

enum class Rule : std::uint8_t { kR1, kR2 };

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct GenConfig {
    std::uint64_t n = 0;  // length of A
    std::uint64_t m = 0;  // length of B, 2 <= m < n
    Value lo = 1, hi = 1;
    Rule rule = Rule::kR1;
    std::uint64_t seed = 0;
    /// Draw A without repeated values (rejection per draw). Requires
    /// hi - lo + 1 >= n. No standard experiment uses this.
    bool distinct_values = false;

    /// Throws std::invalid_argument unless 1 <= lo <= hi and 2 <= m < n
    /// (and the range can host n distinct values when requested).
    void validate() const;
};

/// n values drawn from [lo, hi] on the given stream, canonicalized.
Partition gen_values(std::uint64_t n, Value lo, Value hi, bool distinct, SplitMix64& rng);

/// A from a fresh stream seeded with config.seed.
Partition gen_A(const GenConfig& config);

/// Rule R1: assigns each expanded element of A to one of m groups,
/// resampling the whole assignment until every group is non-empty;
/// B = sorted group sums. Existence is guaranteed by construction.
/// Requires 2 <= m <= |A|.
Partition gen_B_r1(const Partition& a, std::uint64_t m, SplitMix64& rng);
Partition gen_B_r1(const Partition& a, std::uint64_t m, std::uint64_t seed);

/// Rule R2: draws m-1 distinct cut points in [1, sigma(A)-1] (redrawing
/// collisions), sorts them, and returns the sorted consecutive
/// differences against 0 and sigma(A). Guarantees sigma(B) = sigma(A)
/// but not existence. Requires 2 <= m <= sigma(A).
Partition gen_B_r2(const Partition& a, std::uint64_t m, SplitMix64& rng);
Partition gen_B_r2(const Partition& a, std::uint64_t m, std::uint64_t seed);

struct Instance {
    Partition a;
    Partition b;
};

/// A then B from one stream seeded with config.seed; what the CLI `gen`
/// subcommand emits.
Instance gen_instance(const GenConfig& config);

}  // namespace sumcomp
