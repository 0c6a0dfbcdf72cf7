#include "sumcomp/datagen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sumcomp {

std::string_view rule_name(Rule r) {
    return r == Rule::kR1 ? "r1" : "r2";
}

std::optional<Rule> rule_from_name(std::string_view name) {
    if (name == "r1" || name == "R1") return Rule::kR1;
    if (name == "r2" || name == "R2") return Rule::kR2;
    return std::nullopt;
}

void GenConfig::validate() const {
    if (lo < 1 || lo > hi) throw std::invalid_argument("gen: need 1 <= lo <= hi");
    if (m < 2 || m >= n) throw std::invalid_argument("gen: need 2 <= m < n");
    if (distinct_values && hi - lo + 1 < n) {
        throw std::invalid_argument("gen: range too small for n distinct values");
    }
}

Partition gen_values(std::uint64_t n, Value lo, Value hi, bool distinct, SplitMix64& rng) {
    std::vector<Value> values;
    values.reserve(n);
    if (distinct) {
        std::set<Value> used;
        while (values.size() < n) {
            Value v = rng.bounded(lo, hi);
            if (used.insert(v).second) values.push_back(v);
        }
    } else {
        for (std::uint64_t i = 0; i < n; ++i) values.push_back(rng.bounded(lo, hi));
    }
    return Partition::from_values(values);
}

Partition gen_A(const GenConfig& config) {
    config.validate();
    SplitMix64 rng(config.seed);
    return gen_values(config.n, config.lo, config.hi, config.distinct_values, rng);
}

Partition gen_B_r1(const Partition& a, std::uint64_t m, SplitMix64& rng) {
    if (m < 2 || m > a.size()) throw std::invalid_argument("gen_B_r1: need 2 <= m <= |A|");
    const std::vector<Value> elems = a.expand();
    std::vector<Value> sums(m);
    for (;;) {
        std::fill(sums.begin(), sums.end(), 0);
        for (Value v : elems) {
            sums[rng.bounded(0, m - 1)] += v;
        }
        if (std::find(sums.begin(), sums.end(), 0) == sums.end()) break;
    }
    return Partition::from_values(sums);
}

Partition gen_B_r1(const Partition& a, std::uint64_t m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_B_r1(a, m, rng);
}

Partition gen_B_r2(const Partition& a, std::uint64_t m, SplitMix64& rng) {
    const std::uint64_t total = a.sigma();
    if (m < 2 || m > total) throw std::invalid_argument("gen_B_r2: need 2 <= m <= sigma(A)");
    std::vector<Value> cuts;
    cuts.reserve(m - 1);
    std::set<Value> used;
    while (cuts.size() < m - 1) {
        Value v = rng.bounded(1, total - 1);
        if (used.insert(v).second) cuts.push_back(v);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Value> parts;
    parts.reserve(m);
    Value prev = 0;
    for (Value c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(total - prev);
    return Partition::from_values(parts);
}

Partition gen_B_r2(const Partition& a, std::uint64_t m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_B_r2(a, m, rng);
}

Instance gen_instance(const GenConfig& config) {
    config.validate();
    SplitMix64 rng(config.seed);
    Partition a = gen_values(config.n, config.lo, config.hi, config.distinct_values, rng);
    Partition b = config.rule == Rule::kR1 ? gen_B_r1(a, config.m, rng)
                                           : gen_B_r2(a, config.m, rng);
    return {std::move(a), std::move(b)};
}

}  // namespace sumcomp
