#include "sumcomp/pruning.hpp"

#include <numeric>
#include <stdexcept>

namespace sumcomp {

std::string_view exit_tag(Exit e) {
    switch (e) {
        case Exit::kSumMismatch: return "line1";
        case Exit::kLengthBound: return "B";
        case Exit::kEndpointBound: return "C";
        case Exit::kEqualReduced: return "E";
        case Exit::kCardinalityBound: return "F";
        case Exit::kPrefixSumBound: return "G";
        case Exit::kSearch: return "aux";
        case Exit::kDivisibility: return "div";
    }
    return "?";
}

std::optional<Exit> exit_from_tag(std::string_view tag) {
    for (Exit e : {Exit::kSumMismatch, Exit::kLengthBound, Exit::kEndpointBound,
                   Exit::kEqualReduced, Exit::kCardinalityBound, Exit::kPrefixSumBound,
                   Exit::kSearch, Exit::kDivisibility}) {
        if (exit_tag(e) == tag) return e;
    }
    return std::nullopt;
}

PruneVerdict check_basic(const Partition& a, const Partition& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("check_basic requires non-empty partitions");
    }
    if (a.sigma() != b.sigma()) return PruneVerdict::fail(Exit::kSumMismatch);
    if (b.size() > a.size()) return PruneVerdict::fail(Exit::kLengthBound);
    if (a.min_value() > b.min_value() || a.max_value() > b.max_value()) {
        return PruneVerdict::fail(Exit::kEndpointBound);
    }
    return PruneVerdict::ok();
}

PruneVerdict check_cardinality(const Partition& a, const Partition& b,
                               bool require_common_part) {
    const std::uint64_t k = intersect(a, b).size();
    if (require_common_part && k == 0) return PruneVerdict::ok();
    const std::uint64_t m = b.size();
    // n <= 2m - k - 1, rearranged to avoid unsigned underflow.
    if (a.size() + k + 1 <= 2 * m) return PruneVerdict::fail(Exit::kCardinalityBound);
    return PruneVerdict::ok();
}

PruneVerdict check_prefix_sums(const Partition& a, const Partition& b) {
    auto ia = a.parts().begin(), ea = a.parts().end();
    auto ib = b.parts().begin(), eb = b.parts().end();
    std::uint64_t sum_a = 0, sum_b = 0;
    while (ia != ea || ib != eb) {
        Value h;
        if (ib == eb || (ia != ea && ia->value < ib->value)) {
            h = ia->value;
        } else {
            h = ib->value;
        }
        while (ia != ea && ia->value == h) {
            sum_a += ia->value * ia->mult;
            ++ia;
        }
        while (ib != eb && ib->value == h) {
            sum_b += ib->value * ib->mult;
            ++ib;
        }
        if (sum_a < sum_b) return PruneVerdict::fail(Exit::kPrefixSumBound);
    }
    return PruneVerdict::ok();
}

PruneVerdict check_divisibility(const Partition& a, const Partition& b) {
    Value d = 0;
    for (const Part& part : a.parts()) d = std::gcd(d, part.value);
    if (d <= 1) return PruneVerdict::ok();
    for (const Part& part : b.parts()) {
        if (part.value % d != 0) return PruneVerdict::fail(Exit::kDivisibility);
    }
    return PruneVerdict::ok();
}

std::pair<Partition, Partition> simplify_common(const Partition& a, const Partition& b) {
    Partition common = intersect(a, b);
    if (common.empty()) return {a, b};
    return {subtract(a, common), subtract(b, common)};
}

bool tail_simplification_applies(const Partition& a, const Partition& b) {
    if (a.empty() || b.size() < 2) return false;
    const Value a_max = a.max_value();
    const Value b_max = b.max_value();
    // b_{m-1}: the largest part of B after removing one copy of b_m.
    const Value b_second = b.parts().back().mult >= 2
                               ? b_max
                               : b.parts()[b.distinct_size() - 2].value;
    return b_second < a_max && a_max < b_max;
}

std::pair<Partition, Partition> simplify_tail(const Partition& a, const Partition& b) {
    if (!tail_simplification_applies(a, b)) {
        throw std::invalid_argument("simplify_tail requires b_{m-1} < a_n < b_m");
    }
    const Value a_max = a.max_value();
    const Value b_max = b.max_value();
    Partition a_out = subtract(a, Partition::from_values({a_max}));
    Partition b_out = union_of(subtract(b, Partition::from_values({b_max})),
                               Partition::from_values({b_max - a_max}));
    return {std::move(a_out), std::move(b_out)};
}

}  // namespace sumcomp
