#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sumcomp/partition.hpp"

namespace sumcomp {

namespace detail {

// Depth-first enumeration of all sub-multisets of `parts` supported on
// distinct-part indices >= `from`, summing exactly to `target`. At each
// index the take-count i runs 0..quotient with quotient =
// min(target div value, mult); when i == quotient exactly consumes the
// remaining target, the solution is emitted without recursing further.
// `chosen` accumulates the pairs taken so far (ascending values); the
// visitor sees it for the duration of the call only. Returns false iff
// the visitor requested a stop.
template <class Visit>
bool enumerate_subset_sums(std::span<const Part> parts, Value target, std::size_t from,
                           std::vector<Part>& chosen, Visit&& visit) {
    if (from >= parts.size() || target < parts[from].value) return true;
    const Value value = parts[from].value;
    const std::uint64_t quotient = std::min<std::uint64_t>(target / value, parts[from].mult);
    for (std::uint64_t i = 0; i <= quotient; ++i) {
        if (i == quotient && quotient * value == target) {
            chosen.push_back({value, quotient});
            bool keep_going = visit(std::as_const(chosen));
            chosen.pop_back();
            if (!keep_going) return false;
        } else {
            if (i > 0) chosen.push_back({value, i});
            bool keep_going =
                enumerate_subset_sums(parts, target - i * value, from + 1, chosen, visit);
            if (i > 0) chosen.pop_back();
            if (!keep_going) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Visits every sub-multiset of `a` drawn from distinct-part indices
/// >= `from_index` (0-based) whose parts sum to `target`, one Partition
/// per solution, in a fixed deterministic order (take-count ascending at
/// each index, depth-first). The visitor returns false to stop the
/// enumeration early. Returns the number of solutions visited.
std::uint64_t for_each_subset_sum(const Partition& a, Value target, std::size_t from_index,
                                  const std::function<bool(const Partition&)>& visit);

/// Materialized form of for_each_subset_sum, same order.
std::vector<Partition> subset_sums(const Partition& a, Value target, std::size_t from_index = 0);

}  // namespace sumcomp
