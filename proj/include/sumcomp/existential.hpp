#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "sumcomp/partition.hpp"
#include "sumcomp/pruning.hpp"

namespace sumcomp {

struct ExistOptions {
    /// Apply the two reductions (common-part removal, tail merge) before
    /// the search. Disabling them switches to an equivalent slower path
    /// whose verdict is identical.
    bool simplify = true;
    /// Re-run the reductions to a fixpoint before the prefix-sum check
    /// instead of the single pass the standard pipeline performs.
    bool iterate_reductions = false;
    /// Also run the gcd-divisibility check (opt-in; not part of the
    /// standard pipeline).
    bool use_divisibility_check = false;
    /// Cooperative deadline for the recursive search.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ExistReport {
    bool exists = false;
    /// Which pipeline statement decided. Exits other than kSearch mean the
    /// recursive search was never entered (a full simplification).
    Exit exit = Exit::kSearch;
    /// |A| and |B| at entry and after the reductions (the sizes the search
    /// would see). Equal to the entry sizes when the pipeline decided
    /// before reducing.
    std::uint64_t a_parts_before = 0;
    std::uint64_t b_parts_before = 0;
    std::uint64_t a_parts_after = 0;
    std::uint64_t b_parts_after = 0;
    std::chrono::microseconds elapsed{0};
    bool timed_out = false;
};

/// Decides whether at least one AB-decomposition exists, applying the
/// necessary-condition cascade and the reductions before falling back to
/// the recursive search. Both partitions must be non-empty.
ExistReport sum_comp_exist(const Partition& a, const Partition& b,
                           const ExistOptions& opts = {});

/// The bare recursive search: verifies sigma equality at entry, answers
/// true when a single target remains, otherwise branches over every
/// sub-multiset of A summing to the smallest target, short-circuiting on
/// the first success.
bool sum_comp_exist_aux(const Partition& a, const Partition& b);

}  // namespace sumcomp
