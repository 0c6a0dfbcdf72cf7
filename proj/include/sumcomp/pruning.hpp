#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "sumcomp/partition.hpp"

namespace sumcomp {

/// Where the existence pipeline decided, and which necessary condition a
/// standalone check reports when it fails. The single-letter tags are the
/// experiment vocabulary used in reports and CSV output.
enum class Exit : std::uint8_t {
    kSumMismatch,       // tag "line1": sigma(A) != sigma(B)
    kLengthBound,       // tag "B":     |B| > |A|
    kEndpointBound,     // tag "C":     a_1 > b_1 or a_n > b_m
    kEqualReduced,      // tag "E":     A empty after removing A ∩ B (so A == B)
    kCardinalityBound,  // tag "F":     |A| <= 2|B| - |A∩B| - 1
    kPrefixSumBound,    // tag "G":     sigma(A^(h)) < sigma(B^(h)) for some h
    kSearch,            // tag "aux":   decided by the recursive search
    kDivisibility,      // tag "div":   gcd(A) does not divide some part of B (opt-in check)
};

std::string_view exit_tag(Exit e);
std::optional<Exit> exit_from_tag(std::string_view tag);

/// PASS means no necessary condition was violated (it does not imply the
/// decomposition exists). FAIL carries the variant that excluded it.
struct PruneVerdict {
    bool pass = true;
    Exit variant = Exit::kSearch;

    static PruneVerdict ok() { return {}; }
    static PruneVerdict fail(Exit v) { return {false, v}; }

    explicit operator bool() const { return pass; }
    friend bool operator==(const PruneVerdict&, const PruneVerdict&) = default;
};

/// The four basic necessary conditions, checked in pipeline order:
/// sigma equality, |A| >= |B|, a_1 <= b_1, a_n <= b_m.
/// Both partitions must be non-empty.
PruneVerdict check_basic(const Partition& a, const Partition& b);

/// Cardinality bound: with k = |A ∩ B| (counted with multiplicity),
/// FAIL iff |A| <= 2|B| - k - 1. By default applies uniformly (k = 0
/// included); `require_common_part` restricts it to k > 0.
PruneVerdict check_cardinality(const Partition& a, const Partition& b,
                               bool require_common_part = false);

/// Prefix-sum dominance: FAIL iff sigma(A^(h)) < sigma(B^(h)) for some h
/// among the distinct values of A ∪ B. Both sides are step functions that
/// change only at part values, so those h suffice. Assumes sigma equality.
PruneVerdict check_prefix_sums(const Partition& a, const Partition& b);

/// Divisibility: with d = gcd of A's values, FAIL iff d > 1 and some part
/// of B is not divisible by d. Exposed standalone and behind an opt-in
/// pipeline flag; the standard pipelines do not run it.
PruneVerdict check_divisibility(const Partition& a, const Partition& b);

/// Removes the common part C = A ∩ B from both sides. The existence
/// verdict of (A, B) equals that of the returned pair.
std::pair<Partition, Partition> simplify_common(const Partition& a, const Partition& b);

/// True iff the tail merge below applies: |B| >= 2 and b_{m-1} < a_n < b_m.
bool tail_simplification_applies(const Partition& a, const Partition& b);

/// Tail merge: removes a_n from A and replaces b_m with b_m - a_n in B.
/// Equivalence holds in both directions under the precondition; throws
/// std::invalid_argument when it does not hold.
std::pair<Partition, Partition> simplify_tail(const Partition& a, const Partition& b);

}  // namespace sumcomp
