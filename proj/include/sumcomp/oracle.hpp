#pragma once

#include <cstdint>
#include <vector>

#include "sumcomp/partition.hpp"

namespace sumcomp {

/// Instance-size limits for the brute-force oracle (m^n assignments).
inline constexpr std::uint64_t kOracleMaxElements = 12;
inline constexpr std::uint64_t kOracleMaxBlocks = 6;

/// Ground-truth enumeration: assigns each of A's expanded elements to one
/// of |B| labeled blocks, keeps assignments whose block sums match B,
/// canonicalizes each block to a sorted multiset and deduplicates equal
/// ordered tuples. Deliberately independent of the production enumerator;
/// shares no search code with it. Throws ResourceLimitError beyond the
/// size limits. Result is sorted (set semantics).
std::vector<Decomposition> oracle_decompositions(const Partition& a, const Partition& b);

/// True iff at least one AB-decomposition exists; stops at the first hit.
bool oracle_exists(const Partition& a, const Partition& b);

/// Number of integer partitions of k, for the decomposition-count bound.
/// Supported for k <= 60; throws std::invalid_argument beyond.
std::uint64_t partition_count(std::uint64_t k);

}  // namespace sumcomp
