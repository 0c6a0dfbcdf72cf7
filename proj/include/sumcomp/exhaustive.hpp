#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sumcomp/partition.hpp"

namespace sumcomp {

struct EnumerateOptions {
    /// Run the necessary-condition preamble at every recursion level.
    /// Disabling it never changes the emitted set, only the speed.
    bool prune = true;
    /// Restrict the cardinality bound to instances with a non-empty
    /// common part (the guarded form); the uniform bound is the default.
    bool cardinality_requires_common = false;
    /// Also run the gcd-divisibility check in the preamble (opt-in; not
    /// part of the standard pipeline).
    bool use_divisibility_check = false;
    /// Cap on the total number of blocks the collecting form may store;
    /// exceeding it raises ResourceLimitError.
    std::uint64_t max_stored_blocks = 10'000'000;
    /// Cooperative deadline; enumeration stops and flags timed_out.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerationStats {
    std::uint64_t decompositions = 0;
    /// High-water mark of the enumerator's live per-level state, in bytes
    /// (partitions and block prefixes owned by active recursion frames).
    /// Constant in the number of emitted decompositions.
    std::size_t peak_live_bytes = 0;
    bool timed_out = false;
};

/// Streams every AB-decomposition to the visitor, one at a time, in a
/// fixed deterministic order; the visitor returns false to stop early.
/// The decomposition passed to the visitor is only valid for the call.
/// Both partitions must be non-empty.
void sum_comp_stream(const Partition& a, const Partition& b,
                     const std::function<bool(const Decomposition&)>& visit,
                     const EnumerateOptions& opts = {}, EnumerationStats* stats = nullptr);

/// Collects all AB-decompositions. Throws ResourceLimitError when the
/// stored-block budget would be exceeded.
std::vector<Decomposition> sum_comp(const Partition& a, const Partition& b,
                                    const EnumerateOptions& opts = {});

/// Same set as sum_comp, with the top-level branches (the solutions for
/// the smallest target) fanned out across a worker pool. Results are
/// concatenated in branch order, so the output equals the sequential one.
std::vector<Decomposition> sum_comp_parallel(const Partition& a, const Partition& b,
                                             unsigned threads,
                                             const EnumerateOptions& opts = {});

/// Number of AB-decompositions, streamed with O(depth) memory.
std::uint64_t count_decompositions(const Partition& a, const Partition& b,
                                   const EnumerateOptions& opts = {},
                                   EnumerationStats* stats = nullptr);

/// Collapses ordered decompositions that differ only by permuting blocks
/// assigned to equal targets: sorts each decomposition's blocks and
/// deduplicates. Off the default path; used by the CLI --canonical mode.
std::vector<Decomposition> canonicalize(std::vector<Decomposition> decompositions);

}  // namespace sumcomp
