#include "sumcomp/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sumcomp/errors.hpp"

namespace sumcomp {

namespace {

void check_limits(const Partition& a, const Partition& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("oracle requires non-empty partitions");
    }
    if (a.size() > kOracleMaxElements || b.size() > kOracleMaxBlocks) {
        throw ResourceLimitError("oracle limits exceeded (n <= " +
                                 std::to_string(kOracleMaxElements) + ", m <= " +
                                 std::to_string(kOracleMaxBlocks) + ")");
    }
}

// Assigns elems[pos..] to blocks; running block sums must never exceed
// their targets (elements are positive, so such assignments cannot
// recover). existence_only stops at the first complete assignment.
struct Assigner {
    const std::vector<Value>& elems;
    const std::vector<Value>& targets;
    std::vector<Value> sums;
    std::vector<std::vector<Value>> blocks;
    std::set<std::vector<std::vector<Value>>>* found;
    bool existence_only = false;
    bool hit = false;

    void assign(std::size_t pos) {
        if (hit && existence_only) return;
        if (pos == elems.size()) {
            for (std::size_t j = 0; j < targets.size(); ++j) {
                if (sums[j] != targets[j]) return;
            }
            hit = true;
            if (found) {
                auto key = blocks;
                for (auto& blk : key) std::sort(blk.begin(), blk.end());
                found->insert(std::move(key));
            }
            return;
        }
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (sums[j] + elems[pos] > targets[j]) continue;
            sums[j] += elems[pos];
            blocks[j].push_back(elems[pos]);
            assign(pos + 1);
            blocks[j].pop_back();
            sums[j] -= elems[pos];
            if (hit && existence_only) return;
        }
    }
};

}  // namespace

std::vector<Decomposition> oracle_decompositions(const Partition& a, const Partition& b) {
    check_limits(a, b);
    const std::vector<Value> elems = a.expand();
    const std::vector<Value> targets = b.expand();
    std::set<std::vector<std::vector<Value>>> found;
    Assigner assigner{elems, targets, std::vector<Value>(targets.size(), 0),
                      std::vector<std::vector<Value>>(targets.size()), &found};
    assigner.assign(0);

    std::vector<Decomposition> out;
    out.reserve(found.size());
    for (const auto& tuple : found) {
        Decomposition d;
        d.blocks.reserve(tuple.size());
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            d.blocks.push_back({targets[j], Partition::from_values(tuple[j])});
        }
        out.push_back(std::move(d));
    }
    return out;
}

bool oracle_exists(const Partition& a, const Partition& b) {
    check_limits(a, b);
    const std::vector<Value> elems = a.expand();
    const std::vector<Value> targets = b.expand();
    Assigner assigner{elems, targets, std::vector<Value>(targets.size(), 0),
                      std::vector<std::vector<Value>>(targets.size()), nullptr};
    assigner.existence_only = true;
    assigner.assign(0);
    return assigner.hit;
}

std::uint64_t partition_count(std::uint64_t k) {
    if (k > 60) throw std::invalid_argument("partition_count supports k <= 60");
    std::vector<std::uint64_t> ways(k + 1, 0);
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= k; ++part) {
        for (std::uint64_t total = part; total <= k; ++total) {
            ways[total] += ways[total - part];
        }
    }
    return ways[k];
}

}  // namespace sumcomp
