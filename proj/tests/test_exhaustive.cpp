#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumcomp/errors.hpp"
#include "sumcomp/exhaustive.hpp"
#include "sumcomp/oracle.hpp"
#include "test_support.hpp"

using namespace sumcomp;

namespace {

Partition P(std::initializer_list<Value> v) { return Partition::from_values(v); }

Decomposition make_decomposition(const Partition& b,
                                 std::initializer_list<std::initializer_list<Value>> blocks) {
    Decomposition d;
    auto targets = b.expand();
    std::size_t j = 0;
    for (auto blk : blocks) {
        d.blocks.push_back({targets[j++], Partition::from_values(blk)});
    }
    return d;
}

std::set<Decomposition> as_set(const std::vector<Decomposition>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("worked example: [1,2,2,3,4,5] against [5,5,7]") {
    Partition a = P({1, 2, 2, 3, 4, 5});
    Partition b = P({5, 5, 7});
    std::vector<Decomposition> got = sum_comp(a, b);
    CHECK(got.size() == 8);

    std::set<Decomposition> expected{
        make_decomposition(b, {{2, 3}, {1, 4}, {2, 5}}),
        make_decomposition(b, {{1, 4}, {2, 3}, {2, 5}}),
        make_decomposition(b, {{1, 2, 2}, {5}, {3, 4}}),
        make_decomposition(b, {{2, 3}, {5}, {1, 2, 4}}),
        make_decomposition(b, {{1, 4}, {5}, {2, 2, 3}}),
        make_decomposition(b, {{5}, {1, 2, 2}, {3, 4}}),
        make_decomposition(b, {{5}, {2, 3}, {1, 2, 4}}),
        make_decomposition(b, {{5}, {1, 4}, {2, 2, 3}}),
    };
    CHECK(as_set(got) == expected);
    for (const Decomposition& d : got) CHECK(is_valid_decomposition(d, a, b));
}

TEST_CASE("worked counts") {
    CHECK(count_decompositions(P({50, 100, 100, 200, 250, 300}), P({300, 300, 400})) == 6);
    CHECK(count_decompositions(P({1, 1, 1, 1, 1, 2, 2, 3}), P({2, 3, 7})) == 6);
    CHECK(count_decompositions(P({1, 1, 1}), P({3})) == 1);
    CHECK(count_decompositions(P({1, 3}), P({2, 2})) == 0);
    CHECK(count_decompositions(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7})) == 8);
}

TEST_CASE("streaming early stop and zero-visit prunes") {
    Partition a = P({1, 2, 2, 3, 4, 5});
    Partition b = P({5, 5, 7});
    int visits = 0;
    sum_comp_stream(a, b, [&](const Decomposition&) {
        ++visits;
        return false;
    });
    CHECK(visits == 1);

    visits = 0;
    sum_comp_stream(a, b, [&](const Decomposition&) {
        ++visits;
        return true;
    });
    CHECK(visits == 8);

    visits = 0;
    sum_comp_stream(P({1, 2}), P({4}), [&](const Decomposition&) {
        ++visits;
        return true;
    });
    CHECK(visits == 0);
}

TEST_CASE("disabling the preamble never changes the output") {
    SplitMix64 rng(41);
    EnumerateOptions no_prune;
    no_prune.prune = false;
    for (int i = 0; i < 150; ++i) {
        Rule rule = (i % 2 == 0) ? Rule::kR1 : Rule::kR2;
        Instance inst = testing::random_instance(rng, 3, 9, 2, 4, 1, 10, rule);
        CHECK(sum_comp(inst.a, inst.b) == sum_comp(inst.a, inst.b, no_prune));
    }
}

TEST_CASE("output agrees with the assignment oracle, element by element") {
    SplitMix64 rng(42);
    for (int i = 0; i < 150; ++i) {
        Rule rule = (i % 2 == 0) ? Rule::kR1 : Rule::kR2;
        Instance inst = testing::random_instance(rng, 3, 10, 2, 4, 1, 15, rule);
        std::vector<Decomposition> got = sum_comp(inst.a, inst.b);
        std::vector<Decomposition> want = oracle_decompositions(inst.a, inst.b);
        CHECK(as_set(got) == as_set(want));
        CHECK(got.size() == want.size());
        for (const Decomposition& d : got) CHECK(is_valid_decomposition(d, inst.a, inst.b));
    }
}

TEST_CASE("count stays within the partition-function bound") {
    SplitMix64 rng(43);
    int bounded_cases = 0;
    for (int i = 0; bounded_cases < 200 && i < 2000; ++i) {
        Instance inst = testing::random_instance(rng, 3, 9, 2, 4, 1, 8, Rule::kR1);
        auto targets = inst.b.expand();
        std::uint64_t bound = 1;
        bool in_range = true;
        for (std::size_t j = 0; j + 1 < targets.size(); ++j) {
            if (targets[j] > 60) {
                in_range = false;
                break;
            }
            bound *= partition_count(targets[j]);
        }
        if (!in_range) continue;
        ++bounded_cases;
        std::uint64_t count = count_decompositions(inst.a, inst.b);
        CHECK(count >= 1);  // R1 guarantees existence
        CHECK(count <= bound);
    }
    CHECK(bounded_cases == 200);
}

TEST_CASE("swapping blocks of equal targets yields distinct ordered results") {
    // both orderings of ([2,3], [1,4]) over the two 5-targets are counted
    Partition a = P({1, 2, 3, 4});
    Partition b = P({5, 5});
    std::vector<Decomposition> got = sum_comp(a, b);
    CHECK(got.size() == 2);
    CHECK(got[0].blocks[0].parts == got[1].blocks[1].parts);
    CHECK(got[0].blocks[1].parts == got[1].blocks[0].parts);

    std::vector<Decomposition> collapsed = canonicalize(got);
    CHECK(collapsed.size() == 1);
}

TEST_CASE("canonical mode collapses example 3 to four block-multisets") {
    std::vector<Decomposition> got = sum_comp(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7}));
    CHECK(canonicalize(got).size() == 4);
}

TEST_CASE("stored-block budget is a reported error") {
    EnumerateOptions opts;
    opts.max_stored_blocks = 5;
    CHECK_THROWS_AS(sum_comp(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7}), opts), ResourceLimitError);
    // streaming and counting are unaffected by the collector budget
    CHECK(count_decompositions(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7}), opts) == 8);
}

TEST_CASE("streaming keeps per-level state small") {
    EnumerationStats stats;
    count_decompositions(P({1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7}), P({8, 10, 18}), {}, &stats);
    CHECK(stats.decompositions == 131);
    CHECK(stats.peak_live_bytes < 64 * 1024);
    CHECK_FALSE(stats.timed_out);
}

TEST_CASE("parallel collection equals the sequential output") {
    SplitMix64 rng(44);
    for (int i = 0; i < 40; ++i) {
        Rule rule = (i % 2 == 0) ? Rule::kR1 : Rule::kR2;
        Instance inst = testing::random_instance(rng, 4, 11, 2, 4, 1, 15, rule);
        std::vector<Decomposition> sequential = sum_comp(inst.a, inst.b);
        CHECK(sum_comp_parallel(inst.a, inst.b, 4) == sequential);
        CHECK(count_decompositions(inst.a, inst.b) == sequential.size());
    }
    // budget still applies across workers
    EnumerateOptions opts;
    opts.max_stored_blocks = 5;
    CHECK_THROWS_AS(sum_comp_parallel(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7}), 4, opts),
                    ResourceLimitError);
}

TEST_CASE("deterministic emission order") {
    Partition a = P({1, 2, 2, 3, 4, 5});
    Partition b = P({5, 5, 7});
    std::vector<std::string> first, second;
    sum_comp_stream(a, b, [&](const Decomposition& d) {
        first.push_back(to_text(d));
        return true;
    });
    sum_comp_stream(a, b, [&](const Decomposition& d) {
        second.push_back(to_text(d));
        return true;
    });
    CHECK(first == second);
    CHECK(std::set<std::string>(first.begin(), first.end()).size() == first.size());
}
