#include <doctest.h>

#include "sumcomp/errors.hpp"
#include "sumcomp/oracle.hpp"

using namespace sumcomp;

namespace {

Partition P(std::initializer_list<Value> v) { return Partition::from_values(v); }

}  // namespace

TEST_CASE("oracle decompositions on the worked examples") {
    CHECK(oracle_decompositions(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7})).size() == 8);
    CHECK(oracle_decompositions(P({1, 1, 1, 1, 1, 2, 2, 3}), P({2, 3, 7})).size() == 6);
    CHECK(oracle_decompositions(P({1, 3}), P({2, 2})).empty());

    for (const Decomposition& d : oracle_decompositions(P({1, 2, 2, 3, 4, 5}), P({5, 5, 7}))) {
        CHECK(is_valid_decomposition(d, P({1, 2, 2, 3, 4, 5}), P({5, 5, 7})));
    }
}

TEST_CASE("oracle existence") {
    CHECK(oracle_exists(P({1, 1, 2, 2, 4}), P({1, 3, 6})));
    CHECK_FALSE(oracle_exists(P({3, 3}), P({2, 4})));
    CHECK(oracle_exists(P({2, 5, 9}), P({2, 5, 9})));
}

TEST_CASE("oracle size limits are enforced") {
    Partition a13 = Partition({{1, 13}});
    CHECK_THROWS_AS(oracle_decompositions(a13, P({13})), ResourceLimitError);
    Partition a12 = Partition({{1, 12}});
    CHECK_THROWS_AS(oracle_exists(a12, Partition({{1, 7}, {5, 1}})), ResourceLimitError);
    CHECK(oracle_exists(a12, P({5, 7})));
}

TEST_CASE("partition counting function") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(2) == 2);
    CHECK(partition_count(3) == 3);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(2) * partition_count(3) == 6);  // the d(A,B)=6 bound case
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(60) == 966467);
    CHECK_THROWS_AS(partition_count(61), std::invalid_argument);
}
