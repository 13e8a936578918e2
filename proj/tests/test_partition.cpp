#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tcore/partition.hpp"

using namespace tcore;

TEST_CASE("make_partition validates parts") {
    const auto lambda = make_partition({5, 4, 2, 2, 1});
    CHECK(lambda.size() == 14);
    CHECK(lambda.length() == 5);

    const auto empty = make_partition({});
    CHECK(empty.empty());
    CHECK(empty.size() == 0);

    try {
        make_partition({2, 3});
        FAIL("increasing parts accepted");
    } catch (const PartitionError& e) {
        CHECK(e.index() == 1);
    }
    try {
        make_partition({3, 0});
        FAIL("zero part accepted");
    } catch (const PartitionError& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(make_partition({-1}), PartitionError);
}

TEST_CASE("hook lengths") {
    using Grid = std::vector<std::vector<int>>;
    CHECK(hook_lengths(make_partition({5, 4, 2, 2, 1})) == Grid{{9, 7, 4, 3, 1}, {7, 5, 2, 1}, {4, 2}, {3, 1}, {1}});
    CHECK(hook_lengths(Partition()).empty());
    CHECK(hook_lengths(make_partition({6})) == Grid{{6, 5, 4, 3, 2, 1}});
    CHECK(hook_lengths(make_partition({1, 1, 1})) == Grid{{3}, {2}, {1}});
}

TEST_CASE("hook multiset is invariant under conjugation") {
    for (int n = 0; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            auto flatten = [](const std::vector<std::vector<int>>& grid) {
                std::vector<int> all;
                for (const auto& row : grid) all.insert(all.end(), row.begin(), row.end());
                std::sort(all.begin(), all.end());
                return all;
            };
            const auto conj = oracle::conjugate(lambda);
            REQUIRE(conj.size() == lambda.size());
            CHECK(flatten(hook_lengths(lambda)) == flatten(hook_lengths(conj)));
        }
    }
}

TEST_CASE("first-column hook lengths strictly decrease") {
    for (int n = 1; n <= 16; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto hooks = hook_lengths(lambda);
            for (std::size_t i = 1; i < hooks.size(); ++i) CHECK(hooks[i][0] < hooks[i - 1][0]);
        }
}

TEST_CASE("enumeration order and counts") {
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    const auto four = enumerate_partitions(4);
    const std::vector<Partition> expected{make_partition({4}), make_partition({3, 1}), make_partition({2, 2}),
                                          make_partition({2, 1, 1}), make_partition({1, 1, 1, 1})};
    CHECK(four == expected);

    CHECK(enumerate_partitions(30).size() == 5604);

    // reverse-lexicographic, each exactly once, all of size n
    for (int n = 1; n <= 15; ++n) {
        const auto ps = enumerate_partitions(n);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
        CHECK(std::all_of(ps.begin(), ps.end(), [n](const Partition& p) { return p.size() == n; }));
    }
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("partition_count agrees with enumeration and an independent table") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(100) == BigInt("190569292"));

    const auto table = oracle::partition_counts_by_parts(200);
    CHECK(partition_counts(200) == table);
    for (int n = 0; n <= 30; ++n) CHECK(BigInt(enumerate_partitions(n).size()) == partition_count(n));
}

TEST_CASE("comma-list round trip and parse errors") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : enumerate_partitions(n)) CHECK(parse_partition(to_comma_list(lambda)) == lambda);

    CHECK(to_string(make_partition({5, 4, 2, 2, 1})) == "(5,4,2,2,1)");
    CHECK(to_string(Partition()) == "∅");
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("5,,1"), PartitionError);
    CHECK_THROWS_AS(parse_partition("5, 1"), PartitionError);
    CHECK_THROWS_AS(parse_partition("a"), PartitionError);
    CHECK_THROWS_AS(parse_partition("1,2"), PartitionError);
}
