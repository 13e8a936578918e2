#include "doctest.h"

#include <tuple>

#include "oracles.hpp"
#include "tcore/core_tower.hpp"
#include "tcore/genfun.hpp"

using namespace tcore;

namespace {

std::vector<BigInt> head(const IntSeries& s, int count) {
    return {s.coeffs().begin(), s.coeffs().begin() + count};
}

std::vector<BigInt> big(std::initializer_list<long long> values) { return {values.begin(), values.end()}; }

}  // namespace

// Frozen values below were produced by a separate script that computes
// cores by rim-hook deletion and the closed forms with plain integer lists.

TEST_CASE("tower series: frozen coefficients") {
    CHECK(head(tower_series_closed(0, 2, 20), 21) ==
          big({0, 1, 0, 5, 0, 11, 6, 25, 12, 50, 40, 96, 80, 173, 170, 320, 316, 545, 590, 930, 1020}));
    CHECK(head(tower_series_closed(1, 2, 20), 21) ==
          big({0, 0, 2, 2, 2, 4, 14, 16, 18, 30, 54, 68, 94, 130, 196, 256, 330, 444, 618, 790, 1032}));
    CHECK(head(tower_series_closed(2, 2, 20), 21) ==
          big({0, 0, 0, 0, 4, 4, 8, 12, 16, 24, 36, 48, 84, 108, 156, 212, 280, 376, 508, 660, 892}));
    CHECK(head(tower_series_closed(1, 3, 20), 21) ==
          big({0, 0, 0, 3, 3, 6, 18, 24, 39, 45, 75, 99, 165, 207, 303, 417, 579, 762, 1011, 1332, 1764}));
    CHECK(head(tower_series_closed(0, 3, 11), 12) == big({0, 1, 4, 0, 11, 17, 12, 33, 59, 54, 114, 157}));
}

TEST_CASE("tower series: closed form against enumeration") {
    CHECK(head(tower_series_brute(0, 2, 3), 4) == big({0, 1, 0, 5}));
    CHECK(tower_series_brute(1, 3, 0) == IntSeries::zero(0));
    for (int t : {2, 3, 7})
        for (int j : {0, 1, 4}) {
            const auto closed = tower_series_closed(j, t, 18);
            CHECK(closed[0] == 0);
            if (j == 0) CHECK(closed[1] == 1);
            CHECK(closed == tower_series_brute(j, t, 18));
        }
}

TEST_CASE("a_t from diagram hook deletion") {
    for (int t : {2, 3, 4})
        for (int n = 0; n <= 14; ++n) {
            BigInt total = 0;
            for (const auto& lambda : enumerate_partitions(n)) total += oracle::core_by_hook_deletion(lambda, t).size();
            CHECK(core_size_sums(t, 14)[static_cast<std::size_t>(n)] == total);
        }
    CHECK(core_size_sums(2, 4) == big({0, 1, 0, 5, 0}));
}

TEST_CASE("telescoped sum of weighted tower rows") {
    for (int t : {2, 3})
        for (int j = 0; j <= 2; ++j) {
            IntSeries sum(60);
            BigInt scale = 1;
            for (int k = 0; k <= j; ++k, scale *= t) sum += tower_series_closed(k, t, 60) * scale;
            CHECK(sum == telescoped_tower_sum(j, t, 60));
        }
}

TEST_CASE("defect series") {
    CHECK(head(defect_series_closed(2, 20), 21) ==
          big({0, 0, 2, 2, 14, 16, 38, 52, 122, 158, 274, 380, 626, 846, 1280, 1732, 2586, 3436, 4862, 6458, 8940}));
    CHECK(head(defect_series_closed(3, 20), 21) ==
          big({0, 0, 0, 3, 3, 6, 18, 24, 39, 81, 111, 171, 273, 387, 555, 813, 1119, 1554, 2199, 2952, 3996}));
    CHECK(head(defect_series_closed(5, 15), 16) == big({0, 0, 0, 0, 0, 5, 5, 10, 15, 25, 50, 70, 105, 155, 225, 335}));

    CHECK(defect_series_brute(2, 0) == IntSeries::zero(0));
    CHECK(defect_series_brute(2, 2)[2] == 2);
    // each of (3), (2,1), (1,1,1) has 3-defect 1
    CHECK(defect_series_brute(3, 3)[3] == 3);
    for (int t : {2, 3, 4, 5, 9}) {
        const auto closed = defect_series_closed(t, 20);
        CHECK(closed[0] == 0);
        CHECK(closed[1] == 0);
        CHECK(closed == defect_series_brute(t, 20));
    }
}

TEST_CASE("generalized cores") {
    const auto two_cores = generalized_core_series_closed(0, 2, 60);
    for (int n = 0; n <= 60; ++n) {
        bool triangular = false;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k) triangular = triangular || k * (k + 1) / 2 == n;
        CHECK(two_cores[static_cast<std::size_t>(n)] == (triangular ? 1 : 0));
    }
    CHECK(head(generalized_core_series_brute(0, 2, 6), 7) == big({1, 1, 0, 1, 0, 0, 1}));
    CHECK(head(generalized_core_series_brute(0, 3, 10), 11) == big({1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2}));
    CHECK(generalized_core_series_brute(2, 5, 0) == IntSeries::one(0));
    for (auto [j, t] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {2, 2}})
        CHECK(generalized_core_series_closed(j, t, 18) == generalized_core_series_brute(j, t, 18));
}

TEST_CASE("product exponent must be t^(j+1), not t^j + 1") {
    // the readings coincide when t = 2, j = 0 and differ otherwise
    CHECK(generalized_core_series_with_exponent(0, 2, 2, 20) == generalized_core_series_brute(0, 2, 20));
    const auto brute = generalized_core_series_brute(0, 3, 20);
    const auto wrong = generalized_core_series_with_exponent(0, 3, 2, 20);
    CHECK(wrong != brute);
    const auto report = compare_series("alt exponent", 3, 0, wrong, brute);
    REQUIRE_FALSE(report.passed());
    CHECK(report.first_mismatch->n == 3);
    CHECK(generalized_core_series_with_exponent(1, 2, 3, 20) != generalized_core_series_brute(1, 2, 20));
}

TEST_CASE("brute builders are thread-count independent") {
    const BruteOptions four{4};
    CHECK(tower_series_brute(1, 2, 20, four) == tower_series_brute(1, 2, 20));
    CHECK(defect_series_brute(3, 20, four) == defect_series_brute(3, 20));
    CHECK(generalized_core_series_brute(1, 2, 20, BruteOptions{64}) == generalized_core_series_brute(1, 2, 20));
}

TEST_CASE("compare_series report") {
    auto a = tower_series_closed(0, 2, 10);
    const auto ok = compare_series("T", 2, 0, a, a);
    CHECK(ok.passed());
    CHECK(ok.order_checked == 10);
    auto b = a;
    b[7] += 1;
    const auto bad = compare_series("T", 2, 0, a, b);
    REQUIRE_FALSE(bad.passed());
    CHECK(bad.first_mismatch == Mismatch{7, BigInt(25), BigInt(26)});
    CHECK_THROWS_AS(compare_series("T", 2, 0, a, a.truncated(5)), SeriesOrderError);
}

TEST_CASE("congruences") {
    // n = 3, t = 2: a = 5, 3 p(3) = 9, both 1 mod 4
    CHECK(core_size_sums(2, 3)[3] == 5);
    CHECK(partition_count(3) * 3 % 4 == 1);
    const auto a3 = core_size_sums(3, 90);
    for (int k = 0; k <= 30; ++k) CHECK(a3[static_cast<std::size_t>(3 * k)] % 3 == 0);
    for (int t = 2; t <= 7; ++t) {
        CHECK(check_size_congruence(t, 200).passed());
        CHECK(check_multiple_congruence(t, 200, 1).passed());
    }
}

TEST_CASE("a_t(tn) is not always divisible by t^2") {
    // only (3,2,1) among the partitions of 6 has a nonempty 2-core
    BigInt a26 = 0;
    for (const auto& lambda : enumerate_partitions(6)) a26 += oracle::core_by_hook_deletion(lambda, 2).size();
    CHECK(a26 == 6);

    // first failing index tn and the residue a_t(tn) mod t^2, from an independent script
    const std::vector<std::tuple<int, int, int>> first{{2, 6, 2}, {3, 6, 3}, {4, 4, 4}, {5, 5, 10}, {6, 6, 30}, {7, 7, 7}};
    for (auto [t, n, residue] : first) {
        const auto report = check_multiple_congruence(t, 200);
        REQUIRE_FALSE(report.passed());
        CHECK(report.first_mismatch == Mismatch{n, BigInt(residue), BigInt(0)});
        const auto combined = check_congruence(t, 200);
        REQUIRE_FALSE(combined.passed());
        CHECK(combined.first_mismatch->n == n);
    }
}

TEST_CASE("recursion through regular partitions") {
    CHECK(regular_partition_series(2, 25) == regular_partition_series_brute(2, 25));
    // n = 3, t = 2: 9 - 2 * (2 p(1) p_2(1)) = 5
    CHECK(regular_partition_series(2, 1)[1] == 1);
    for (int t = 2; t <= 7; ++t) {
        const auto report = check_recursion(t, 200);
        CHECK(report.passed());
        CHECK(report.identity_name == "recursion");
    }
    CHECK(check_recursion(3, 0).passed());
}

TEST_CASE("defect coefficients are monotone") {
    for (int t : {2, 3, 5}) CHECK(check_monotonicity(t, 200).passed());
    const auto d = defect_series_closed(2, 2);
    CHECK(d[1] <= d[2]);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(tower_series_closed(0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(tower_series_closed(-1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(tower_series_closed(70, 2, 5), std::overflow_error);
    CHECK(checked_power(2, 62) == (1LL << 62));
    CHECK_THROWS_AS(checked_power(2, 63), std::overflow_error);
    // rows whose scale t^j exceeds the order contribute nothing
    CHECK(tower_series_closed(10, 2, 50) == IntSeries::zero(50));
}
