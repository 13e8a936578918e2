#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcore/qseries.hpp"

namespace tcore {

/// Where a closed form and its brute-force counterpart first disagree.
struct Mismatch {
    int n;
    BigInt closed_value;
    BigInt brute_value;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of checking an identity coefficient by coefficient up to `order_checked`.
/// Passing means no mismatch was recorded.
struct VerificationReport {
    std::string identity_name;
    int t = 0;
    std::optional<int> j;
    int order_checked = 0;
    std::optional<Mismatch> first_mismatch;

    bool passed() const noexcept { return !first_mismatch.has_value(); }
};

/// Parallelism for the enumeration-based builders. Each n is handled by one
/// worker; results do not depend on the thread count.
struct BruteOptions {
    unsigned threads = 1;
};

/// t^k, throwing std::overflow_error if it does not fit in a signed 64-bit integer.
long long checked_power(int t, int k);

/// 1 / (q)_∞ to the given order.
IntSeries partition_series(int order);

/// Σ_λ |β_j(t;λ)| q^{|λ|} = (t^j G₂⁰(q^{t^j}) - t^{j+2} G₂⁰(q^{t^{j+1}})) / (q)_∞.
IntSeries tower_series_closed(int j, int t, int order);
/// Same series by summing tower-row sizes over every partition of each n.
IntSeries tower_series_brute(int j, int t, int order, BruteOptions opts = {});

/// Σ_{k ≤ j} t^k T_{k,t} written as (G₂⁰(q) - t^{2j+2} G₂⁰(q^{t^{j+1}})) / (q)_∞.
IntSeries telescoped_tower_sum(int j, int t, int order);

/// Σ_λ d_t(λ) q^{|λ|} = Σ_{j≥1} t^j G₂⁰(q^{t^j}) / (q)_∞. Terms with t^j > order vanish.
IntSeries defect_series_closed(int t, int order);
IntSeries defect_series_brute(int t, int order, BruteOptions opts = {});

/// Count of generalized (j,t)-cores: (q^M; q^M)_∞^M / (q)_∞ with M = t^{j+1}.
IntSeries generalized_core_series_closed(int j, int t, int order);
/// Same product with an arbitrary exponent in place of M; used to rule out
/// alternative readings of the exponent.
IntSeries generalized_core_series_with_exponent(int j, int t, long long exponent, int order);
IntSeries generalized_core_series_brute(int j, int t, int order, BruteOptions opts = {});

/// (q^t; q^t)_∞ / (q)_∞: partitions with no part divisible by t.
IntSeries regular_partition_series(int t, int order);
/// Same counts by enumeration.
IntSeries regular_partition_series_brute(int t, int order);

/// a_t(0..order): total size of the t-cores of all partitions of n, from the closed form.
std::vector<BigInt> core_size_sums(int t, int order);

/// Coefficientwise comparison of two series of equal order.
VerificationReport compare_series(std::string name, int t, std::optional<int> j, const IntSeries& closed,
                                  const IntSeries& brute);

/// a_t(n) ≡ n p(n) (mod t²) for n ≤ order. A mismatch reports both residues.
VerificationReport check_size_congruence(int t, int order);

/// a_t(tn) ≡ 0 (mod t^exponent) for tn ≤ order. A mismatch reports (tn, a_t(tn) mod t^exponent, 0).
/// Holds for exponent 1; for exponent 2 it fails for every t (e.g. a_2(6) = 6).
VerificationReport check_multiple_congruence(int t, int order, int exponent = 2);

/// Both congruences above (exponent 2), first failure in increasing n.
VerificationReport check_congruence(int t, int order);

/// a_t(n) = n p(n) - t Σ_{t | i} i p(i/t) p_t(n - i) for n ≤ order. The regular
/// partition counts come from the product identity and are first checked
/// against enumeration up to min(order, 25).
VerificationReport check_recursion(int t, int order);

/// Coefficients of the defect series are nonnegative and weakly increasing from n = 1.
/// A mismatch reports (n, c_n, c_{n-1}).
VerificationReport check_monotonicity(int t, int order);

}  // namespace tcore
