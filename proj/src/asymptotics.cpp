#include "tcore/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "tcore/genfun.hpp"

namespace tcore {

namespace {

Real pi() { return boost::math::constants::pi<Real>(); }

Real tolerance(unsigned digits) { return pow(Real(10), -static_cast<int>(digits)); }

Real to_real(const BigInt& v) { return Real(v.str()); }

void require_eps(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

long long sigma1(long long n) {
    long long s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

}  // namespace

WorkingPrecision::WorkingPrecision(unsigned digits) : previous_(Real::default_precision()) {
    if (digits == 0) throw std::invalid_argument("working precision must be at least one digit");
    Real::default_precision(digits);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_); }

InghamParameters partition_ingham_parameters() {
    return {pi() * pi() / 6, Real(1) / 2, 1 / sqrt(2 * pi())};
}

Real ingham_predict(const Real& A, const Real& alpha, const Real& ell, long n) {
    if (A <= 0) throw std::invalid_argument("Ingham constant A must be positive");
    if (n < 1) throw std::invalid_argument("Ingham prediction needs n >= 1");
    const Real nn(n);
    return ell * pow(A, alpha / 2 + Real(1) / 4) / (2 * sqrt(pi()) * pow(nn, alpha / 2 + Real(3) / 4)) *
           exp(2 * sqrt(A * nn));
}

Real ingham_predict(const InghamParameters& params, long n) {
    return ingham_predict(params.A, params.alpha, params.ell, n);
}

Real hardy_ramanujan(long n) {
    if (n < 1) throw std::invalid_argument("Hardy-Ramanujan formula needs n >= 1");
    const Real nn(n);
    return exp(pi() * sqrt(2 * nn / 3)) / (4 * nn * sqrt(Real(3)));
}

DefectPrediction defect_predict(int t, int n) {
    if (t < 2) throw std::invalid_argument("modulus t must be at least 2");
    if (n < 1) throw std::invalid_argument("defect prediction needs n >= 1");
    const Real nn(n);
    const Real main = sqrt(Real(3)) / (12 * Real(t - 1)) * exp(pi() * sqrt(2 * nn / 3));
    const Real np = to_real(partition_count(n) * n) / (t - 1);
    return {main, np};
}

std::vector<AsymptoticSample> defect_samples(int t, std::span<const int> ns, unsigned digits) {
    WorkingPrecision scope(digits);
    if (ns.empty()) return {};
    const int top = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 1) throw std::invalid_argument("sample indices must be >= 1");
    const IntSeries exact = defect_series_closed(t, top);
    std::vector<AsymptoticSample> out;
    out.reserve(ns.size());
    for (int n : ns) {
        auto prediction = defect_predict(t, n);
        const BigInt& value = exact[static_cast<std::size_t>(n)];
        Real ratio = to_real(value) / prediction.np_over_t1;
        out.push_back({n, value, std::move(prediction.main_term), std::move(prediction.np_over_t1), std::move(ratio)});
    }
    return out;
}

G2TransformSides g2_transform_sides(long m, double eps, unsigned digits) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    require_eps(eps);
    WorkingPrecision scope(digits);
    const Real x = Real(m) * Real(eps);
    const Real tol = tolerance(digits);

    // Lambert sum; terms decrease in k
    Real direct = 0;
    for (long k = 1;; ++k) {
        const Real qk = exp(-x * k);
        const Real term = k * qk / (1 - qk);
        direct += term;
        if (term < tol * direct) break;
    }

    const Real dual_rate = 4 * pi() * pi() / x;
    Real dual = 0;
    for (long n = 1;; ++n) {
        const Real term = sigma1(n) * exp(-dual_rate * n);
        dual += term;
        if (term < tol) break;
    }
    const Real transformed = Real(1) / 24 + pi() * pi() / (6 * x * x) * (1 - 24 * dual) - 1 / (2 * x);
    return {direct, transformed};
}

Real g2_transform_check(long m, double eps, unsigned digits) {
    const auto sides = g2_transform_sides(m, eps, digits);
    WorkingPrecision scope(digits);
    return abs(sides.direct - sides.transformed) / abs(sides.direct);
}

Real eta_inverse_product(double eps, unsigned digits) {
    require_eps(eps);
    WorkingPrecision scope(digits);
    const Real q = exp(-Real(eps));
    const Real tol = tolerance(digits + 5);
    Real product = 1;
    Real qk = q;
    while (qk > tol) {
        product *= 1 - qk;
        qk *= q;
    }
    return 1 / product;
}

Real eta_inverse_sum(double eps, unsigned digits) {
    require_eps(eps);
    WorkingPrecision scope(digits);
    const Real q = exp(-Real(eps));
    const Real tol = tolerance(digits + 5);
    // terms grow until n ≈ π²/(6ε²), then decay; widen the table until the tail is negligible
    const double peak = 1.6449340668482264 / (eps * eps);
    for (int top = 64;; top *= 2) {
        const auto p = partition_counts(top);
        Real sum = 0;
        Real qn = 1;
        for (int n = 0; n <= top; ++n, qn *= q) {
            const Real term = to_real(p[static_cast<std::size_t>(n)]) * qn;
            sum += term;
            if (n > peak && term < tol * sum) return sum;
        }
    }
}

Real eta_asymptotic_check(double eps, unsigned digits) {
    const Real lhs = eta_inverse_product(eps, digits);
    WorkingPrecision scope(digits);
    const Real e(eps);
    const Real rhs = sqrt(e) * exp(pi() * pi() / (6 * e)) / sqrt(2 * pi());
    return lhs / rhs;
}

}  // namespace tcore
