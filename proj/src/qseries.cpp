#include "tcore/qseries.hpp"

#include <string>

namespace tcore {

namespace {

void require_same_order(const IntSeries& a, const IntSeries& b) {
    if (a.order() != b.order())
        throw SeriesOrderError("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                               std::to_string(b.order()));
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

}  // namespace

IntSeries::IntSeries(int order) {
    require_order(order);
    coeffs_.assign(idx(order) + 1, BigInt(0));
}

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a series needs at least the constant coefficient");
}

IntSeries IntSeries::one(int order) { return monomial(0, order); }

IntSeries IntSeries::monomial(int k, int order, BigInt coeff) {
    IntSeries s(order);
    if (k < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    if (k <= order) s.coeffs_[idx(k)] = std::move(coeff);
    return s;
}

IntSeries IntSeries::truncated(int order) const {
    require_order(order);
    if (order > this->order())
        throw SeriesOrderError("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                               std::to_string(order));
    return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

IntSeries& IntSeries::operator+=(const IntSeries& other) {
    require_same_order(*this, other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& other) {
    require_same_order(*this, other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

IntSeries& IntSeries::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }
IntSeries operator*(IntSeries a, const BigInt& scalar) { return a *= scalar; }
IntSeries operator*(const BigInt& scalar, IntSeries a) { return a *= scalar; }

IntSeries operator-(IntSeries a) {
    a *= BigInt(-1);
    return a;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    require_same_order(a, b);
    const int order = a.order();
    IntSeries c(order);
    for (int i = 0; i <= order; ++i) {
        if (a[idx(i)].is_zero()) continue;
        for (int k = 0; i + k <= order; ++k) {
            if (b[idx(k)].is_zero()) continue;
            c[idx(i + k)] += a[idx(i)] * b[idx(k)];
        }
    }
    return c;
}

IntSeries divide(const IntSeries& a, const IntSeries& b) {
    require_same_order(a, b);
    const BigInt& lead = b[0];
    if (lead != 1 && lead != -1)
        throw std::domain_error("divisor must have constant term +1 or -1, got " + lead.str());
    const int order = a.order();
    IntSeries c(order);
    for (int n = 0; n <= order; ++n) {
        BigInt acc = a[idx(n)];
        for (int k = 1; k <= n; ++k)
            if (!b[idx(k)].is_zero()) acc -= b[idx(k)] * c[idx(n - k)];
        c[idx(n)] = lead == 1 ? std::move(acc) : BigInt(-acc);
    }
    return c;
}

IntSeries substitute_power(const IntSeries& f, long long m) {
    if (m < 1) throw std::invalid_argument("substitution power must be positive");
    IntSeries g(f.order());
    for (long long n = 0; n * m <= f.order(); ++n) g[static_cast<std::size_t>(n * m)] = f[static_cast<std::size_t>(n)];
    return g;
}

IntSeries q_derivative(const IntSeries& f) {
    IntSeries g(f.order());
    for (int n = 1; n <= f.order(); ++n) g[idx(n)] = f[idx(n)] * n;
    return g;
}

IntSeries pochhammer_inf(long long a, long long e, int order) {
    if (a < 1 || e < 1) throw std::invalid_argument("pochhammer_inf needs a >= 1 and e >= 1");
    IntSeries s = IntSeries::one(order);
    for (long long m = a; m <= order; m += a) {
        // multiply by (1 - q^m) e times, in place from the top down
        for (long long rep = 0; rep < e; ++rep)
            for (long long n = order; n >= m; --n) s[static_cast<std::size_t>(n)] -= s[static_cast<std::size_t>(n - m)];
    }
    return s;
}

std::vector<BigInt> divisor_sums(int order) {
    require_order(order);
    std::vector<BigInt> sigma(idx(order) + 1, BigInt(0));
    for (int n = 1; n <= order; ++n) {
        long long sum = 0;
        for (int d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sum += d;
            if (d != n / d) sum += n / d;
        }
        sigma[idx(n)] = sum;
    }
    return sigma;
}

IntSeries g2_zero(int order) { return IntSeries(divisor_sums(order)); }

IntSeries g2_zero_lambert(int order) {
    IntSeries s(order);
    // k q^k / (1 - q^k) = Σ_{l ≥ 1} k q^{kl}
    for (int k = 1; k <= order; ++k)
        for (int n = k; n <= order; n += k) s[idx(n)] += k;
    return s;
}

}  // namespace tcore
