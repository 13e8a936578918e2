#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tcore/partition.hpp"

namespace tcore {

/// Binary operation on series of different truncation orders.
class SeriesOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncated formal power series Σ_{n ≤ N} c_n q^n with exact integer
/// coefficients. The truncation order N is part of the value; arithmetic
/// between series of different orders throws SeriesOrderError unless one side
/// is explicitly truncated first.
class IntSeries {
public:
    /// The zero series of order N.
    explicit IntSeries(int order);
    /// Coefficients c_0..c_N; the order is coeffs.size() - 1.
    explicit IntSeries(std::vector<BigInt> coeffs);

    static IntSeries zero(int order) { return IntSeries(order); }
    static IntSeries one(int order);
    /// q^k truncated at `order` (zero if k > order).
    static IntSeries monomial(int k, int order, BigInt coeff = 1);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
    BigInt& operator[](std::size_t n) { return coeffs_.at(n); }

    /// Same series with everything above q^order dropped; order must not exceed this one's.
    IntSeries truncated(int order) const;

    IntSeries& operator+=(const IntSeries& other);
    IntSeries& operator-=(const IntSeries& other);
    IntSeries& operator*=(const BigInt& scalar);

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

IntSeries operator+(IntSeries a, const IntSeries& b);
IntSeries operator-(IntSeries a, const IntSeries& b);
IntSeries operator-(IntSeries a);
IntSeries operator*(IntSeries a, const BigInt& scalar);
IntSeries operator*(const BigInt& scalar, IntSeries a);
/// Cauchy product truncated at the common order.
IntSeries operator*(const IntSeries& a, const IntSeries& b);

/// Exact quotient a / b. b's constant term must be +1 or -1 (std::domain_error otherwise).
IntSeries divide(const IntSeries& a, const IntSeries& b);

/// f(q^m): coefficient n is f[n/m] when m divides n, zero otherwise.
IntSeries substitute_power(const IntSeries& f, long long m);

/// q d/dq: coefficient n becomes n * f[n].
IntSeries q_derivative(const IntSeries& f);

/// (q^a; q^a)_∞^e truncated at `order`: Π_{k ≥ 1, ak ≤ order} (1 - q^{ak})^e.
IntSeries pochhammer_inf(long long a, long long e, int order);

/// σ_1(n) for n = 0..order, with σ_1(0) := 0.
std::vector<BigInt> divisor_sums(int order);

/// G₂⁰(q) = Σ_{n≥1} σ_1(n) q^n.
IntSeries g2_zero(int order);
/// G₂⁰ built from its Lambert form Σ_{k≥1} k q^k / (1 - q^k).
IntSeries g2_zero_lambert(int order);

}  // namespace tcore
