#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "tcore/partition.hpp"

namespace tcore {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the default MPFR working precision (decimal digits) for the current
/// scope and restores the previous one on exit.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned digits);
    ~WorkingPrecision();
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    unsigned previous_;
};

/// Constants of f(e^{-ε}) ~ ℓ ε^α e^{A/ε}.
struct InghamParameters {
    Real A;
    Real alpha;
    Real ell;
};

/// A = π²/6, α = 1/2, ℓ = 1/√(2π): the behaviour of 1/(q)_∞ near q = 1.
InghamParameters partition_ingham_parameters();

/// ℓ A^{α/2+1/4} / (2√π n^{α/2+3/4}) · e^{2√(An)}.
Real ingham_predict(const Real& A, const Real& alpha, const Real& ell, long n);
Real ingham_predict(const InghamParameters& params, long n);

/// e^{π√(2n/3)} / (4n√3).
Real hardy_ramanujan(long n);

struct DefectPrediction {
    Real main_term;    // √3 / (12(t-1)) · e^{π√(2n/3)}
    Real np_over_t1;   // n p(n) / (t-1), with exact p(n)
};

DefectPrediction defect_predict(int t, int n);

/// One row of the average-defect table. `exact_value` is copied from the
/// exact defect series; `ratio` = exact / (n p(n)/(t-1)).
struct AsymptoticSample {
    int n;
    BigInt exact_value;
    Real predicted_main_term;
    Real predicted_np_over_t1;
    Real ratio;
};

std::vector<AsymptoticSample> defect_samples(int t, std::span<const int> ns, unsigned digits = kDefaultDigits);

/// Both sides of the inversion formula for G₂⁰(q^m) at q = e^{-ε}, with X = mε:
///   direct:      Σ_{k≥1} k e^{-kX} / (1 - e^{-kX})
///   transformed: 1/24 + π²/(6X²) (1 - 24 Σ_{n≥1} σ_1(n) e^{-4π²n/X}) - 1/(2X)
struct G2TransformSides {
    Real direct;
    Real transformed;
};

G2TransformSides g2_transform_sides(long m, double eps, unsigned digits = kDefaultDigits);

/// |direct - transformed| / |direct|.
Real g2_transform_check(long m, double eps, unsigned digits = kDefaultDigits);

/// 1/(e^{-ε}; e^{-ε})_∞ from the product.
Real eta_inverse_product(double eps, unsigned digits = kDefaultDigits);
/// 1/(e^{-ε}; e^{-ε})_∞ from Σ p(n) e^{-εn}.
Real eta_inverse_sum(double eps, unsigned digits = kDefaultDigits);

/// [1/(e^{-ε}; e^{-ε})_∞] / [√ε e^{π²/(6ε)} / √(2π)], which tends to 1 as ε → 0⁺.
Real eta_asymptotic_check(double eps, unsigned digits = kDefaultDigits);

}  // namespace tcore
