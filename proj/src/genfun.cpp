#include "tcore/genfun.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "tcore/core_tower.hpp"

namespace tcore {

namespace {

void require_modulus(int t) {
    if (t < 2) throw std::invalid_argument("modulus t must be at least 2, got " + std::to_string(t));
}

void require_level(int j) {
    if (j < 0) throw std::invalid_argument("tower row index j must be nonnegative");
}

std::size_t idx(long long n) { return static_cast<std::size_t>(n); }

BigInt big_power(int t, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= t;
    return r;
}

// Builds a series whose n-th coefficient is coefficient(n), spreading n over workers.
IntSeries brute_series(int order, BruteOptions opts, const std::function<BigInt(int)>& coefficient) {
    IntSeries out(order);
    const unsigned workers = std::clamp(opts.threads, 1u, static_cast<unsigned>(order) + 1);
    if (workers == 1) {
        for (int n = 0; n <= order; ++n) out[idx(n)] = coefficient(n);
        return out;
    }
    std::vector<BigInt> values(idx(order) + 1);
    // hand out large n first; they dominate the cost
    std::atomic<int> next{order};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int n = next--; n >= 0; n = next--) values[idx(n)] = coefficient(n);
            });
    }
    return IntSeries(std::move(values));
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

long long checked_power(int t, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    long long r = 1;
    for (int i = 0; i < k; ++i)
        if (__builtin_mul_overflow(r, static_cast<long long>(t), &r))
            throw std::overflow_error(std::to_string(t) + "^" + std::to_string(k) + " overflows a 64-bit exponent");
    return r;
}

IntSeries partition_series(int order) { return divide(IntSeries::one(order), pochhammer_inf(1, 1, order)); }

IntSeries tower_series_closed(int j, int t, int order) {
    require_modulus(t);
    require_level(j);
    const long long inner = checked_power(t, j);
    const long long outer = checked_power(t, j + 1);
    const IntSeries g2 = g2_zero(order);
    IntSeries numerator = substitute_power(g2, inner) * big_power(t, j);
    numerator -= substitute_power(g2, outer) * big_power(t, j + 2);
    return divide(numerator, pochhammer_inf(1, 1, order));
}

IntSeries tower_series_brute(int j, int t, int order, BruteOptions opts) {
    require_modulus(t);
    require_level(j);
    return brute_series(order, opts, [j, t](int n) {
        BigInt total = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            total += core_tower(lambda, t).row_size(static_cast<std::size_t>(j));
        });
        return total;
    });
}

IntSeries telescoped_tower_sum(int j, int t, int order) {
    require_modulus(t);
    require_level(j);
    const IntSeries g2 = g2_zero(order);
    IntSeries numerator = g2 - substitute_power(g2, checked_power(t, j + 1)) * big_power(t, 2 * j + 2);
    return divide(numerator, pochhammer_inf(1, 1, order));
}

IntSeries defect_series_closed(int t, int order) {
    require_modulus(t);
    const IntSeries g2 = g2_zero(order);
    IntSeries numerator(order);
    BigInt weight = t;
    for (long long m = t; m <= order; m *= t, weight *= t) numerator += substitute_power(g2, m) * weight;
    return divide(numerator, pochhammer_inf(1, 1, order));
}

IntSeries defect_series_brute(int t, int order, BruteOptions opts) {
    require_modulus(t);
    return brute_series(order, opts, [t](int n) {
        BigInt total = 0;
        for_each_partition(n, [&](const Partition& lambda) { total += defect(lambda, t); });
        return total;
    });
}

IntSeries generalized_core_series_with_exponent(int j, int t, long long exponent, int order) {
    require_modulus(t);
    require_level(j);
    return divide(pochhammer_inf(checked_power(t, j + 1), exponent, order), pochhammer_inf(1, 1, order));
}

IntSeries generalized_core_series_closed(int j, int t, int order) {
    return generalized_core_series_with_exponent(j, t, checked_power(t, j + 1), order);
}

IntSeries generalized_core_series_brute(int j, int t, int order, BruteOptions opts) {
    require_modulus(t);
    require_level(j);
    return brute_series(order, opts, [j, t](int n) {
        BigInt count = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            if (is_generalized_core(lambda, j, t)) ++count;
        });
        return count;
    });
}

IntSeries regular_partition_series(int t, int order) {
    require_modulus(t);
    return divide(pochhammer_inf(t, 1, order), pochhammer_inf(1, 1, order));
}

IntSeries regular_partition_series_brute(int t, int order) {
    require_modulus(t);
    return brute_series(order, {}, [t](int n) {
        BigInt count = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            if (std::none_of(lambda.parts().begin(), lambda.parts().end(), [t](int part) { return part % t == 0; }))
                ++count;
        });
        return count;
    });
}

std::vector<BigInt> core_size_sums(int t, int order) { return tower_series_closed(0, t, order).coeffs(); }

VerificationReport compare_series(std::string name, int t, std::optional<int> j, const IntSeries& closed,
                                  const IntSeries& brute) {
    if (closed.order() != brute.order())
        throw SeriesOrderError("cannot compare series of orders " + std::to_string(closed.order()) + " and " +
                               std::to_string(brute.order()));
    VerificationReport report{std::move(name), t, j, closed.order(), std::nullopt};
    for (int n = 0; n <= closed.order(); ++n) {
        if (closed[idx(n)] != brute[idx(n)]) {
            report.first_mismatch = Mismatch{n, closed[idx(n)], brute[idx(n)]};
            break;
        }
    }
    return report;
}

VerificationReport check_size_congruence(int t, int order) {
    require_modulus(t);
    const auto a = core_size_sums(t, order);
    const auto p = partition_counts(order);
    const BigInt modulus = BigInt(t) * t;
    VerificationReport report{"size congruence", t, std::nullopt, order, std::nullopt};
    for (int n = 0; n <= order; ++n) {
        const BigInt lhs = mod_nonneg(a[idx(n)], modulus);
        const BigInt rhs = mod_nonneg(p[idx(n)] * n, modulus);
        if (lhs != rhs) {
            report.first_mismatch = Mismatch{n, lhs, rhs};
            break;
        }
    }
    return report;
}

VerificationReport check_multiple_congruence(int t, int order, int exponent) {
    require_modulus(t);
    if (exponent < 1) throw std::invalid_argument("congruence exponent must be positive");
    const auto a = core_size_sums(t, order);
    const BigInt modulus = big_power(t, exponent);
    VerificationReport report{"multiple congruence", t, std::nullopt, order, std::nullopt};
    for (int n = 0; n <= order; n += t) {
        const BigInt residue = mod_nonneg(a[idx(n)], modulus);
        if (residue != 0) {
            report.first_mismatch = Mismatch{n, residue, BigInt(0)};
            break;
        }
    }
    return report;
}

VerificationReport check_congruence(int t, int order) {
    auto size = check_size_congruence(t, order);
    auto multiple = check_multiple_congruence(t, order);
    VerificationReport report{"congruence", t, std::nullopt, order, std::nullopt};
    if (!size.passed()) report.first_mismatch = size.first_mismatch;
    if (!multiple.passed() && (!report.first_mismatch || multiple.first_mismatch->n < report.first_mismatch->n))
        report.first_mismatch = multiple.first_mismatch;
    return report;
}

VerificationReport check_recursion(int t, int order) {
    require_modulus(t);
    const IntSeries regular = regular_partition_series(t, order);
    const int cross_order = std::min(order, 25);
    auto cross = compare_series("regular partitions", t, std::nullopt, regular.truncated(cross_order),
                                regular_partition_series_brute(t, cross_order));
    if (!cross.passed()) return cross;

    const auto a = core_size_sums(t, order);
    const auto p = partition_counts(order);
    VerificationReport report{"recursion", t, std::nullopt, order, std::nullopt};
    for (int n = 0; n <= order; ++n) {
        BigInt sum = 0;
        for (int i = t; i <= n; i += t) sum += BigInt(i) * p[idx(i / t)] * regular[idx(n - i)];
        const BigInt rhs = p[idx(n)] * n - sum * t;
        if (a[idx(n)] != rhs) {
            report.first_mismatch = Mismatch{n, a[idx(n)], rhs};
            break;
        }
    }
    return report;
}

VerificationReport check_monotonicity(int t, int order) {
    require_modulus(t);
    const IntSeries d = defect_series_closed(t, order);
    VerificationReport report{"monotone", t, std::nullopt, order, std::nullopt};
    for (int n = 1; n <= order; ++n) {
        const bool negative = d[idx(n)] < 0;
        const bool dropped = n >= 2 && d[idx(n)] < d[idx(n - 1)];
        if (negative || dropped) {
            report.first_mismatch = Mismatch{n, d[idx(n)], n >= 2 ? d[idx(n - 1)] : BigInt(0)};
            break;
        }
    }
    return report;
}

}  // namespace tcore
