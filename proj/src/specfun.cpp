#include "robinext/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robinext::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kSeriesCut = 2.0;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 30000;

[[noreturn]] void bad_argument(double x) {
    throw std::domain_error("bessel argument must be positive and finite, got " +
                            std::to_string(x));
}

void check(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) bad_argument(x);
}

// Ascending series, x <= 2.  All four series converge in < 20 terms there.

double series_i0(double x) {
    const double y = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= y / (static_cast<double>(k) * k);
        sum += term;
        if (term < kEps * sum) break;
    }
    return sum;
}

double series_i1(double x) {
    const double y = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= y / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < kEps * sum) break;
    }
    return 0.5 * x * sum;
}

double series_k0(double x) {
    // K0 = -(log(x/2) + gamma) I0 + sum_{k>=1} H_k y^k / (k!)^2
    const double y = 0.25 * x * x;
    double term = 1.0, harmonic = 0.0, sum = 0.0;
    for (int k = 1; k < 40; ++k) {
        term *= y / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        sum += term * harmonic;
        if (term * harmonic < kEps * (sum + 1.0)) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * series_i0(x) + sum;
}

double series_k1(double x) {
    // K1 = 1/x + log(x/2) I1 - (x/4) sum_{k>=0} (H_k + H_{k+1} - 2 gamma) y^k/(k!(k+1)!)
    const double y = 0.25 * x * x;
    double term = 1.0, hk = 0.0, hk1 = 1.0;
    double sum = hk + hk1 - 2.0 * kEulerGamma;
    for (int k = 1; k < 40; ++k) {
        term *= y / (static_cast<double>(k) * (k + 1));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        const double ds = term * (hk + hk1 - 2.0 * kEulerGamma);
        sum += ds;
        if (std::abs(ds) < kEps * (std::abs(sum) + 1.0)) break;
    }
    return 1.0 / x + std::log(0.5 * x) * series_i1(x) - 0.25 * x * sum;
}

struct ScaledPair {
    double k0e, k1e;
};

// Steed's continued fraction CF2 for K at order 0, x > 2.
// Produces e^x K0 and e^x K1 directly; never overflows.
ScaledPair cf2_k(double x) {
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            const double k0e = std::sqrt(M_PI / (2.0 * x)) / s;
            const double k1e = k0e * (0.5 + x - a1 * h) / x;
            return {k0e, k1e};
        }
    }
    throw std::runtime_error("bessel CF2 failed to converge at x = " + std::to_string(x));
}

// CF1 for the ratio I1/I0 (modified Lentz), x > 2.
double cf1_i_ratio(double x) {
    constexpr double tiny = 1e-300;
    double h = tiny, b = 0.0, d = 0.0, c = h;
    const double step = 2.0 / x;
    for (int i = 1; i <= kMaxIter; ++i) {
        b += step;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("bessel CF1 failed to converge at x = " + std::to_string(x));
}

struct ScaledQuad {
    double i0e, i1e, k0e, k1e;
};

ScaledQuad eval_scaled(double x) {
    if (x <= kSeriesCut) {
        const double down = std::exp(-x), up = std::exp(x);
        return {series_i0(x) * down, series_i1(x) * down,
                series_k0(x) * up, series_k1(x) * up};
    }
    const auto [k0e, k1e] = cf2_k(x);
    const double r = cf1_i_ratio(x);
    // Wronskian closure: I0 = 1 / (x (K1 + r K0)), scaled alike.
    const double i0e = 1.0 / (x * (k1e + r * k0e));
    return {i0e, r * i0e, k0e, k1e};
}

} // namespace

double bessel_i0(double x) {
    check(x);
    if (x <= kSeriesCut) return series_i0(x);
    return eval_scaled(x).i0e * std::exp(x);
}

double bessel_i1(double x) {
    check(x);
    if (x <= kSeriesCut) return series_i1(x);
    return eval_scaled(x).i1e * std::exp(x);
}

double bessel_k0(double x) {
    check(x);
    if (x <= kSeriesCut) return series_k0(x);
    return eval_scaled(x).k0e * std::exp(-x);
}

double bessel_k1(double x) {
    check(x);
    if (x <= kSeriesCut) return series_k1(x);
    return eval_scaled(x).k1e * std::exp(-x);
}

double bessel_i0_scaled(double x) {
    check(x);
    return eval_scaled(x).i0e;
}

double bessel_i1_scaled(double x) {
    check(x);
    return eval_scaled(x).i1e;
}

double bessel_k0_scaled(double x) {
    check(x);
    return eval_scaled(x).k0e;
}

double bessel_k1_scaled(double x) {
    check(x);
    return eval_scaled(x).k1e;
}

double k_ratio(double x) {
    check(x);
    const auto v = eval_scaled(x);
    return v.k0e / v.k1e;
}

} // namespace robinext::specfun
