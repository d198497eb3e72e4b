#include "robinext/asympt.hpp"

#include "robinext/diskext.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robinext::asympt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_finite_alpha(double alpha) {
    if (!std::isfinite(alpha))
        throw std::domain_error("alpha must be finite, got " + std::to_string(alpha));
}

} // namespace

double log_cutoff_energy(std::uint64_t n, double alpha, double perimeter) {
    if (n < 2)
        throw std::domain_error("cutoff index n must be at least 2, got " + std::to_string(n));
    require_finite_alpha(alpha);
    if (!(perimeter > 0.0) || !std::isfinite(perimeter))
        throw std::domain_error("perimeter must be positive and finite");
    return kTwoPi / std::log(static_cast<double>(n)) + alpha * perimeter;
}

LogCutoffThreshold log_cutoff_threshold(double alpha, double perimeter) {
    require_finite_alpha(alpha);
    if (!(perimeter > 0.0) || !std::isfinite(perimeter))
        throw std::domain_error("perimeter must be positive and finite");
    if (alpha >= 0.0)
        return {kInf, kInf};

    // Energy is negative iff ln n > 2 pi / (|alpha| P).  The log threshold is
    // always representable; the integer one may overflow double.
    const double logn = kTwoPi / (-alpha * perimeter);
    LogCutoffThreshold out{logn, kInf};
    if (logn >= 709.0) // exp would overflow
        return out;
    double n = std::ceil(std::exp(logn));
    if (n < 2.0)
        n = 2.0;
    // ceil can land exactly on the boundary where the energy is zero.
    while (kTwoPi / std::log(n) + alpha * perimeter >= 0.0)
        n += 1.0;
    out.n_threshold = n;
    return out;
}

TwoDisksReport two_disks_2d(double alpha, double r3) {
    require_finite_alpha(alpha);
    if (alpha >= 0.0)
        throw std::domain_error("two-disk comparison needs alpha < 0, got " + std::to_string(alpha));
    if (!(r3 > 0.0) || !std::isfinite(r3))
        throw std::domain_error("disk radius must be positive and finite");

    TwoDisksReport rep{};
    rep.alpha = alpha;
    rep.r3 = r3;
    rep.R1 = 2.0 * r3;            // equal total perimeter: 2 * 2 pi r3 = 2 pi R1
    rep.R2 = std::sqrt(2.0) * r3; // equal total area: 2 * pi r3^2 = pi R2^2
    rep.lambda_asym = -alpha * alpha - alpha / r3;
    rep.lambda_disk_R1 = diskext::solve_disk_exterior_2d(alpha, rep.R1).lambda;
    rep.lambda_disk_R2 = diskext::solve_disk_exterior_2d(alpha, rep.R2).lambda;
    rep.asymptotic_regime = rep.lambda_asym < 0.0;
    rep.reversed_iso = rep.asymptotic_regime && rep.lambda_disk_R1 < rep.lambda_asym;
    rep.reversed_icho = rep.asymptotic_regime && rep.lambda_disk_R2 < rep.lambda_asym;

    // Locate where the joint verdict flips.  The model only predicts a bound
    // state for alpha < -1/r3, and once it does both exact disk values already
    // sit below the model curve, so the flip coincides with the regime
    // boundary; bisection on the verdict keeps that statement honest.
    auto verdict = [r3](double a) {
        const double la = -a * a - a / r3;
        if (la >= 0.0)
            return false;
        const double l1 = diskext::solve_disk_exterior_2d(a, 2.0 * r3).lambda;
        const double l2 = diskext::solve_disk_exterior_2d(a, std::sqrt(2.0) * r3).lambda;
        return l1 < la && l2 < la;
    };
    double hi = -0.5 / r3; // model still positive: verdict false
    double lo = -2.0 / r3;
    int grow = 0;
    while (!verdict(lo) && ++grow <= 60)
        lo *= 2.0;
    if (grow > 60) {
        rep.crossover_alpha = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, -lo); ++i) {
        const double mid = 0.5 * (lo + hi);
        (verdict(mid) ? lo : hi) = mid;
    }
    rep.crossover_alpha = 0.5 * (lo + hi);
    return rep;
}

HullReport hull_3d(double alpha, double r, double R, int d) {
    require_finite_alpha(alpha);
    if (d != 3)
        throw std::domain_error("hull comparison is implemented for d = 3 only, got d = " +
                                std::to_string(d));
    if (alpha >= 0.0)
        throw std::domain_error("hull comparison needs alpha < 0, got " + std::to_string(alpha));
    if (!(r > 0.0) || !(R > 0.0) || !std::isfinite(r) || !std::isfinite(R))
        throw std::domain_error("radii must be positive and finite");
    if (r > R)
        throw std::domain_error("cap radius r = " + std::to_string(r) + " exceeds ball radius R = " +
                                std::to_string(R) + ": no feasible axis length");

    HullReport rep{};
    rep.alpha = alpha;
    rep.r = r;
    rep.R = R;
    rep.asym_hull = -alpha * alpha - alpha / r;
    rep.asym_ball = -alpha * alpha - 2.0 * alpha / R;
    rep.criterion = r < 0.5 * R;
    rep.reversed = rep.asym_ball < rep.asym_hull;
    // 4 pi r^2 + 2 pi r L = 4 pi R^2  and  (4/3) pi r^3 + pi r^2 L = (4/3) pi R^3.
    rep.L_axis_area = 2.0 * (R * R - r * r) / r;
    rep.L_axis_volume = (4.0 / 3.0) * (R * R * R - r * r * r) / (r * r);
    return rep;
}

} // namespace robinext::asympt
