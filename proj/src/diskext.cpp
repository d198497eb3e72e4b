#include "robinext/diskext.hpp"

#include <cmath>
#include <string>

#include "robinext/specfun.hpp"

namespace robinext::diskext {

namespace {

namespace sf = robinext::specfun;

void check_attractive(double alpha, double R) {
    if (!(alpha < 0.0) || !std::isfinite(alpha))
        throw std::domain_error("no discrete eigenvalue for alpha >= 0");
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::domain_error("radius must be positive, got " + std::to_string(R));
}

// Scaled implicit equation e^{kR} [k K1(kR) + alpha K0(kR)] and its
// k-derivative.  K0' = -K1 and K1' = -K0 - K1/x give
// f' = R f - R e^{kR} [k K0(kR) + alpha K1(kR)].
double f_scaled(double k, double alpha, double R) {
    const double x = k * R;
    return k * sf::bessel_k1_scaled(x) + alpha * sf::bessel_k0_scaled(x);
}

double fprime_scaled(double k, double alpha, double R, double f) {
    const double x = k * R;
    return R * f - R * (k * sf::bessel_k0_scaled(x) + alpha * sf::bessel_k1_scaled(x));
}

} // namespace

std::pair<double, double> bounds_2d(double alpha, double R) {
    check_attractive(alpha, R);
    return {-alpha * alpha, -alpha * alpha - alpha / R};
}

DiskSolution solve_disk_exterior_2d(double alpha, double R, double tol) {
    check_attractive(alpha, R);
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

    double lo = std::sqrt(std::max(0.0, alpha * alpha + alpha / R));
    double hi = -alpha;
    // f < 0 on [lo, k*) and > 0 on (k*, hi]: every root has positive slope,
    // so the root is unique and the endpoint signs are known.  At lo = 0 the
    // limit is -inf (K0 log-diverges); skip the evaluation there.
    if (lo > 0.0 && !(f_scaled(lo, alpha, R) < 0.0))
        throw std::runtime_error("lower bracket endpoint not negative (Bessel kernel bug?)");
    if (!(f_scaled(hi, alpha, R) > 0.0))
        throw std::runtime_error("upper bracket endpoint not positive (Bessel kernel bug?)");

    const double width0 = hi - lo;
    while (hi - lo > 1e-3 * width0) {
        const double mid = 0.5 * (lo + hi);
        if (f_scaled(mid, alpha, R) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    // Bracket-guarded Newton: a step that leaves [lo, hi] is replaced by a
    // bisection step, so containment is never lost.
    double k = 0.5 * (lo + hi);
    double f = f_scaled(k, alpha, R);
    for (int it = 0; it < 100; ++it) {
        if (std::abs(f) <= tol) {
            DiskSolution sol{alpha, R, k, -k * k, std::abs(f)};
            const auto [lb, ub] = bounds_2d(alpha, R);
            if (!(sol.lambda > lb && sol.lambda < ub))
                throw std::runtime_error("solved eigenvalue escaped its a-priori bounds");
            return sol;
        }
        if (f < 0.0)
            lo = k;
        else
            hi = k;
        const double fp = fprime_scaled(k, alpha, R, f);
        double knew = (fp != 0.0) ? k - f / fp : 0.5 * (lo + hi);
        if (!(knew > lo) || !(knew < hi)) knew = 0.5 * (lo + hi);
        if (knew == k) knew = 0.5 * (lo + hi);
        k = knew;
        f = f_scaled(k, alpha, R);
    }
    throw std::runtime_error("disk-exterior root refinement did not reach tol=" +
                             std::to_string(tol));
}

double dlambda_dR(double alpha, double R) {
    const DiskSolution sol = solve_disk_exterior_2d(alpha, R);
    const double a2 = alpha * alpha;
    return -(2.0 / R) * sol.lambda * (sol.lambda + a2 + alpha / R) / (sol.lambda + a2);
}

double dlambda_dalpha_disk(double alpha, double R) {
    const DiskSolution sol = solve_disk_exterior_2d(alpha, R);
    const double x = sol.k * R;
    const double k0 = sf::bessel_k0_scaled(x);
    const double k1 = sf::bessel_k1_scaled(x);
    return (2.0 / R) * k0 * k0 / (k1 * k1 - k0 * k0);
}

double eigenfunction_disk(const DiskSolution& sol, double r) {
    if (!(r >= sol.R))
        throw std::domain_error("eigenfunction is defined on r >= R only");
    const double xR = sol.k * sol.R;
    const double k0 = sf::bessel_k0_scaled(xR);
    const double k1 = sf::bessel_k1_scaled(xR);
    const double norm = sol.R * std::sqrt(M_PI * (k1 * k1 - k0 * k0));
    // K0(kr)/norm in scaled form; the e^{-k(r-R)} factor restores the decay.
    return sf::bessel_k0_scaled(sol.k * r) / norm * std::exp(-sol.k * (r - sol.R));
}

double solve_ball_exterior_3d(double alpha, double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::domain_error("radius must be positive, got " + std::to_string(R));
    if (!std::isfinite(alpha)) throw std::domain_error("alpha must be finite");
    const double k = -alpha - 1.0 / R;
    return k > 0.0 ? -k * k : 0.0;
}

GapResult quantitative_gap(double alpha, double perimeter, double area) {
    if (!(perimeter > 0.0) || !(area > 0.0))
        throw std::domain_error("perimeter and area must be positive");
    if (perimeter * perimeter < 4.0 * M_PI * area * (1.0 - 1e-12))
        throw std::domain_error("infeasible data: perimeter^2 < 4 pi area");
    const double R1 = perimeter / (2.0 * M_PI);
    const double R2 = std::sqrt(area / M_PI);
    const double l1 = solve_disk_exterior_2d(alpha, R1).lambda;
    const double l2 = solve_disk_exterior_2d(alpha, R2).lambda;
    const double gap = l2 - l1;
    return {R1, R2, l2 - gap, gap};
}

} // namespace robinext::diskext
