#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "robinext/diskext.hpp"
#include "robinext/specfun.hpp"

#include "golden_values.hpp"

#include <cmath>
#include <stdexcept>

using namespace robinext;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct GoldenCase {
    double alpha, R, k, lambda;
};

const GoldenCase golden_cases[] = {
    {-1.0, 1.0, golden::disk_k_m1_r1, golden::disk_lambda_m1_r1},
    {-2.0, 1.0, golden::disk_k_m2_r1, golden::disk_lambda_m2_r1},
    {-0.25, 0.25, golden::disk_k_m025_r025, golden::disk_lambda_m025_r025},
    {-4.0, 1.0, golden::disk_k_m4_r1, golden::disk_lambda_m4_r1},
    {-16.0, 4.0, golden::disk_k_m16_r4, golden::disk_lambda_m16_r4},
    {-1.0, 3.0, golden::disk_k_m1_r3, golden::disk_lambda_m1_r3},
};

} // namespace

TEST_CASE("disk eigenvalues match the arbitrary-precision references") {
    for (const auto& c : golden_cases) {
        const auto sol = diskext::solve_disk_exterior_2d(c.alpha, c.R);
        CHECK(rel(sol.k, c.k) <= 1e-12);
        CHECK(rel(sol.lambda, c.lambda) <= 1e-11);
        CHECK(sol.residual <= 1e-12);
    }
}

TEST_CASE("eigenvalue sits strictly inside its a-priori bounds") {
    for (const auto& c : golden_cases) {
        const auto [lo, hi] = diskext::bounds_2d(c.alpha, c.R);
        const auto sol = diskext::solve_disk_exterior_2d(c.alpha, c.R);
        CHECK(lo < sol.lambda);
        CHECK(sol.lambda < hi);
        CHECK(lo == -c.alpha * c.alpha);
        CHECK(hi == -c.alpha * c.alpha - c.alpha / c.R);
    }
}

TEST_CASE("non-negative alpha has no discrete eigenvalue") {
    CHECK_THROWS_WITH_AS(diskext::solve_disk_exterior_2d(0.5, 1.0),
                         doctest::Contains("no discrete eigenvalue"), std::domain_error);
    CHECK_THROWS_AS(diskext::solve_disk_exterior_2d(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(diskext::bounds_2d(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(diskext::solve_disk_exterior_2d(-1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(diskext::solve_disk_exterior_2d(-1.0, -2.0), std::domain_error);
}

TEST_CASE("derivative formulas have the proven signs") {
    for (const auto& c : golden_cases) {
        CHECK(diskext::dlambda_dR(c.alpha, c.R) < 0.0);
        CHECK(diskext::dlambda_dalpha_disk(c.alpha, c.R) > 0.0);
    }
}

// Central-difference step balancing truncation (h^2 (L + 2/scale)^2 / 6,
// exponential sensitivity L plus the power-law scale of the parameter)
// against cancellation (eps / (h L)); works in both coupling regimes.
static double fd_step(double L, double scale) {
    const double c3 = (L + 2.0 / scale) * (L + 2.0 / scale);
    return std::min(std::cbrt(3e-13 / (c3 * L)), 0.1 * scale);
}

TEST_CASE("derivative formulas agree with central differences") {
    for (const auto& c : golden_cases) {
        const double lam = std::abs(diskext::solve_disk_exterior_2d(c.alpha, c.R).lambda);
        const double dR = diskext::dlambda_dR(c.alpha, c.R);
        const double hR = fd_step(std::abs(dR) / lam, c.R);
        const double fdR = (diskext::solve_disk_exterior_2d(c.alpha, c.R + hR).lambda -
                            diskext::solve_disk_exterior_2d(c.alpha, c.R - hR).lambda) /
                           (2.0 * hR);
        CHECK(rel(dR, fdR) <= 1e-6);
        const double da = diskext::dlambda_dalpha_disk(c.alpha, c.R);
        const double ha = fd_step(da / lam, std::abs(c.alpha));
        const double fda = (diskext::solve_disk_exterior_2d(c.alpha + ha, c.R).lambda -
                            diskext::solve_disk_exterior_2d(c.alpha - ha, c.R).lambda) /
                           (2.0 * ha);
        CHECK(rel(da, fda) <= 1e-6);
    }
}

TEST_CASE("scaling covariance lambda(alpha, R) = s^2 lambda(alpha/s, s R)") {
    for (double s : {0.5, 2.0, 10.0}) {
        const double base = diskext::solve_disk_exterior_2d(-2.0, 0.5).lambda;
        const double scaled = s * s * diskext::solve_disk_exterior_2d(-2.0 / s, s * 0.5).lambda;
        CHECK(rel(scaled, base) <= 1e-9);
    }
}

TEST_CASE("3D ball exterior matches the independent shooting references") {
    CHECK(rel(diskext::solve_ball_exterior_3d(-2.0, 1.0), golden::ball3d_lambda_a_m2_r1) <= 1e-12);
    CHECK(rel(diskext::solve_ball_exterior_3d(-4.0, 0.5), golden::ball3d_lambda_a_m4_r05) <= 1e-12);
    CHECK(rel(diskext::solve_ball_exterior_3d(-1.5, 2.0), golden::ball3d_lambda_a_m15_r2) <= 1e-12);
    // below the coupling threshold alpha = -1/R the spectrum is purely essential
    CHECK(diskext::solve_ball_exterior_3d(-0.5, 1.0) == 0.0);
    CHECK(diskext::solve_ball_exterior_3d(-1.0, 1.0) == 0.0);
}

TEST_CASE("eigenfunction is positive, decaying, and continuous at the boundary") {
    const auto sol = diskext::solve_disk_exterior_2d(-1.0, 1.0);
    double prev = diskext::eigenfunction_disk(sol, 1.0);
    CHECK(prev > 0.0);
    for (double r : {1.5, 2.0, 4.0, 8.0, 16.0}) {
        const double v = diskext::eigenfunction_disk(sol, r);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(diskext::eigenfunction_disk(sol, 30.0) < 1e-8); // ~ e^{-k(30-R)}
    CHECK_THROWS_AS(diskext::eigenfunction_disk(sol, 0.99), std::domain_error);
}

TEST_CASE("quantitative gap: zero for disk data, positive otherwise") {
    const double pi = 3.14159265358979323846;
    const auto disk = diskext::quantitative_gap(-1.0, 2.0 * pi, pi);
    CHECK(std::abs(disk.gap) <= 1e-12);
    CHECK(disk.R1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(disk.R2 == doctest::Approx(1.0).epsilon(1e-14));

    const auto ell = diskext::quantitative_gap(-1.0, golden::ellipse21_perimeter,
                                               golden::ellipse21_area);
    CHECK(ell.gap > 0.0);
    CHECK(ell.R1 > ell.R2);
    const double l1 = diskext::solve_disk_exterior_2d(-1.0, ell.R1).lambda;
    CHECK(ell.bound == doctest::Approx(l1).epsilon(1e-12));

    // isoperimetrically infeasible data (P^2 < 4 pi A) must be rejected
    CHECK_THROWS_AS(diskext::quantitative_gap(-1.0, 2.0, 10.0), std::domain_error);
}
