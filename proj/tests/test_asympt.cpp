#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "robinext/asympt.hpp"
#include "robinext/diskext.hpp"
#include "robinext/geometry.hpp"

#include <cmath>
#include <stdexcept>

using namespace robinext;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

TEST_CASE("cutoff energy: closed form and threshold minimality") {
    // 2 pi / ln n + alpha P at n = 3, alpha = -1, P = 2 pi
    const double want = kTwoPi / std::log(3.0) - kTwoPi;
    CHECK(asympt::log_cutoff_energy(3, -1.0, kTwoPi) == doctest::Approx(want).epsilon(1e-15));
    CHECK_THROWS_AS(asympt::log_cutoff_energy(1, -1.0, kTwoPi), std::domain_error);
    CHECK_THROWS_AS(asympt::log_cutoff_energy(3, -1.0, 0.0), std::domain_error);

    const auto thr = asympt::log_cutoff_threshold(-1.0, kTwoPi);
    REQUIRE(std::isfinite(thr.n_threshold));
    CHECK(thr.log_n == doctest::Approx(1.0).epsilon(1e-15)); // 2 pi / (1 * 2 pi)
    const auto n = static_cast<std::uint64_t>(thr.n_threshold);
    CHECK(n == 3); // e^1 = 2.718..., first integer above
    CHECK(asympt::log_cutoff_energy(n, -1.0, kTwoPi) < 0.0);
    CHECK(asympt::log_cutoff_energy(n - 1, -1.0, kTwoPi) >= 0.0);
}

TEST_CASE("cutoff threshold: weak coupling overflows gracefully, alpha >= 0 never works") {
    const auto weak = asympt::log_cutoff_threshold(-1e-3, kTwoPi);
    CHECK(weak.log_n == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(std::isinf(weak.n_threshold)); // e^1000 not representable
    const auto never = asympt::log_cutoff_threshold(0.5, kTwoPi);
    CHECK(std::isinf(never.log_n));
    CHECK(std::isinf(never.n_threshold));
}

TEST_CASE("two disks: strong coupling reverses both matched-disk comparisons") {
    const auto rep = asympt::two_disks_2d(-50.0, 1.0);
    CHECK(rep.R1 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rep.R2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(rep.lambda_asym == doctest::Approx(-2500.0 + 50.0).epsilon(1e-15));
    CHECK(rep.asymptotic_regime);
    CHECK(rep.reversed_iso);
    CHECK(rep.reversed_icho);
    // lambda is strictly decreasing in R, and R1 = 2 r3 > R2 = sqrt(2) r3
    CHECK(rep.lambda_disk_R1 < rep.lambda_disk_R2);
    CHECK(rep.lambda_disk_R2 < rep.lambda_asym);
}

TEST_CASE("two disks: weak coupling is outside the model's regime") {
    const auto rep = asympt::two_disks_2d(-0.05, 1.0);
    CHECK(rep.lambda_asym > 0.0);
    CHECK_FALSE(rep.asymptotic_regime);
    CHECK_FALSE(rep.reversed_iso);
    CHECK_FALSE(rep.reversed_icho);
}

TEST_CASE("two disks: verdict flips exactly where the model gains a bound state") {
    for (double r3 : {0.5, 1.0, 2.0}) {
        const auto rep = asympt::two_disks_2d(-10.0 / r3, r3);
        CHECK(std::abs(rep.crossover_alpha - (-1.0 / r3)) <= 1e-6 / r3);
    }
}

TEST_CASE("two disks: input validation") {
    CHECK_THROWS_AS(asympt::two_disks_2d(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(asympt::two_disks_2d(-1.0, 0.0), std::domain_error);
}

TEST_CASE("hull vs ball: asymptote values and the alpha-free criterion") {
    const auto rep = asympt::hull_3d(-100.0, 0.3, 1.0);
    CHECK(rep.asym_hull == doctest::Approx(-10000.0 + 100.0 / 0.3).epsilon(1e-14));
    CHECK(rep.asym_ball == doctest::Approx(-10000.0 + 200.0).epsilon(1e-14));
    CHECK(rep.criterion); // 0.3 < 0.5
    CHECK(rep.reversed);  // ball model sits below the hull model

    // the reversal criterion r < R/2 does not involve alpha at all
    for (double alpha : {-5.0, -100.0, -4000.0}) {
        CHECK(asympt::hull_3d(alpha, 0.3, 1.0).reversed);
        CHECK_FALSE(asympt::hull_3d(alpha, 0.6, 1.0).reversed);
        CHECK_FALSE(asympt::hull_3d(alpha, 0.6, 1.0).criterion);
    }
}

TEST_CASE("hull vs ball: solved axis lengths reproduce the matched quantities") {
    const auto rep = asympt::hull_3d(-100.0, 0.3, 1.0);
    const auto byArea = geometry::surface_spherocylinder(rep.r, rep.L_axis_area);
    const auto byVol = geometry::surface_spherocylinder(rep.r, rep.L_axis_volume);
    CHECK(byArea.area == doctest::Approx(4.0 * kPi).epsilon(1e-13));
    CHECK(byVol.volume == doctest::Approx(4.0 / 3.0 * kPi).epsilon(1e-13));
    // r = R degenerates to the ball itself
    const auto same = asympt::hull_3d(-10.0, 1.0, 1.0);
    CHECK(same.L_axis_area == doctest::Approx(0.0));
    CHECK(same.L_axis_volume == doctest::Approx(0.0));
    CHECK_FALSE(same.criterion);
}

TEST_CASE("hull vs ball: infeasible and malformed inputs are rejected") {
    CHECK_THROWS_WITH_AS(asympt::hull_3d(-100.0, 2.0, 1.0),
                         doctest::Contains("no feasible axis length"), std::domain_error);
    CHECK_THROWS_AS(asympt::hull_3d(-100.0, 0.3, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(asympt::hull_3d(5.0, 0.3, 1.0), std::domain_error);
    CHECK_THROWS_AS(asympt::hull_3d(-100.0, -0.3, 1.0), std::domain_error);
}
