#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "robinext/geometry.hpp"

#include "golden_values.hpp"

#include <cmath>
#include <stdexcept>

using namespace robinext;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

TEST_CASE("disk: closed-form perimeter, area, curvature") {
    for (double R : {0.25, 1.0, 4.0}) {
        const auto c = geometry::curve_from_support(geometry::support_disk(R), 512);
        CHECK(c.perimeter() == doctest::Approx(kTwoPi * R).epsilon(1e-14));
        CHECK(c.area() == doctest::Approx(kPi * R * R).epsilon(1e-14));
        CHECK(c.rho(0.7) == doctest::Approx(R).epsilon(1e-14));
        CHECK(c.kappa_g(2.1) == doctest::Approx(1.0 / R).epsilon(1e-14));
        CHECK(std::abs(c.isoperimetric_defect()) <= 1e-9 * std::max(1.0, kTwoPi * R * kTwoPi * R));
    }
}

TEST_CASE("ellipse: perimeter and area match the quadrature references") {
    const auto c = geometry::curve_from_support(geometry::support_ellipse(2.0, 1.0), 2048);
    CHECK(std::abs(c.perimeter() - golden::ellipse21_perimeter) <= 1e-10);
    CHECK(std::abs(c.area() - golden::ellipse21_area) <= 1e-10);
    CHECK(c.isoperimetric_defect() > 1.0);
}

TEST_CASE("ellipse: support identity rho h^3 = a^2 b^2") {
    const double a = 1.7, b = 0.9;
    const auto sup = geometry::support_ellipse(a, b);
    const auto c = geometry::curve_from_support(sup, 256);
    for (double theta : {0.0, 0.3, 0.9, 1.5708, 2.2, 3.0, 4.4, 6.0}) {
        const double h = sup.h(theta);
        CHECK(c.rho(theta) * h * h * h ==
              doctest::Approx(a * a * b * b).epsilon(1e-12));
    }
}

TEST_CASE("cosine support polynomial: exact perimeter and area") {
    // L = 2 pi c0; A = pi c0^2 - (pi/2) sum (n^2 - 1) c_n^2
    const auto c = geometry::curve_from_support(
        geometry::support_cosine_poly({1.0, 0.0, 0.1, 0.05}), 2048);
    const double wantA = kPi - 0.5 * kPi * (3.0 * 0.01 + 8.0 * 0.0025);
    CHECK(c.perimeter() == doctest::Approx(kTwoPi).epsilon(1e-13));
    CHECK(c.area() == doctest::Approx(wantA).epsilon(1e-13));
}

TEST_CASE("total curvature equals 2 pi on the whole catalog") {
    const auto curves = {
        geometry::curve_from_support(geometry::support_disk(1.0), 2048),
        geometry::curve_from_support(geometry::support_disk(0.25), 2048),
        geometry::curve_from_support(geometry::support_ellipse(2.0, 1.0), 2048),
        geometry::curve_from_support(geometry::support_ellipse(3.0, 1.0), 2048),
        geometry::curve_from_support(geometry::support_cosine_poly({1.0, 0.0, 0.1}), 2048),
        geometry::curve_from_support(geometry::support_cosine_poly({1.0, 0.0, 0.1, 0.05}), 2048),
    };
    for (const auto& c : curves)
        CHECK(std::abs(c.gauss_bonnet() - kTwoPi) <= 1e-8);
}

TEST_CASE("arc-length table is a consistent reparametrization") {
    const auto curves = {
        geometry::curve_from_support(geometry::support_ellipse(2.0, 1.0), 2048),
        geometry::curve_from_support(geometry::support_cosine_poly({1.0, 0.0, 0.1, 0.05}), 2048),
    };
    for (const auto& c : curves) {
        const auto& s = c.arclength_table();
        CHECK(s.front() == 0.0);
        CHECK(std::abs(s.back() - c.perimeter()) <= 1e-10 * std::max(1.0, c.perimeter()));
        for (std::size_t i = 1; i < s.size(); ++i)
            CHECK(s[i] > s[i - 1]);
    }
}

TEST_CASE("non-convex support functions are rejected with a certificate") {
    CHECK_THROWS_WITH_AS(
        geometry::curve_from_support(geometry::support_cosine_poly({1.0, 0.0, 0.6}), 256),
        doctest::Contains("not strictly convex"), std::domain_error);
    CHECK_THROWS_AS(geometry::curve_from_support(geometry::support_disk(1.0), 8),
                    std::domain_error); // grid too coarse to certify anything
    CHECK_THROWS_AS(geometry::support_disk(-1.0), std::domain_error);
    CHECK_THROWS_AS(geometry::support_ellipse(1.0, 0.0), std::domain_error);
}

TEST_CASE("spherocylinder: closed forms agree with the Monte-Carlo references") {
    const auto s = geometry::surface_spherocylinder(1.0, 4.0);
    CHECK(std::abs(s.volume - golden::sc_mc_volume) <= 4.0 * golden::sc_mc_volume_sigma);
    CHECK(std::abs(s.area - golden::sc_mc_area) <= 4.0 * golden::sc_mc_area_sigma);
    CHECK(std::abs(s.totalMeanCurv - golden::sc_mc_mean_curv) <=
          4.0 * golden::sc_mc_mean_curv_sigma);
    CHECK(s.meanWidth == doctest::Approx(s.totalMeanCurv / kTwoPi).epsilon(1e-14));
}

TEST_CASE("sphere is the Minkowski equality case, capsules are not") {
    const auto sphere = geometry::surface_sphere(1.3);
    CHECK(std::abs(geometry::minkowski_defect(sphere)) <=
          1e-9 * sphere.totalMeanCurv * sphere.totalMeanCurv);
    for (double L : {0.5, 2.0, 4.0}) {
        const auto caps = geometry::surface_spherocylinder(0.7, L);
        // M^2 - 4 pi A = pi^2 L^2 exactly for the capsule family
        CHECK(geometry::minkowski_defect(caps) ==
              doctest::Approx(kPi * kPi * L * L).epsilon(1e-12));
    }
    CHECK_THROWS_AS(geometry::surface_spherocylinder(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(geometry::surface_spherocylinder(1.0, -0.1), std::domain_error);
}

TEST_CASE("surface validation gate rejects corrupted aggregates") {
    auto s = geometry::surface_sphere(1.0);
    geometry::check_surface(s); // sane input passes
    s.area *= 1.5;              // now violates the Minkowski inequality
    CHECK_THROWS_AS(geometry::check_surface(s), std::domain_error);
}
