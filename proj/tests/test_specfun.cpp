#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "robinext/specfun.hpp"

#include "golden_values.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace robinext;

namespace {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    return g;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("scaled values match the reference pins to 1e-13") {
    for (std::size_t i = 0; i < golden::bessel_pin_x.size(); ++i) {
        const double x = golden::bessel_pin_x[i];
        CHECK(rel(specfun::bessel_i0_scaled(x), golden::bessel_pin_i0e[i]) <= 1e-13);
        CHECK(rel(specfun::bessel_i1_scaled(x), golden::bessel_pin_i1e[i]) <= 1e-13);
        CHECK(rel(specfun::bessel_k0_scaled(x), golden::bessel_pin_k0e[i]) <= 1e-13);
        CHECK(rel(specfun::bessel_k1_scaled(x), golden::bessel_pin_k1e[i]) <= 1e-13);
    }
}

TEST_CASE("unscaled values at x = 1 match the reference pins") {
    CHECK(rel(specfun::bessel_k0(1.0), golden::k0_at_1) <= 1e-13);
    CHECK(rel(specfun::bessel_k1(1.0), golden::k1_at_1) <= 1e-13);
    CHECK(rel(specfun::bessel_i0(1.0), golden::i0_at_1) <= 1e-13);
    CHECK(rel(specfun::bessel_i1(1.0), golden::i1_at_1) <= 1e-13);
}

TEST_CASE("Wronskian x (I0 K1 + I1 K0) = 1 over twelve decades") {
    double worst = 0.0;
    for (double x : log_grid(1e-6, 1e6, 200)) {
        const double w = x * (specfun::bessel_i0_scaled(x) * specfun::bessel_k1_scaled(x) +
                              specfun::bessel_i1_scaled(x) * specfun::bessel_k0_scaled(x));
        worst = std::max(worst, std::abs(w - 1.0));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("scaled and unscaled variants agree where both are representable") {
    for (double x : {0.05, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
        CHECK(rel(specfun::bessel_k0(x), specfun::bessel_k0_scaled(x) * std::exp(-x)) <= 1e-13);
        CHECK(rel(specfun::bessel_k1(x), specfun::bessel_k1_scaled(x) * std::exp(-x)) <= 1e-13);
        CHECK(rel(specfun::bessel_i0(x), specfun::bessel_i0_scaled(x) * std::exp(x)) <= 1e-13);
        CHECK(rel(specfun::bessel_i1(x), specfun::bessel_i1_scaled(x) * std::exp(x)) <= 1e-13);
    }
}

TEST_CASE("series / continued-fraction handover at x = 2 is seamless") {
    for (auto f : {specfun::bessel_i0, specfun::bessel_i1, specfun::bessel_k0,
                   specfun::bessel_k1}) {
        const double lo = f(2.0 - 1e-9), hi = f(2.0 + 1e-9);
        CHECK(std::abs(hi - lo) <= 1e-8 * std::abs(f(2.0)));
    }
}

TEST_CASE("small-argument behavior: K0 ~ -ln x, K1 ~ 1/x, I0 ~ 1, I1 ~ x/2") {
    const double x = 1e-6;
    CHECK(rel(specfun::bessel_k1(x), 1.0 / x) <= 1e-10);
    CHECK(specfun::bessel_k0(x) > 13.0); // -ln(1e-6) + ln 2 - gamma ~ 13.93
    CHECK(rel(specfun::bessel_i0(x), 1.0) <= 1e-12);
    CHECK(rel(specfun::bessel_i1(x), 0.5 * x) <= 1e-12);
}

TEST_CASE("K0/K1 stays strictly inside (0, 1)") {
    for (double x : log_grid(1e-6, 1e6, 300)) {
        const double r = specfun::k_ratio(x);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
        CHECK(r == doctest::Approx(specfun::bessel_k0_scaled(x) /
                                   specfun::bessel_k1_scaled(x)).epsilon(1e-14));
    }
}

TEST_CASE("non-positive or non-finite arguments are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(specfun::bessel_k0(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_k1(-1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_i0(nan), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_i1(inf), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_k0_scaled(-2.0), std::domain_error);
    CHECK_THROWS_AS(specfun::k_ratio(0.0), std::domain_error);
}

TEST_CASE("unscaled K under/overflow limits behave like the exponential") {
    // K decays like e^{-x}: far beyond 745 the unscaled value underflows to 0
    // while the scaled one stays finite and positive.
    CHECK(specfun::bessel_k0(800.0) == 0.0);
    CHECK(specfun::bessel_k0_scaled(800.0) > 0.0);
    CHECK(std::isinf(specfun::bessel_i0(800.0)));
    CHECK(std::isfinite(specfun::bessel_i0_scaled(800.0)));
}
