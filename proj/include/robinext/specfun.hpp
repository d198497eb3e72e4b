// Modified Bessel functions of order 0 and 1, double precision.
//
// Two-regime evaluation: ascending power series for x <= 2, Steed's
// continued fractions for x > 2, with the I-functions recovered from the
// Wronskian I0*K1 + I1*K0 = 1/x.  Relative accuracy is ~1e-14 over
// [1e-6, 1e6]; the exponentially scaled variants stay finite over that
// whole range.  All functions throw std::domain_error for x <= 0 or
// non-finite x.
#pragma once

namespace robinext::specfun {

// Unscaled values.  bessel_i0/i1 overflow to +inf for x beyond ~709;
// bessel_k0/k1 underflow to 0 beyond ~745.  Use the scaled variants
// whenever the argument can be large.
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);
double bessel_k1(double x);

// Scaled variants: e^{-x} I_nu(x) and e^{x} K_nu(x).
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

// K0(x)/K1(x), evaluated from the scaled values.  Always in (0,1).
double k_ratio(double x);

} // namespace robinext::specfun
