// Generated by scripts/make_goldens.py -- do not edit by hand.
// Reference values come from arbitrary-precision (mpmath) and
// independent-discretization (scipy) oracles; see scripts/oracle_*.py.
#pragma once

#include <array>

namespace golden {

// modified Bessel pins (mpmath, 60 digits)
inline constexpr double k0_at_1 = 0.4210244382407083333356;
inline constexpr double k1_at_1 = 0.6019072301972345747375;
inline constexpr double i0_at_1 = 1.266065877752008335598;
inline constexpr double i1_at_1 = 0.5651591039924850272077;
inline constexpr std::array<double, 8> bessel_pin_x{{0.5000000000000000000000, 1.000000000000000000000, 2.000000000000000000000, 5.000000000000000000000, 10.00000000000000000000, 100.0000000000000000000, 10000.00000000000000000, 1000000.000000000000000}};
inline constexpr std::array<double, 8> bessel_pin_i0e{{0.6450352704491500681080, 0.4657596075936404365019, 0.3085083225536710395334, 0.1835408126093283530737, 0.1278333371634286073231, 0.03994437929909668264756, 0.003989472674604732106361, 0.0003989423302692457787773}};
inline constexpr std::array<double, 8> bessel_pin_i1e{{0.1564208031848716971426, 0.2079104153497084488694, 0.2152692892489376591585, 0.1639722669445423569261, 0.1212626813844555187190, 0.03974415302513025267364, 0.003989273195983662264480, 0.0003989421307980307763133}};
inline constexpr std::array<double, 8> bessel_pin_k0e{{1.524109385773909530023, 1.144463079806895014699, 0.8415682150707714179191, 0.5478075643135189868682, 0.3916319344365986657339, 0.1251756216591265788916, 0.01253298471769928528839, 0.001253313980651321210329}};
inline constexpr std::array<double, 8> bessel_pin_k1e{{2.731009708211785705359, 1.636153486263258246513, 1.033476847068688573175, 0.6002738587883125829360, 0.4107665705957887511300, 0.1257999504795785293251, 0.01253361135127050573389, 0.001253314607308154871899}};

// disk-exterior eigenvalues (mpmath bisection, 40 digits)
inline constexpr double disk_k_m1_r1 = 0.5950467264497842928850;
inline constexpr double disk_lambda_m1_r1 = -0.3540806066586044179772;
inline constexpr double disk_k_m2_r1 = 1.552651255645364598684;
inline constexpr double disk_lambda_m2_r1 = -2.410725921657127333575;
inline constexpr double disk_k_m025_r025 = 5.054715286489750957198e-7;
inline constexpr double disk_lambda_m025_r025 = -2.555014662747316509560e-13;
inline constexpr double disk_k_m4_r1 = 3.528270552033762899441;
inline constexpr double disk_lambda_m4_r1 = -12.44869308834863399170;
inline constexpr double disk_k_m16_r4 = 15.87548454609937432687;
inline constexpr double disk_lambda_m16_r4 = -252.0310095734400572971;
inline constexpr double disk_k_m1_r3 = 0.8455753637186392318882;
inline constexpr double disk_lambda_m1_r3 = -0.7149976957279090282563;

// 3D ball-exterior shooting (scipy DOP853 + brentq)
inline constexpr double ball3d_k_a_m2_r1 = 1.0000000000000004;
inline constexpr double ball3d_lambda_a_m2_r1 = -1.0000000000000009;
inline constexpr double ball3d_k_a_m4_r05 = 2;
inline constexpr double ball3d_lambda_a_m4_r05 = -4;
inline constexpr double ball3d_k_a_m15_r2 = 0.99999999999999978;
inline constexpr double ball3d_lambda_a_m15_r2 = -0.99999999999999956;

// ellipse a=2,b=1 boundary quadrature (mpmath)
inline constexpr double ellipse21_perimeter = 9.688448220547676198429;
inline constexpr double ellipse21_area = 6.283185307179586476925;

// spherocylinder r=1,L=4 Monte-Carlo (numpy, seeded)
inline constexpr double sc_mc_volume = 16.755341520000002;
inline constexpr double sc_mc_volume_sigma = 0.0011017564478057939;
inline constexpr double sc_mc_area = 37.699178322726574;
inline constexpr double sc_mc_area_sigma = 0.00060753762286936362;
inline constexpr double sc_mc_mean_curv = 25.132807708367402;
inline constexpr double sc_mc_mean_curv_sigma = 0.00060753762286936362;

// reduced half-line spherocylinder weight (scipy, uniform mesh)
inline constexpr double sc_reduced_lambda = -1.8373460212058517;
inline constexpr double sc_reduced_trunc_check = 1.1146639167236572e-13;
} // namespace golden
