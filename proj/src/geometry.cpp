#include "robinext/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace robinext::geometry {

namespace {

// 5-point Gauss-Legendre on [-1, 1].
constexpr double kGx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
constexpr double kGw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                           0.4786286704993665, 0.2369268850561891};

} // namespace

SupportFunction support_disk(double R) {
    if (!(R > 0.0)) throw std::domain_error("disk radius must be positive");
    return {[R](double) { return R; }, [](double) { return 0.0; },
            [](double) { return 0.0; }};
}

SupportFunction support_ellipse(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ellipse semi-axes must be positive");
    auto h = [a, b](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return std::sqrt(a * a * c * c + b * b * s * s);
    };
    auto dh = [a, b, h](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return (b * b - a * a) * s * c / h(th);
    };
    auto d2h = [a, b, h](double th) {
        const double c = std::cos(th), s = std::sin(th);
        const double hv = h(th);
        const double d = (b * b - a * a);
        return d * (c * c - s * s) / hv - d * d * s * s * c * c / (hv * hv * hv);
    };
    return {h, dh, d2h};
}

SupportFunction support_cosine_poly(std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::domain_error("empty coefficient list");
    auto h = [coeffs](double th) {
        double v = coeffs[0];
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            v += coeffs[n] * std::cos(n * th);
        return v;
    };
    auto dh = [coeffs](double th) {
        double v = 0.0;
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            v -= coeffs[n] * static_cast<double>(n) * std::sin(n * th);
        return v;
    };
    auto d2h = [coeffs](double th) {
        double v = 0.0;
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            v -= coeffs[n] * static_cast<double>(n * n) * std::cos(n * th);
        return v;
    };
    return {h, dh, d2h};
}

ConvexCurve::ConvexCurve(SupportFunction support, std::size_t nTheta)
    : support_(std::move(support)) {
    if (nTheta < 16) throw std::domain_error("nTheta must be at least 16");
    if (!support_.h || !support_.dh || !support_.d2h)
        throw std::domain_error("support function callables must all be set");

    const double dth = 2.0 * M_PI / static_cast<double>(nTheta);
    theta_.resize(nTheta);
    rho_.resize(nTheta);
    kappa_.resize(nTheta);
    double sumH = 0.0, sumHRho = 0.0;
    for (std::size_t i = 0; i < nTheta; ++i) {
        const double th = dth * static_cast<double>(i);
        const double hv = support_.h(th);
        const double rv = hv + support_.d2h(th);
        if (!(rv > 0.0))
            throw std::domain_error("not strictly convex: h + h'' <= 0 at theta = " +
                                    std::to_string(th));
        theta_[i] = th;
        rho_[i] = rv;
        kappa_[i] = 1.0 / rv;
        sumH += hv;
        sumHRho += hv * rv;
    }
    perimeter_ = sumH * dth;
    area_ = 0.5 * sumHRho * dth;
    if (perimeter_ * perimeter_ < 4.0 * M_PI * area_ * (1.0 - 1e-9))
        throw std::domain_error("curve tables violate the isoperimetric inequality");

    s_.resize(nTheta + 1);
    s_[0] = 0.0;
    for (std::size_t i = 0; i < nTheta; ++i) {
        const double mid = theta_[i] + 0.5 * dth;
        double acc = 0.0;
        for (int q = 0; q < 5; ++q) acc += kGw[q] * rho(mid + 0.5 * dth * kGx[q]);
        s_[i + 1] = s_[i] + 0.5 * dth * acc;
    }
}

double ConvexCurve::rho(double theta) const {
    return support_.h(theta) + support_.d2h(theta);
}

double ConvexCurve::kappa_g(double theta) const { return 1.0 / rho(theta); }

double ConvexCurve::gauss_bonnet() const {
    const double dth = 2.0 * M_PI / static_cast<double>(theta_.size());
    double total = 0.0;
    for (std::size_t i = 0; i < theta_.size(); ++i) total += kappa_[i] * rho_[i] * dth;
    return total;
}

double ConvexCurve::isoperimetric_defect() const {
    return perimeter_ * perimeter_ - 4.0 * M_PI * area_;
}

ConvexCurve curve_from_support(SupportFunction support, std::size_t nTheta) {
    return ConvexCurve(std::move(support), nTheta);
}

Surface3D surface_spherocylinder(double r, double L_axis) {
    if (!(r > 0.0)) throw std::domain_error("cap radius must be positive");
    if (!(L_axis >= 0.0)) throw std::domain_error("axis length must be non-negative");
    Surface3D s;
    s.kind = (L_axis == 0.0) ? SurfaceKind::sphere : SurfaceKind::spherocylinder;
    s.r = r;
    s.L_axis = L_axis;
    s.area = 4.0 * M_PI * r * r + 2.0 * M_PI * r * L_axis;
    s.totalMeanCurv = 4.0 * M_PI * r + M_PI * L_axis;
    s.meanWidth = s.totalMeanCurv / (2.0 * M_PI);
    s.volume = (4.0 / 3.0) * M_PI * r * r * r + M_PI * r * r * L_axis;
    return s;
}

Surface3D surface_sphere(double R) { return surface_spherocylinder(R, 0.0); }

double minkowski_defect(const Surface3D& surf) {
    return surf.totalMeanCurv * surf.totalMeanCurv - 4.0 * M_PI * surf.area;
}

void check_surface(const Surface3D& surf) {
    if (!(surf.area > 0.0) || !(surf.totalMeanCurv > 0.0))
        throw std::domain_error("surface must have positive area and mean curvature");
    if (std::abs(surf.meanWidth - surf.totalMeanCurv / (2.0 * M_PI)) >
        1e-12 * surf.meanWidth)
        throw std::domain_error("mean width inconsistent with total mean curvature");
    if (minkowski_defect(surf) < -1e-9 * surf.totalMeanCurv * surf.totalMeanCurv)
        throw std::domain_error("surface violates the Minkowski inequality");
}

} // namespace robinext::geometry
