// Convex planar curves through their support function, plus a small
// catalog of convex 3D surfaces.
//
// A smooth convex body in the plane is described by its support function
// h(theta); the boundary point with outward normal (cos theta, sin theta)
// is h*u + h'*u_perp.  The radius of curvature is rho = h + h'' and
// strict convexity is certified by rho > 0 at every sample.  Perimeter
// and area reduce to single integrals: L = int h dtheta and
// A = 1/2 int h (h + h'') dtheta, which the uniform theta grid integrates
// with spectral accuracy for smooth h.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace robinext::geometry {

struct SupportFunction {
    std::function<double(double)> h;   // support value
    std::function<double(double)> dh;  // d h / d theta
    std::function<double(double)> d2h; // d^2 h / d theta^2
};

SupportFunction support_disk(double R);
SupportFunction support_ellipse(double a, double b);
// h(theta) = c[0] + sum_{n>=1} c[n] cos(n theta)
SupportFunction support_cosine_poly(std::vector<double> coeffs);

class ConvexCurve {
  public:
    // Builds the sample tables on a uniform grid of nTheta nodes.  Throws
    // std::domain_error ("not strictly convex") if any sampled h + h'' <= 0.
    ConvexCurve(SupportFunction support, std::size_t nTheta);

    double perimeter() const { return perimeter_; }
    double area() const { return area_; }
    std::size_t nTheta() const { return theta_.size(); }

    // Pointwise geometry from the support callables (exact, not tables).
    double rho(double theta) const;     // radius of curvature h + h''
    double kappa_g(double theta) const; // geometric curvature 1/rho, >= 0

    // Node tables.  s is the cumulative arc length with s[0] = 0 and
    // s[nTheta] = full boundary length integrated by per-interval Gauss
    // quadrature of rho (an independent route to the perimeter).
    const std::vector<double>& theta_nodes() const { return theta_; }
    const std::vector<double>& rho_nodes() const { return rho_; }
    const std::vector<double>& kappa_nodes() const { return kappa_; }
    const std::vector<double>& arclength_table() const { return s_; }

    // Total curvature int kappa_g ds contracted from the node tables;
    // equals 2 pi whenever the tables are mutually consistent.
    double gauss_bonnet() const;

    // Isoperimetric defect L^2 - 4 pi A >= 0, zero only for the disk.
    double isoperimetric_defect() const;

  private:
    SupportFunction support_;
    std::vector<double> theta_, rho_, kappa_, s_;
    double perimeter_ = 0.0;
    double area_ = 0.0;
};

ConvexCurve curve_from_support(SupportFunction support, std::size_t nTheta = 2048);

enum class SurfaceKind { sphere, spherocylinder };

struct Surface3D {
    SurfaceKind kind;
    double r;             // cap (or sphere) radius
    double L_axis;        // cylindrical axis length, 0 for a sphere
    double area;
    double totalMeanCurv; // integral of mean curvature over the surface
    double meanWidth;     // totalMeanCurv / (2 pi)
    double volume;
};

// Capsule: hemispherical caps of radius r joined by a cylinder of length
// L_axis.  Closed forms: area = 4 pi r^2 + 2 pi r L, M = 4 pi r + pi L,
// volume = 4/3 pi r^3 + pi r^2 L.  Throws for r <= 0 or L_axis < 0.
Surface3D surface_spherocylinder(double r, double L_axis);
Surface3D surface_sphere(double R);

// Minkowski defect M^2 - 4 pi area; >= 0 for convex surfaces with
// equality only for the sphere.
double minkowski_defect(const Surface3D& surf);

// Validates the aggregate invariants (positivity, meanWidth consistency,
// Minkowski inequality); throws std::domain_error on violation.  Solvers
// taking a Surface3D call this gate before using the fields.
void check_surface(const Surface3D& surf);

} // namespace robinext::geometry
