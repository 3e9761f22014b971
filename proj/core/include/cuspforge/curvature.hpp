#pragma once

#include <string>
#include <vector>

#include "cuspforge/curve.hpp"
#include "cuspforge/numeric.hpp"
#include "cuspforge/profile.hpp"

namespace cuspforge {

// Sectional curvature data of the warped metric
//   g = dt^2 + 4 f(t)^2 / (1 - |x|^2)^2 * sum dx_i^2
// over an interval times the unit ball. Planes containing the t-direction
// see K_radial = -f''/f; planes tangent to the cross-section see
// K_tangential = -(1 + f'^2)/f^2; every other 2-plane value is a convex
// combination of the two, so the pair bounds all sectional curvatures.
struct WarpedCurvature {
  double radial = 0.0;
  double tangential = 0.0;

  double min() const { return radial < tangential ? radial : tangential; }
  double max() const { return radial > tangential ? radial : tangential; }
  bool strictly_negative() const { return max() < 0.0; }
};

WarpedCurvature warped_curvature(const Jet2& fjet);
WarpedCurvature warped_curvature(const ProfileFunction& f, double t);

struct CurvatureReport {
  struct Family {
    std::string name;
    double min = 0.0, max = 0.0;
    double argmin = 0.0, argmax = 0.0;
  };
  std::string region;
  std::vector<Family> families;
  int resolution = 0;

  double global_min() const;
  double global_max() const;
};

// Min/max of both curvature families over [interval.lo, interval.hi] on a
// grid of `resolution` points; valid bounds for every tangent 2-plane.
CurvatureReport plane_curvature_bounds(const ProfileFunction& f,
                                       Interval interval, int resolution);

// Convenience {min, max} over both families.
Interval warped_curvature_range(const ProfileFunction& f, double lo, double hi,
                                int grid = 4096);

// Diagonal metric a(r)^2 du^2 + b(r)^2 dtheta^2 + c(r)^2 dr^2 on a
// 3-manifold. The three coordinate 2-plane curvatures:
//   K_ur      = -(a'' c - a' c') / (a c^3)
//   K_thetar  = -(b'' c - b' c') / (b c^3)
//   K_utheta  = -(a' b') / (a b c^2)
// AxisError when |b(r)| <= 1e-8.
class DiagonalMetric3D {
 public:
  DiagonalMetric3D(Curve1D a, Curve1D b, Curve1D c);

  double k_ur(double r) const;
  double k_thetar(double r) const;
  double k_utheta(double r) const;

  // {min, max} of the three coordinate-plane curvatures at r.
  Interval plane_range(double r) const;

  // Rescaling all coefficients by s (metric by s^2) divides curvatures by
  // s^2.
  DiagonalMetric3D homothety(double s) const;

  const Curve1D& a() const { return a_; }
  const Curve1D& b() const { return b_; }
  const Curve1D& c() const { return c_; }

 private:
  Curve1D a_, b_, c_;
};

// Graph surface z = g(x) - g(y) for a convex generator g, with the induced
// first fundamental form
//   E = 1 + g'(x)^2,  F = -g'(x) g'(y),  G = 1 + g'(y)^2
// and Gaussian curvature -g''(x) g''(y) / (1 + g'(x)^2 + g'(y)^2)^2.
class GraphSurfaceMetric {
 public:
  // Default generator: g'(t) = (pi/20)(1 + tanh t), slope budget pi/10.
  GraphSurfaceMetric();
  explicit GraphSurfaceMetric(Curve1D generator);

  struct Form {
    double E, F, G;                      // first fundamental form
    double Eu, Ev, Fu, Fv, Gu, Gv;       // first partials (u = x, v = y)
  };
  Form form(double x, double y) const;

  double gauss_curvature(double x, double y) const;
  double area_element(double x, double y) const;

  // integral of K dA over [-half, half]^2 by adaptive panel refinement;
  // QuadratureFailure when cell_cap cells cannot meet the tolerance.
  double total_curvature(double half, double tol = 1e-8,
                         long cell_cap = 1000000) const;

  // g'(inf) - g'(-inf), from the generator's limiting slopes.
  double slope_budget() const;

  const Curve1D& generator() const { return gen_; }

 private:
  Curve1D gen_;
};

// Christoffel symbols of a 2D metric from (E, F, G) and first partials;
// index 1 = u, 2 = v.
struct Christoffel2D {
  double g111, g211, g112, g212, g122, g222;
};

Christoffel2D christoffel(const GraphSurfaceMetric::Form& m);

}  // namespace cuspforge
