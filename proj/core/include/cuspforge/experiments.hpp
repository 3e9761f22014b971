#pragma once

#include <array>
#include <vector>

#include "cuspforge/geodesic.hpp"

namespace cuspforge {

struct VisibilityRow {
  int n = 0;
  double a = 0.0, b = 0.0;     // arc lengths along the two rays
  double z1 = 0.0, z2 = 0.0;   // endpoint heights
  double min_z = 0.0;          // minimum z along the connecting segment
  double endpoint_floor = 0.0; // min(z1, z2)
};

struct VisibilityReport {
  std::vector<VisibilityRow> rows;
  bool monotone = false;       // min_z strictly increasing in n
  bool above_floor = false;    // min_z >= endpoint_floor - tol for all rows
  double tol = 0.0;
};

// Escape-geometry experiment: two rays from (z0, theta0) at angles
// +-alpha0, integrated to arcs a_n and b_n; each pair of endpoints is
// joined by a connecting geodesic whose minimum height is recorded.
// Both rays must pass trapped_ray_check.
VisibilityReport visibility_experiment(
    const RevolutionSurface& surf, double z0, double theta0, double alpha0,
    const std::vector<std::pair<double, double>>& arcs, double tol = 1e-6);

struct TriangleReport {
  std::array<double, 3> angles{};
  double angle_sum = 0.0;
  double curvature_integral = 0.0; // integral of K dA over the triangle
  double residual = 0.0;           // |(angle_sum - pi) - integral|
  long cells_inside = 0;
  long grid_cells = 0;             // total grid resolution used
};

// Geodesic triangle on a graph surface: sides by shooting, interior angles
// from tangent directions in the metric, area integral by center-sampled
// cells selected with a scanline winding fill of the polygonized boundary.
TriangleReport gauss_bonnet_triangle(const GraphSurfaceMetric& surf,
                                     const GeodesicState& p1,
                                     const GeodesicState& p2,
                                     const GeodesicState& p3,
                                     long grid_cells = 1000000,
                                     double connect_tol = 1e-8);

struct InvisibilityRow {
  double T = 0.0;              // arc length along both rays
  double base_angle = 0.0;     // angle at the apex (the separation)
  double far_angle_sum = 0.0;  // sum of the two far angles
  double curvature_integral = 0.0;
  double residual = 0.0;
};

struct InvisibilityReport {
  std::vector<InvisibilityRow> rows;
  double separation = 0.0;
  double max_abs_integral = 0.0;
  // pi - separation - budget^2: every far-angle sum stays above this, so
  // the far angles cannot both shrink to 0 and the rays' endpoints can
  // never look asymptotic.
  double lower_bound = 0.0;
  bool all_above_bound = false;
};

// Shoots two rays separated by `separation` from the apex, connects their
// time-T endpoints for each T, and checks the angle budget
// pi - angle_sum = -integral K <= budget^2 on every triangle.
InvisibilityReport invisibility_witness(const GraphSurfaceMetric& surf,
                                        double separation,
                                        const std::vector<double>& horizons,
                                        GeodesicState apex = {},
                                        double tol = 1e-8);

}  // namespace cuspforge
