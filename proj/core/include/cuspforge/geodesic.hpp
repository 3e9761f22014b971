#pragma once

#include <array>
#include <vector>

#include "cuspforge/curvature.hpp"
#include "cuspforge/surface.hpp"

namespace cuspforge {

// Point on a geodesic in a 2D chart: u is z (revolution) or x (graph
// surface), v is theta or y. alpha is the angle against the u-coordinate
// curve (the meridian on revolution surfaces), measured in the surface
// metric; s is arc length from the trajectory start.
struct GeodesicState {
  double u = 0.0;
  double v = 0.0;
  double alpha = 0.0;
  double s = 0.0;
};

struct Trajectory {
  std::vector<GeodesicState> samples;  // ordered by s
  double clairaut_start = 0.0;         // phi^2 * dtheta/ds at s = 0
  double clairaut_drift = 0.0;         // max |phi sin(alpha) - constant|
  long steps_accepted = 0;
  long steps_rejected = 0;

  const GeodesicState& back() const { return samples.back(); }
};

// Unit-speed geodesic from (z0, theta0) at angle alpha0 to the meridian,
// integrated to the requested arc length with an embedded 5(4) pair and
// PI step control on error-per-unit-step. The Clairaut product
// phi(z) sin(alpha) is monitored every accepted step. tol must lie in
// [1e-12, 1e-4]; StepFailure below step 1e-12, DomainExit when z leaves
// the chart.
Trajectory integrate_geodesic(const RevolutionSurface& surf, double z0,
                              double theta0, double alpha0, double length,
                              double tol);

// Geodesic on a graph surface from (x0, y0) at angle alpha0 against the
// x-coordinate curve, measured in the metric.
Trajectory integrate_geodesic(const GraphSurfaceMetric& surf, double x0,
                              double y0, double alpha0, double length,
                              double tol);

struct TrappedRayReport {
  bool escapes = false;
  double clairaut = 0.0;       // rho_0 sin(alpha_0)
  double alpha_sup = 0.0;      // max angle along the integrated ray
  double epsilon_margin = 0.0; // pi/2 - arcsin(clairaut / h), escape case
  double z_reached = 0.0;
  double turning_radius = 0.0; // rho where alpha hits pi/2, trapped case
};

// Escape criterion on a decreasing-width horn: the ray escapes iff
// rho_0 sin(alpha_0) < waist h; then sup alpha stays below
// arcsin(clairaut/h). Otherwise the ray turns at rho = rho_0 sin(alpha_0).
TrappedRayReport trapped_ray_check(const RevolutionSurface& surf, double z0,
                                   double alpha0, double horizon_arc = 200.0,
                                   double tol = 1e-10);

struct GeodesicSegment {
  Trajectory path;
  double alpha0 = 0.0;         // shooting angle at the first endpoint
  double endpoint_error = 0.0; // chart distance to the target
  double length = 0.0;
};

// Shooting solver: bracket the signed miss over an angle sweep, bisect,
// then polish with secant steps. NoBracket when no sign change exists;
// ToleranceFailure when the polisher stalls above tol.
GeodesicSegment connect_geodesic(const RevolutionSurface& surf,
                                 const GeodesicState& p,
                                 const GeodesicState& q, double tol = 1e-8);

GeodesicSegment connect_geodesic(const GraphSurfaceMetric& surf,
                                 const GeodesicState& p,
                                 const GeodesicState& q, double tol = 1e-8);

// Surface distance between chart points by connecting them (geodesic
// length).
double surface_distance(const RevolutionSurface& surf, const GeodesicState& p,
                        const GeodesicState& q, double tol = 1e-8);

}  // namespace cuspforge
