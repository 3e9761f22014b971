#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuspforge/curvature.hpp"
#include "cuspforge/profile.hpp"

namespace cuspforge {

// One cusp end of an n-manifold: warped metric dt^2 + f(t)^2 g_N over
// [start, truncation) x N, where N is a compact hyperbolic (n-1)-manifold
// entering only through its volume. truncation may be infinite.
struct CuspModel {
  int dim = 2;                        // manifold dimension n >= 2
  double cross_section_volume = 1.0;  // vol(N) in its own metric
  ProfileFunction profile;
  double start = 0.0;
  double truncation = kInf;

  bool unbounded() const { return std::isinf(truncation); }
};

// A finite-volume model: compact core plus cusp ends.
struct ManifoldDescriptor {
  double compact_volume = 0.0;
  std::vector<CuspModel> cusps;
  std::string label;
};

struct VolumeReport {
  bool finite = false;
  double value = 0.0;           // meaningful when finite
  double error_estimate = 0.0;  // quadrature part only
  std::string reason;           // witness for divergence, when !finite
};

// vol(N) * integral_start^truncation f(t)^(n-1) dt. The last segment is
// integrated in closed form when it is an Exp or Power tail; everything
// before it goes through adaptive quadrature at the given tolerance.
// Divergent tails (Cosh, Constant, Power with s*(n-1) <= 1 on an unbounded
// domain) are reported, not thrown.
VolumeReport cusp_volume(const CuspModel& c, double tol = 1e-10);

VolumeReport manifold_volume(const ManifoldDescriptor& m, double tol = 1e-10);

struct CompletenessReport {
  bool complete = false;
  std::string certificate;
};

// Radial arc length is integral dt, so a standalone cusp is complete exactly
// when its t-domain is unbounded above.
CompletenessReport completeness_check(const CuspModel& c);

struct CurvatureAsymptotics {
  bool blows_down = false;    // K_tangential -> -inf along the end
  double sup_curvature = 0.0; // max over all sampled 2-plane curvatures
  std::vector<std::pair<double, double>> tangential_samples;  // (t, K_tan)
  double tail_growth_exponent = 0.0;  // slope of log|K_tan| vs log t, power
                                      // tails only (0 otherwise)
};

// Samples both curvature families along [start, start + window] and
// classifies the tail from the final segment's form.
CurvatureAsymptotics curvature_asymptotics(const CuspModel& c,
                                           double window = 40.0,
                                           int samples = 1000);

}  // namespace cuspforge
