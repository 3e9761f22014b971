#pragma once

#include <utility>

#include "cuspforge/curve.hpp"

namespace cuspforge {

// Surface of revolution around the z-axis with radius profile phi(z):
//   ds^2 = (1 + phi'(z)^2) dz^2 + phi(z)^2 dtheta^2.
// phi must stay positive; escape scenarios use phi strictly decreasing to a
// positive limit h.
class RevolutionSurface {
 public:
  explicit RevolutionSurface(Curve1D phi, double h);

  // h + c * e^(-k z) on [z_lo, inf); h is the exact waist limit.
  static RevolutionSurface exp_horn(double h = 1.0, double c = 1.0,
                                    double k = 1.0, double z_lo = -30.0);

  // Flat cylinder of constant radius.
  static RevolutionSurface cylinder(double radius);

  double radius(double z) const { return phi_.value(z); }
  Jet2 radius_jet(double z) const { return phi_.jet(z); }
  double waist() const { return h_; }
  const Interval& z_domain() const { return phi_.domain(); }

  // Metric coefficients E = 1 + phi'^2 (dz^2), G = phi^2 (dtheta^2), and
  // their z-derivatives.
  struct Coeffs {
    double E, G, dE, dG;
  };
  Coeffs coeffs(double z) const;

 private:
  Curve1D phi_;
  double h_;
};

}  // namespace cuspforge
