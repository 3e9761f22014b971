#include "cuspforge/surface.hpp"

#include "cuspforge/errors.hpp"

namespace cuspforge {

RevolutionSurface::RevolutionSurface(Curve1D phi, double h)
    : phi_(std::move(phi)), h_(h) {}

RevolutionSurface RevolutionSurface::exp_horn(double h, double c, double k,
                                              double z_lo) {
  if (h <= 0.0 || c <= 0.0 || k <= 0.0)
    throw DomainError("horn needs positive waist, amplitude, and rate");
  return RevolutionSurface(
      Curve1D::offset_exp(h, c, k, 0.0, Interval{z_lo, kInf}), h);
}

RevolutionSurface RevolutionSurface::cylinder(double radius) {
  if (radius <= 0.0) throw DomainError("cylinder needs a positive radius");
  return RevolutionSurface(Curve1D::constant(radius, Interval{-kInf, kInf}),
                           radius);
}

RevolutionSurface::Coeffs RevolutionSurface::coeffs(double z) const {
  Jet2 j = phi_.jet(z);
  return {1.0 + j.df * j.df, j.f * j.f, 2.0 * j.df * j.ddf, 2.0 * j.f * j.df};
}

}  // namespace cuspforge
