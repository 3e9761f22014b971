#include "cuspforge/curve.hpp"

#include <cmath>
#include <sstream>

#include "cuspforge/errors.hpp"

namespace cuspforge {

Jet2 Curve1D::jet(double t) const {
  if (!domain_.contains(t)) {
    std::ostringstream os;
    os << "curve evaluated at t=" << t << " outside [" << domain_.lo << ", "
       << domain_.hi << "]";
    throw DomainError(os.str());
  }
  return eval_(t);
}

Curve1D Curve1D::offset_exp(double h, double c, double k, double t0,
                            Interval domain) {
  return Curve1D(
      [h, c, k, t0](double t) {
        double e = c * std::exp(-k * (t - t0));
        return Jet2{h + e, -k * e, k * k * e};
      },
      domain);
}

Curve1D Curve1D::tanh_slope(double slope) {
  double half = 0.5 * slope;
  return Curve1D(
      [half](double t) {
        double th = std::tanh(t);
        double sech2 = 1.0 - th * th;
        return Jet2{half * (t + log_cosh(t)), half * (1.0 + th),
                    half * sech2};
      },
      Interval{-kInf, kInf});
}

Curve1D Curve1D::sinh_curve(double c, double k, Interval domain) {
  return Curve1D(
      [c, k](double t) {
        return Jet2{c * std::sinh(k * t), c * k * std::cosh(k * t),
                    c * k * k * std::sinh(k * t)};
      },
      domain);
}

Curve1D Curve1D::cosh_curve(double c, double k, Interval domain) {
  return Curve1D(
      [c, k](double t) {
        return Jet2{c * std::cosh(k * t), c * k * std::sinh(k * t),
                    c * k * k * std::cosh(k * t)};
      },
      domain);
}

Curve1D Curve1D::constant(double c, Interval domain) {
  return Curve1D([c](double) { return Jet2{c, 0.0, 0.0}; }, domain);
}

Curve1D Curve1D::scaled(const Curve1D& base, double factor) {
  auto eval = base.eval_;
  return Curve1D(
      [eval, factor](double t) {
        Jet2 j = eval(t);
        return Jet2{factor * j.f, factor * j.df, factor * j.ddf};
      },
      base.domain_);
}

}  // namespace cuspforge
