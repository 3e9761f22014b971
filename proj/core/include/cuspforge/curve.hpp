#pragma once

#include <functional>
#include <memory>

#include "cuspforge/numeric.hpp"

namespace cuspforge {

// Value together with first and second derivative at a point.
struct Jet2 {
  double f = 0.0;
  double df = 0.0;
  double ddf = 0.0;
};

// A twice-differentiable function of one variable with exact derivatives.
// Surface radius profiles and graph generators are curves; piecewise profiles
// adapt to one via ProfileFunction::as_curve().
class Curve1D {
 public:
  Curve1D() = default;
  Curve1D(std::function<Jet2(double)> eval, Interval domain)
      : eval_(std::move(eval)), domain_(domain) {}

  Jet2 jet(double t) const;  // DomainError outside the domain
  double value(double t) const { return jet(t).f; }
  double d1(double t) const { return jet(t).df; }
  double d2(double t) const { return jet(t).ddf; }
  const Interval& domain() const { return domain_; }

  // h + c*exp(-k*(t - t0)); strictly decreasing toward h for c,k > 0.
  static Curve1D offset_exp(double h, double c, double k, double t0,
                            Interval domain);

  // Antiderivative of slope*(1 + tanh t)/2: total slope gain = slope.
  static Curve1D tanh_slope(double slope);

  static Curve1D sinh_curve(double c, double k, Interval domain);
  static Curve1D cosh_curve(double c, double k, Interval domain);
  static Curve1D constant(double c, Interval domain);
  static Curve1D scaled(const Curve1D& base, double factor);

 private:
  std::function<Jet2(double)> eval_;
  Interval domain_{-kInf, kInf};
};

}  // namespace cuspforge
