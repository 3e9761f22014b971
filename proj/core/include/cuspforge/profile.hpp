#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cuspforge/curve.hpp"
#include "cuspforge/numeric.hpp"

namespace cuspforge {

enum class SegmentForm { Cosh, Exp, Power, Quintic, Constant };

// One piece of a warping profile on [lo, hi); hi may be infinite.
//
//   Cosh      c * cosh(k*(t - t0))
//   Exp       c * exp(-k*(t - t0))
//   Power     c * (t - t0)^(-s), valid for t > t0
//   Quintic   sum_i a[i]*(t - t0)^i, i = 0..5
//   Constant  c
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  SegmentForm form = SegmentForm::Constant;
  double c = 1.0;
  double k = 1.0;
  double t0 = 0.0;
  double s = 0.0;
  std::array<double, 6> a{};

  Jet2 jet(double t) const;

  static Segment cosh_seg(double lo, double hi, double c, double k, double t0);
  static Segment exp_seg(double lo, double hi, double c, double k, double t0);
  static Segment power_seg(double lo, double hi, double c, double s, double t0);
  static Segment quintic_seg(double lo, double hi,
                             const std::array<double, 6>& a, double t0);
  static Segment constant_seg(double lo, double hi, double c);
};

// Piecewise warping profile f: [lo, hi) -> (0, inf), C^2 across knots.
//
// Knot continuity is validated to 1e-9 relative on value and both
// derivatives; positivity is validated per segment in closed form (a grid
// check plus exact interior minima for quintic pieces).
class ProfileFunction {
 public:
  ProfileFunction() = default;
  explicit ProfileFunction(std::vector<Segment> segs);

  double lo() const;
  double hi() const;
  bool unbounded() const;
  Interval domain() const { return {lo(), hi()}; }

  Jet2 jet(double t) const;  // DomainError outside [lo, hi)
  double value(double t) const { return jet(t).f; }
  double d1(double t) const { return jet(t).df; }
  double d2(double t) const { return jet(t).ddf; }

  const std::vector<Segment>& segments() const { return segs_; }
  std::vector<double> knots() const;

  // Throws DomainError on gaps/empty, ToleranceFailure on a C^2 break or a
  // nonpositive value.
  void validate() const;

  // min over the domain of analytic f'' (exact per-segment extrema for
  // polynomial pieces, closed forms otherwise).
  double min_second_derivative() const;

  Curve1D as_curve() const;

  // Plain-text serialization, one record per segment, 17 significant digits.
  std::string to_text() const;
  static ProfileFunction from_text(std::string_view text);

  static ProfileFunction cosh_profile(double lo, double hi, double c = 1.0,
                                      double k = 1.0, double t0 = 0.0);
  static ProfileFunction exponential(double lo, double hi, double c = 1.0,
                                     double k = 1.0, double t0 = 0.0);
  static ProfileFunction constant(double lo, double hi, double c);

 private:
  const Segment& segment_at(double t) const;
  std::vector<Segment> segs_;
};

enum class DecayMode { CubicDecay, Exponential };

// Convex decay profile on [a, inf) with the 2-jet of cosh at a.
//
// For a < 0 the output is convex (f'' >= 0 on every segment): a quintic
// Hermite blend on [a, a+1] into the decay tail when one exists, otherwise a
// staged construction (linear f'' ramp, zero-curvature coast, searched
// quintic blend). For a >= 0 a convex decaying profile does not exist; the
// jet, decay, and positivity still hold.
//
// CubicDecay tails are c*(t-t0)^-4, so t^3 f(t) -> 0; Exponential tails are
// C*e^-t past the transition knot.
ProfileFunction make_decay_profile(double a, DecayMode mode);

// C^2 convex smoothing of the kink between e^{-A(t+2a)} and e^{2A(t-a)}.
// The patch window starts at (-1/A, 1/A) and shrinks geometrically until the
// quintic satisfies h''/h > 1e-10 on a dense grid; PatchFailure below width
// 1e-6/A. Requires A >= 2, a > 0.
ProfileFunction smooth_kink(double A, double a);

// Worst-case ratio of smoothed to unsmoothed tangential curvature
// (1 + h'^2)/h^2 over the patch window of smooth_kink(A, a); the planner's
// conservative neck inflation factor.
double kink_curvature_inflation(double A, double a);

// tau |-> f(A*tau + shift)/A with closed-form segment parameters; curvatures
// transform as K(tau) = A^2 * K(A*tau + shift).
ProfileFunction scale_profile(const ProfileFunction& f, double A,
                              double shift = 0.0);

}  // namespace cuspforge
