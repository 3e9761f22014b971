#include "cuspforge/quadrature.hpp"

#include <cmath>

#include "cuspforge/errors.hpp"

namespace cuspforge {

namespace {

struct SimpsonCell {
  double value;
  double fa, fm, fb;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth, long& evals, double& err_acc) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  evals += 2;
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double delta = left + right - whole;
  if (depth <= 0) throw QuadratureFailure("adaptive Simpson depth exhausted");
  if (std::fabs(delta) <= 15.0 * tol) {
    err_acc += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                       evals, err_acc) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                       evals, err_acc);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double tol,
                                    int max_depth) {
  if (lo == hi) return {0.0, 0.0, 0};
  double sign = 1.0;
  if (hi < lo) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  long evals = 3;
  double fa = f(lo), fm = f(0.5 * (lo + hi)), fb = f(hi);
  double whole = simpson(fa, fm, fb, hi - lo);
  double err = 0.0;
  double v = adaptive_step(f, lo, hi, fa, fm, fb, whole, tol, max_depth,
                           evals, err);
  return {sign * v, err, evals};
}

double integrate_fixed(const std::function<double(double)>& f, double lo,
                       double hi, int panels) {
  if (panels < 1) panels = 1;
  int n = 2 * panels;
  double h = (hi - lo) / n;
  KahanSum acc;
  acc.add(f(lo));
  acc.add(f(hi));
  for (int i = 1; i < n; ++i) {
    double w = (i % 2 == 1) ? 4.0 : 2.0;
    acc.add(w * f(lo + h * i));
  }
  return acc.value() * h / 3.0;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double lo, double tol) {
  // x = lo + e^y - 1 turns the tail into a y-interval ladder.
  auto g = [&f, lo](double y) {
    double ey = std::exp(y);
    return f(lo + ey - 1.0) * ey;
  };
  QuadratureResult total;
  double y = 0.0;
  double block_width = 2.0;
  double prev_block = kInf;
  int stagnant = 0;
  for (int block = 0; block < 200; ++block) {
    QuadratureResult part =
        integrate_adaptive(g, y, y + block_width, tol * 0.25, 48);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
    y += block_width;
    double mag = std::fabs(part.value);
    if (mag < tol * 0.5 &&
        std::fabs(g(y)) * block_width < tol * 0.5)
      return total;
    if (mag >= prev_block && mag > tol) {
      if (++stagnant > 6)
        throw QuadratureFailure(
            "tail integral does not decay under the exponential ladder");
    } else {
      stagnant = 0;
    }
    prev_block = mag;
  }
  throw QuadratureFailure("tail ladder exceeded its block budget");
}

}  // namespace cuspforge
