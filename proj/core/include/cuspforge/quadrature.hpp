#pragma once

#include <functional>

#include "cuspforge/numeric.hpp"

namespace cuspforge {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Simpson on a finite interval; QuadratureFailure when the local
// error bound cannot be met within max_depth.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double tol,
                                    int max_depth = 60);

// Composite Simpson with a fixed even panel count (deterministic cost).
double integrate_fixed(const std::function<double(double)>& f, double lo,
                       double hi, int panels);

// Integral over [lo, inf) via x = lo + e^y - 1 substitution on a doubly
// adaptive ladder; requires eventual decay, QuadratureFailure otherwise.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double lo, double tol);

}  // namespace cuspforge
