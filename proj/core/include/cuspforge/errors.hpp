#pragma once

#include <stdexcept>
#include <string>

namespace cuspforge {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the domain of a profile, metric, or chain model.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation too close to a vanishing angular coefficient of a diagonal metric.
struct AxisError : Error {
  using Error::Error;
};

// Adaptive quadrature hit its subdivision or cell budget before the tolerance.
struct QuadratureFailure : Error {
  using Error::Error;
};

// No smoothing patch satisfied the convexity margin down to the minimal window.
struct PatchFailure : Error {
  using Error::Error;
};

// A truncation depth fell outside the decaying tail it must lie on.
struct TailError : Error {
  using Error::Error;
};

// Cyclic-cover side condition violated and strict checking was requested.
struct SideConditionError : Error {
  using Error::Error;
};

// Missing or malformed runtime configuration (flags, environment, config file).
struct ConfigError : Error {
  using Error::Error;
};

// Adaptive step control drove the step size below the hard floor.
struct StepFailure : Error {
  using Error::Error;
};

// A trajectory left the coordinate chart.
struct DomainExit : Error {
  using Error::Error;
};

// Shooting could not bracket a connecting geodesic.
struct NoBracket : Error {
  using Error::Error;
};

// An iteration converged but not to the requested tolerance.
struct ToleranceFailure : Error {
  using Error::Error;
};

// A diagnostic radius beyond the constructed chain model.
struct HorizonError : Error {
  using Error::Error;
};

// Truncation planning failed: the curvature budget is violated at radius r.
struct BudgetInfeasible : Error {
  BudgetInfeasible(const std::string& what, double r)
      : Error(what), violating_r(r) {}
  double violating_r;
};

}  // namespace cuspforge
