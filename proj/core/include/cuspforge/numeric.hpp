#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace cuspforge {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double sqr(double x) { return x * x; }

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool unbounded() const { return std::isinf(hi); }
  double width() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

// Pairwise summation: the result depends only on the element order, not on
// any evaluation schedule, and keeps the error near eps*log2(n).
double pairwise_sum(std::span<const double> v);

// Compensated accumulator for running sums inside quadrature loops.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

std::vector<double> linspace(double a, double b, int n);

// Bisection on a bracketed sign change; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iters = 200);

// Runs fn(i) for i in [0, n). With threads > 1 the index range is split into
// contiguous chunks; fn must write only to slots it owns.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

// log(cosh(t)) without overflow for large |t|.
inline double log_cosh(double t) {
  double a = std::fabs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace cuspforge
