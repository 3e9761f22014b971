#include "cuspforge/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuspforge/errors.hpp"
#include "cuspforge/quadrature.hpp"

namespace cuspforge {

namespace {

struct TailIntegral {
  bool finite = false;
  double value = 0.0;
  std::string reason;
};

// integral_T^inf f(t)^m dt for the final profile segment, in closed form.
TailIntegral tail_volume(const Segment& s, double T, int m) {
  switch (s.form) {
    case SegmentForm::Exp: {
      if (s.k <= 0.0) return {false, 0.0, "exponentially growing tail"};
      double km = s.k * m;
      double v = std::pow(s.c, m) * std::exp(-km * (T - s.t0)) / km;
      return {true, v, ""};
    }
    case SegmentForm::Power: {
      double sm = s.s * m;
      if (sm <= 1.0)
        return {false, 0.0, "power tail decays too slowly for the exponent"};
      double v = std::pow(s.c, m) * std::pow(T - s.t0, 1.0 - sm) / (sm - 1.0);
      return {true, v, ""};
    }
    case SegmentForm::Cosh:
      return {false, 0.0, "cosh tail grows without bound"};
    case SegmentForm::Constant:
      return {false, 0.0, "constant cross-section on an unbounded end"};
    case SegmentForm::Quintic:
      return {false, 0.0, "polynomial tail on an unbounded domain"};
  }
  return {false, 0.0, "unclassified tail"};
}

}  // namespace

VolumeReport cusp_volume(const CuspModel& c, double tol) {
  if (c.dim < 2) throw DomainError("cusp dimension must be at least 2");
  const ProfileFunction& f = c.profile;
  if (c.start < f.lo() || (!c.unbounded() && c.truncation > f.hi()) ||
      (c.unbounded() && !f.unbounded()))
    throw DomainError("profile domain does not cover the cusp");
  if (!(c.start < c.truncation))
    throw DomainError("cusp start must precede its truncation");

  int m = c.dim - 1;
  auto density = [&f, m](double t) { return std::pow(f.value(t), m); };

  VolumeReport rep;
  double head_end = c.truncation;
  TailIntegral tail{true, 0.0, ""};
  if (c.unbounded()) {
    const Segment& last = f.segments().back();
    double tail_start = std::max(c.start, last.lo);
    tail = tail_volume(last, tail_start, m);
    if (!tail.finite) {
      rep.finite = false;
      rep.reason = tail.reason;
      return rep;
    }
    head_end = tail_start;
  }

  // Head: integrate knot-interval by knot-interval so the quadrature never
  // straddles a C^2-only break.
  double head = 0.0, err = 0.0;
  if (head_end > c.start) {
    std::vector<double> cuts{c.start};
    for (double k : f.knots())
      if (k > c.start && k < head_end) cuts.push_back(k);
    cuts.push_back(head_end);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      QuadratureResult q = integrate_adaptive(
          density, cuts[i], cuts[i + 1], tol / double(cuts.size()));
      head += q.value;
      err += q.error_estimate;
    }
  }

  rep.finite = true;
  rep.value = c.cross_section_volume * (head + tail.value);
  rep.error_estimate = c.cross_section_volume * err;
  return rep;
}

VolumeReport manifold_volume(const ManifoldDescriptor& m, double tol) {
  VolumeReport rep;
  rep.finite = true;
  rep.value = m.compact_volume;
  for (std::size_t i = 0; i < m.cusps.size(); ++i) {
    VolumeReport part = cusp_volume(m.cusps[i], tol);
    if (!part.finite) {
      std::ostringstream os;
      os << "cusp " << i << ": " << part.reason;
      return {false, 0.0, 0.0, os.str()};
    }
    rep.value += part.value;
    rep.error_estimate += part.error_estimate;
  }
  return rep;
}

CompletenessReport completeness_check(const CuspModel& c) {
  if (c.unbounded())
    return {true, "radial arc length integral over [start, inf) diverges"};
  std::ostringstream os;
  os << "finite radial length: boundary at t=" << c.truncation;
  return {false, os.str()};
}

CurvatureAsymptotics curvature_asymptotics(const CuspModel& c, double window,
                                           int samples) {
  if (!c.unbounded())
    throw DomainError("asymptotics need an unbounded cusp");
  CurvatureAsymptotics out;
  const ProfileFunction& f = c.profile;
  double hi = c.start + window;
  out.sup_curvature = -kInf;
  out.tangential_samples.reserve(static_cast<std::size_t>(samples));
  for (double t : linspace(c.start, hi, samples)) {
    WarpedCurvature k = warped_curvature(f, t);
    out.sup_curvature = std::max(out.sup_curvature, k.max());
    out.tangential_samples.emplace_back(t, k.tangential);
  }

  const Segment& last = f.segments().back();
  out.blows_down = (last.form == SegmentForm::Exp && last.k > 0.0) ||
                   (last.form == SegmentForm::Power && last.s > 0.0);

  if (last.form == SegmentForm::Power) {
    // Fit log|K_tan| against log t on the tail.
    double t_lo = std::max(10.0, last.lo + 1.0);
    double t_hi = std::max(100.0, t_lo * 10.0);
    int n = 50;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      double t = t_lo * std::pow(t_hi / t_lo, double(i) / (n - 1));
      double x = std::log(t);
      double y = std::log(std::fabs(warped_curvature(f, t).tangential));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    out.tail_growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return out;
}

}  // namespace cuspforge
