#include "cuspforge/geodesic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

#include "cuspforge/errors.hpp"

namespace cuspforge {
namespace {

using Form = GraphSurfaceMetric::Form;
using State = std::array<double, 4>;  // u, v, du/ds, dv/ds

constexpr double kMinStep = 1e-12;
constexpr long kStepBudget = 40000000;

// The requested tolerance bounds the error per unit arc; the controller
// targets a margin below it so endpoint checks keep headroom.
constexpr double kTargetMargin = 0.05;

struct RevChart {
  const RevolutionSurface* surf;
  static constexpr bool kMonitorClairaut = true;

  // Trial stages of an adaptive step may probe slightly past the chart edge;
  // coefficients are frozen at the boundary so the accepted-step domain check
  // reports the exit instead of the curve rejecting the evaluation.
  double clamp_u(double u) const {
    Interval d = surf->z_domain();
    return std::min(std::max(u, d.lo), d.hi);
  }
  Form form(double u, double) const {
    auto c = surf->coeffs(clamp_u(u));
    return {c.E, 0.0, c.G, c.dE, 0.0, 0.0, 0.0, c.dG, 0.0};
  }
  bool in_domain(double u) const { return surf->z_domain().contains(u); }
  void rhs(const State& y, State& dy) const {
    auto c = surf->coeffs(clamp_u(y[0]));
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = (-0.5 * c.dE * y[2] * y[2] + 0.5 * c.dG * y[3] * y[3]) / c.E;
    dy[3] = -(c.dG / c.G) * y[2] * y[3];
  }
  double clairaut(const State& y) const {
    return surf->coeffs(clamp_u(y[0])).G * y[3];
  }
};

struct GraphChart {
  const GraphSurfaceMetric* surf;
  static constexpr bool kMonitorClairaut = false;

  Form form(double u, double v) const { return surf->form(u, v); }
  bool in_domain(double) const { return true; }
  void rhs(const State& y, State& dy) const {
    Christoffel2D g = christoffel(surf->form(y[0], y[1]));
    double p = y[2], q = y[3];
    dy[0] = p;
    dy[1] = q;
    dy[2] = -(g.g111 * p * p + 2.0 * g.g112 * p * q + g.g122 * q * q);
    dy[3] = -(g.g211 * p * p + 2.0 * g.g212 * p * q + g.g222 * q * q);
  }
  double clairaut(const State&) const { return 0.0; }
};

// Orthonormal frame at a chart point: e1 along the u-curve, e2 its metric
// normal. alpha is measured from e1 toward e2.
template <class C>
State launch(const C& chart, double u, double v, double alpha) {
  Form m = chart.form(u, v);
  double se = std::sqrt(m.E);
  double n2 = std::sqrt(m.G - m.F * m.F / m.E);
  double ca = std::cos(alpha), sa = std::sin(alpha);
  return {u, v, ca / se - sa * m.F / (m.E * n2), sa / n2};
}

template <class C>
double angle_of(const C& chart, const State& y) {
  Form m = chart.form(y[0], y[1]);
  double n2 = std::sqrt(m.G - m.F * m.F / m.E);
  double a1 = (m.E * y[2] + m.F * y[3]) / std::sqrt(m.E);
  return std::atan2(y[3] * n2, a1);
}

template <class C>
double metric_dist(const C& chart, const State& y, double uq, double vq) {
  Form m = chart.form(uq, vq);
  double du = y[0] - uq, dv = y[1] - vq;
  double q = m.E * du * du + 2.0 * m.F * du * dv + m.G * dv * dv;
  return std::sqrt(std::max(0.0, q));
}

// One Dormand-Prince 5(4) step; fills the fifth-order solution and the
// embedded error estimate.
template <class C>
void dp_step(const C& chart, const State& y, double h, State& y5, State& err) {
  State k1, k2, k3, k4, k5, k6, k7, tmp;
  chart.rhs(y, k1);
  for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h * (0.2 * k1[i]);
  chart.rhs(tmp, k2);
  for (int i = 0; i < 4; ++i)
    tmp[i] = y[i] + h * (3.0 / 40.0 * k1[i] + 9.0 / 40.0 * k2[i]);
  chart.rhs(tmp, k3);
  for (int i = 0; i < 4; ++i)
    tmp[i] = y[i] + h * (44.0 / 45.0 * k1[i] - 56.0 / 15.0 * k2[i] +
                         32.0 / 9.0 * k3[i]);
  chart.rhs(tmp, k4);
  for (int i = 0; i < 4; ++i)
    tmp[i] = y[i] + h * (19372.0 / 6561.0 * k1[i] - 25360.0 / 2187.0 * k2[i] +
                         64448.0 / 6561.0 * k3[i] - 212.0 / 729.0 * k4[i]);
  chart.rhs(tmp, k5);
  for (int i = 0; i < 4; ++i)
    tmp[i] = y[i] + h * (9017.0 / 3168.0 * k1[i] - 355.0 / 33.0 * k2[i] +
                         46732.0 / 5247.0 * k3[i] + 49.0 / 176.0 * k4[i] -
                         5103.0 / 18656.0 * k5[i]);
  chart.rhs(tmp, k6);
  for (int i = 0; i < 4; ++i)
    y5[i] = y[i] + h * (35.0 / 384.0 * k1[i] + 500.0 / 1113.0 * k3[i] +
                        125.0 / 192.0 * k4[i] - 2187.0 / 6784.0 * k5[i] +
                        11.0 / 84.0 * k6[i]);
  chart.rhs(y5, k7);
  for (int i = 0; i < 4; ++i)
    err[i] = h * (71.0 / 57600.0 * k1[i] - 71.0 / 16695.0 * k3[i] +
                  71.0 / 1920.0 * k4[i] - 17253.0 / 339200.0 * k5[i] +
                  22.0 / 525.0 * k6[i] - 1.0 / 40.0 * k7[i]);
}

// Bisect the step size inside one accepted step until the event function
// crosses zero; event(y_prev) < 0 and event at step h_hi is >= 0.
template <class C>
std::pair<State, double> refine_crossing(
    const C& chart, const State& y_prev, double h_hi,
    const std::function<double(const State&)>& event) {
  State y5, err;
  double lo = 0.0, hi = h_hi;
  for (int i = 0; i < 80 && (hi - lo) > 1e-18 * h_hi; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    dp_step(chart, y_prev, mid, y5, err);
    if (event(y5) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  dp_step(chart, y_prev, hi, y5, err);
  return {y5, hi};
}

template <class C>
Trajectory run_geodesic(const C& chart, double u0, double v0, double alpha0,
                        double length, double tol,
                        const std::function<double(const State&)>* event,
                        bool* crossed) {
  if (!(tol >= 1e-12 && tol <= 1e-4))
    throw DomainError("geodesic tolerance must lie in [1e-12, 1e-4]");
  if (!(length >= 0.0) || !std::isfinite(length))
    throw DomainError("geodesic arc length must be finite and nonnegative");
  if (!chart.in_domain(u0)) throw DomainExit("geodesic start is off-chart");

  double target = tol * kTargetMargin;
  State y = launch(chart, u0, v0, alpha0);
  Trajectory traj;
  traj.clairaut_start = chart.clairaut(y);
  traj.samples.push_back({y[0], y[1], angle_of(chart, y), 0.0});
  if (crossed) *crossed = false;
  if (event && (*event)(y) >= 0.0) {
    if (crossed) *crossed = true;
    return traj;
  }
  if (length == 0.0) return traj;

  double s = 0.0;
  double h = std::min(0.01, length);
  double norm_prev = 1.0;
  State y5, err;
  while (s < length) {
    if (traj.steps_accepted + traj.steps_rejected > kStepBudget)
      throw StepFailure("geodesic step budget exhausted");
    bool clipped = h >= length - s;
    if (clipped) h = length - s;
    dp_step(chart, y, h, y5, err);
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
      double sk = target * (1.0 + std::max(std::abs(y[i]), std::abs(y5[i])));
      norm += sqr(err[i] / sk);
    }
    norm = std::sqrt(norm / 4.0) / h;
    if (norm <= 1.0) {
      ++traj.steps_accepted;
      if (!chart.in_domain(y5[0])) {
        std::ostringstream os;
        os << "geodesic left the chart at u = " << y5[0];
        throw DomainExit(os.str());
      }
      double s_new = s + h;
      if (event && (*event)(y5) >= 0.0) {
        auto [yc, hc] = refine_crossing(chart, y, h, *event);
        double sc = s + hc;
        if (C::kMonitorClairaut)
          traj.clairaut_drift =
              std::max(traj.clairaut_drift,
                       std::abs(chart.clairaut(yc) - traj.clairaut_start));
        traj.samples.push_back({yc[0], yc[1], angle_of(chart, yc), sc});
        y = yc;
        if (crossed) *crossed = true;
        return traj;
      }
      if (C::kMonitorClairaut)
        traj.clairaut_drift =
            std::max(traj.clairaut_drift,
                     std::abs(chart.clairaut(y5) - traj.clairaut_start));
      traj.samples.push_back({y5[0], y5[1], angle_of(chart, y5), s_new});
      y = y5;
      s = s_new;
      double fac = 0.9 * std::pow(std::max(norm, 1e-30), -0.175) *
                   std::pow(std::max(norm_prev, 1e-30), 0.1);
      norm_prev = norm;
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      ++traj.steps_rejected;
      double fac = 0.9 * std::pow(norm, -0.25);
      h *= std::clamp(fac, 0.1, 0.9);
      if (h < kMinStep)
        throw StepFailure("geodesic step size underflow below 1e-12");
    }
    if (!clipped && h < kMinStep)
      throw StepFailure("geodesic step size underflow below 1e-12");
  }
  return traj;
}

struct ShotResult {
  bool crossed = false;
  double miss = 0.0;
  Trajectory traj;
};

template <class C>
ShotResult shoot(const C& chart, double u0, double v0, double alpha,
                 double arc_cap, double tol,
                 const std::function<double(const State&)>& event,
                 const std::function<double(const State&)>& miss) {
  ShotResult r;
  r.traj = run_geodesic(chart, u0, v0, alpha, arc_cap, tol, &event, &r.crossed);
  if (r.crossed) {
    const GeodesicState& e = r.traj.back();
    State y{e.u, e.v, 0.0, 0.0};
    r.miss = miss(y);
  }
  return r;
}

// Bracket the signed miss over an angle sweep, bisect the bracket, then
// polish with secant steps.
template <class C>
GeodesicSegment solve_shot(const C& chart, double u0, double v0,
                           const std::vector<double>& sweep, double arc_cap,
                           double tol,
                           const std::function<double(const State&)>& event,
                           const std::function<double(const State&)>& miss,
                           double uq, double vq) {
  double itol = std::clamp(0.1 * tol, 1e-12, 1e-4);

  double a_lo = 0.0, a_hi = 0.0, m_lo = 0.0, m_hi = 0.0;
  bool have_prev = false, have_bracket = false;
  double prev_a = 0.0, prev_m = 0.0;
  for (double a : sweep) {
    ShotResult r = shoot(chart, u0, v0, a, arc_cap, itol, event, miss);
    if (!r.crossed) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev_m * r.miss <= 0.0) {
      a_lo = prev_a;
      m_lo = prev_m;
      a_hi = a;
      m_hi = r.miss;
      have_bracket = true;
      break;
    }
    have_prev = true;
    prev_a = a;
    prev_m = r.miss;
  }
  if (!have_bracket)
    throw NoBracket("no sign change of the shooting miss over the angle sweep");

  for (int i = 0; i < 60 && (a_hi - a_lo) > 1e-15; ++i) {
    double mid = 0.5 * (a_lo + a_hi);
    ShotResult r = shoot(chart, u0, v0, mid, arc_cap, itol, event, miss);
    double m = r.crossed ? r.miss : m_lo;
    if (m_lo * m <= 0.0) {
      a_hi = mid;
      m_hi = m;
    } else {
      a_lo = mid;
      m_lo = m;
    }
    if (std::abs(m) < 1e-14) break;
  }

  double a0 = a_lo, a1 = a_hi, m0 = m_lo, m1 = m_hi;
  double best_a = std::abs(m0) < std::abs(m1) ? a0 : a1;
  for (int i = 0; i < 12 && std::abs(m1 - m0) > 0.0; ++i) {
    double an = a1 - m1 * (a1 - a0) / (m1 - m0);
    if (!std::isfinite(an)) break;
    ShotResult r = shoot(chart, u0, v0, an, arc_cap, itol, event, miss);
    if (!r.crossed) break;
    a0 = a1;
    m0 = m1;
    a1 = an;
    m1 = r.miss;
    if (std::abs(m1) < std::abs(m0)) best_a = a1;
    if (std::abs(m1) < 1e-15) break;
  }

  GeodesicSegment seg;
  seg.alpha0 = best_a;
  ShotResult fin = shoot(chart, u0, v0, best_a, arc_cap, itol, event, miss);
  if (!fin.crossed)
    throw ToleranceFailure("shooting solution lost the target crossing");
  seg.path = std::move(fin.traj);
  {
    const GeodesicState& e = seg.path.back();
    State y{e.u, e.v, 0.0, 0.0};
    seg.endpoint_error = metric_dist(chart, y, uq, vq);
  }
  seg.length = seg.path.back().s;
  if (seg.endpoint_error > tol) {
    std::ostringstream os;
    os << "shooting endpoint error " << seg.endpoint_error
       << " exceeds tolerance " << tol;
    throw ToleranceFailure(os.str());
  }
  return seg;
}

GeodesicSegment connect_rev(const RevolutionSurface& surf,
                            const GeodesicState& p, const GeodesicState& q,
                            double tol) {
  RevChart chart{&surf};
  double dth = q.v - p.v;
  double rho_max = std::max(surf.radius(p.u), surf.radius(q.u));
  rho_max = std::max(rho_max, surf.radius(std::min(p.u, q.u)));

  if (std::abs(dth) < 1e-12) {
    // Meridian connection; the profile curve is itself a geodesic.
    double dir = q.u >= p.u ? 1.0 : -1.0;
    double uq = q.u;
    std::function<double(const State&)> event = [dir, uq](const State& y) {
      return dir * (y[0] - uq);
    };
    std::function<double(const State&)> miss = [uq](const State& y) {
      return y[0] - uq;
    };
    double cap = 4.0 + 3.0 * std::abs(q.u - p.u) * std::sqrt(1.0 + sqr(rho_max));
    double alpha = dir > 0 ? 0.0 : 3.14159265358979323846;
    double itol = std::clamp(0.1 * tol, 1e-12, 1e-4);
    GeodesicSegment seg;
    seg.alpha0 = alpha;
    bool crossed = false;
    seg.path = run_geodesic(chart, p.u, p.v, alpha, cap, itol, &event, &crossed);
    if (!crossed) throw NoBracket("meridian shot never reached the target z");
    State y{seg.path.back().u, seg.path.back().v, 0.0, 0.0};
    seg.endpoint_error = metric_dist(chart, y, q.u, q.v);
    seg.length = seg.path.back().s;
    if (seg.endpoint_error > tol)
      throw ToleranceFailure("meridian endpoint error exceeds tolerance");
    return seg;
  }

  double sign = dth > 0 ? 1.0 : -1.0;
  double vq = q.v, uq = q.u;
  std::function<double(const State&)> event = [sign, vq](const State& y) {
    return sign * (y[1] - vq);
  };
  std::function<double(const State&)> miss = [uq](const State& y) {
    return y[0] - uq;
  };
  double cap = 8.0 + 3.0 * (std::abs(q.u - p.u) + std::abs(dth) * rho_max);

  std::vector<double> sweep;
  for (int i = 1; i <= 72; ++i)
    sweep.push_back(sign * (3.14159265358979323846 * i / 73.0));
  return solve_shot(chart, p.u, p.v, sweep, cap, tol, event, miss, uq, vq);
}

GeodesicSegment connect_graph(const GraphSurfaceMetric& surf,
                              const GeodesicState& p, const GeodesicState& q,
                              double tol) {
  GraphChart chart{&surf};
  double dx = q.u - p.u, dy = q.v - p.v;
  double len = std::hypot(dx, dy);
  if (len < 1e-14)
    throw DomainError("connect endpoints coincide in the chart");
  double d0 = dx / len, d1 = dy / len;
  double uq = q.u, vq = q.v;
  std::function<double(const State&)> event = [=](const State& y) {
    return (y[0] - uq) * d0 + (y[1] - vq) * d1;
  };
  std::function<double(const State&)> miss = [=](const State& y) {
    return -(y[0] - uq) * d1 + (y[1] - vq) * d0;
  };

  Form m = chart.form(p.u, p.v);
  double n2 = std::sqrt(m.G - m.F * m.F / m.E);
  double a1 = (m.E * dx + m.F * dy) / std::sqrt(m.E);
  double a2 = dy * n2;
  double a_dir = std::atan2(a2, a1);
  double cap = 2.0 + 3.0 * len * std::sqrt(std::max(m.E, m.G));

  std::vector<double> sweep;
  for (int i = -30; i <= 30; ++i) sweep.push_back(a_dir + 1.2 * i / 30.0);
  return solve_shot(chart, p.u, p.v, sweep, cap, tol, event, miss, uq, vq);
}

}  // namespace

Trajectory integrate_geodesic(const RevolutionSurface& surf, double z0,
                              double theta0, double alpha0, double length,
                              double tol) {
  RevChart chart{&surf};
  return run_geodesic(chart, z0, theta0, alpha0, length, tol, nullptr,
                      nullptr);
}

Trajectory integrate_geodesic(const GraphSurfaceMetric& surf, double x0,
                              double y0, double alpha0, double length,
                              double tol) {
  GraphChart chart{&surf};
  return run_geodesic(chart, x0, y0, alpha0, length, tol, nullptr, nullptr);
}

TrappedRayReport trapped_ray_check(const RevolutionSurface& surf, double z0,
                                   double alpha0, double horizon_arc,
                                   double tol) {
  TrappedRayReport rep;
  double rho0 = surf.radius(z0);
  rep.clairaut = rho0 * std::sin(alpha0);
  rep.escapes = rep.clairaut < surf.waist();

  Trajectory traj = integrate_geodesic(surf, z0, 0.0, alpha0, horizon_arc, tol);
  double alpha_sup = -kInf, z_max = -kInf;
  for (const auto& st : traj.samples) {
    alpha_sup = std::max(alpha_sup, st.alpha);
    z_max = std::max(z_max, st.u);
  }
  rep.alpha_sup = alpha_sup;
  if (rep.escapes) {
    double ratio = std::min(1.0, rep.clairaut / surf.waist());
    rep.epsilon_margin = 1.57079632679489661923 - std::asin(ratio);
    rep.z_reached = traj.back().u;
  } else {
    rep.turning_radius = rep.clairaut;
    rep.z_reached = z_max;
  }
  return rep;
}

GeodesicSegment connect_geodesic(const RevolutionSurface& surf,
                                 const GeodesicState& p,
                                 const GeodesicState& q, double tol) {
  return connect_rev(surf, p, q, tol);
}

GeodesicSegment connect_geodesic(const GraphSurfaceMetric& surf,
                                 const GeodesicState& p,
                                 const GeodesicState& q, double tol) {
  return connect_graph(surf, p, q, tol);
}

double surface_distance(const RevolutionSurface& surf, const GeodesicState& p,
                        const GeodesicState& q, double tol) {
  return connect_geodesic(surf, p, q, tol).length;
}

}  // namespace cuspforge
