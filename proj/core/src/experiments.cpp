#include "cuspforge/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cuspforge/errors.hpp"
#include "cuspforge/numeric.hpp"

namespace cuspforge {
namespace {

constexpr double kPi = 3.14159265358979323846;

using Form = GraphSurfaceMetric::Form;

struct Vec2 {
  double du = 0.0, dv = 0.0;
};

// Chart velocity of a unit vector at angle alpha against the u-curve,
// measured in the metric frame e1 = (1/sqrt(E), 0), e2 = (-F/E, 1)/n2.
Vec2 from_angle(const Form& m, double alpha) {
  double se = std::sqrt(m.E);
  double n2 = std::sqrt(m.G - m.F * m.F / m.E);
  double ca = std::cos(alpha), sa = std::sin(alpha);
  return {ca / se - sa * m.F / (m.E * n2), sa / n2};
}

double metric_angle(const Form& m, const Vec2& a, const Vec2& b) {
  auto dot = [&](const Vec2& x, const Vec2& y) {
    return m.E * x.du * y.du + m.F * (x.du * y.dv + x.dv * y.du) +
           m.G * x.dv * y.dv;
  };
  double c = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Interior angle at a vertex between an outgoing side (by its launch
// angle) and an arriving side (by the angle of its final velocity).
double vertex_angle(const GraphSurfaceMetric& surf, double u, double v,
                    double alpha_out, double alpha_arrive) {
  Form m = surf.form(u, v);
  Vec2 a = from_angle(m, alpha_out);
  Vec2 b = from_angle(m, alpha_arrive);
  b.du = -b.du;
  b.dv = -b.dv;
  return metric_angle(m, a, b);
}

void append_side(std::vector<std::pair<double, double>>& poly,
                 const Trajectory& t, bool skip_first) {
  size_t k = skip_first ? 1 : 0;
  for (; k < t.samples.size(); ++k)
    poly.emplace_back(t.samples[k].u, t.samples[k].v);
}

// Center-sampled cell sum of K dA over the polygon interior; even-odd
// scanline fill of the boundary polyline.
double polygon_curvature_integral(
    const GraphSurfaceMetric& surf,
    const std::vector<std::pair<double, double>>& poly, long grid_cells,
    long* cells_inside, long* total_cells) {
  double xlo = kInf, xhi = -kInf, ylo = kInf, yhi = -kInf;
  for (const auto& p : poly) {
    xlo = std::min(xlo, p.first);
    xhi = std::max(xhi, p.first);
    ylo = std::min(ylo, p.second);
    yhi = std::max(yhi, p.second);
  }
  double padx = 0.01 * (xhi - xlo) + 1e-9;
  double pady = 0.01 * (yhi - ylo) + 1e-9;
  xlo -= padx;
  xhi += padx;
  ylo -= pady;
  yhi += pady;

  long n = std::max<long>(8, (long)std::floor(std::sqrt((double)grid_cells)));
  double dx = (xhi - xlo) / (double)n;
  double dy = (yhi - ylo) / (double)n;
  double cell = dx * dy;

  KahanSum sum;
  long inside = 0;
  std::vector<double> xs;
  size_t m = poly.size();
  for (long j = 0; j < n; ++j) {
    double yc = ylo + (j + 0.5) * dy;
    xs.clear();
    for (size_t e = 0; e < m; ++e) {
      const auto& a = poly[e];
      const auto& b = poly[(e + 1) % m];
      bool below_a = a.second <= yc, below_b = b.second <= yc;
      if (below_a == below_b) continue;
      xs.push_back(a.first +
                   (yc - a.second) * (b.first - a.first) /
                       (b.second - a.second));
    }
    if (xs.size() < 2) continue;
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); k += 2) {
      long i_lo = (long)std::ceil((xs[k] - xlo) / dx - 0.5);
      long i_hi = (long)std::floor((xs[k + 1] - xlo) / dx - 0.5);
      i_lo = std::max<long>(i_lo, 0);
      i_hi = std::min<long>(i_hi, n - 1);
      for (long i = i_lo; i <= i_hi; ++i) {
        double xc = xlo + (i + 0.5) * dx;
        sum.add(surf.gauss_curvature(xc, yc) * surf.area_element(xc, yc) *
                cell);
        ++inside;
      }
    }
  }
  if (cells_inside) *cells_inside = inside;
  if (total_cells) *total_cells = n * n;
  return sum.value();
}

}  // namespace

VisibilityReport visibility_experiment(
    const RevolutionSurface& surf, double z0, double theta0, double alpha0,
    const std::vector<std::pair<double, double>>& arcs, double tol) {
  VisibilityReport rep;
  rep.tol = tol;

  TrappedRayReport t1 = trapped_ray_check(surf, z0, alpha0);
  TrappedRayReport t2 = trapped_ray_check(surf, z0, -alpha0);
  if (!t1.escapes || !t2.escapes)
    throw DomainError("visibility rays must escape down the horn");

  double itol = std::clamp(0.01 * tol, 1e-12, 1e-4);
  int n = 1;
  for (const auto& ab : arcs) {
    Trajectory r1 = integrate_geodesic(surf, z0, theta0, alpha0, ab.first,
                                       itol);
    Trajectory r2 = integrate_geodesic(surf, z0, theta0, -alpha0, ab.second,
                                       itol);
    GeodesicState e1 = r1.back();
    GeodesicState e2 = r2.back();
    GeodesicSegment con = connect_geodesic(surf, e1, e2, tol);

    double mz = kInf;
    for (const auto& st : con.path.samples) mz = std::min(mz, st.u);

    VisibilityRow row;
    row.n = n++;
    row.a = ab.first;
    row.b = ab.second;
    row.z1 = e1.u;
    row.z2 = e2.u;
    row.min_z = mz;
    row.endpoint_floor = std::min(e1.u, e2.u);
    rep.rows.push_back(row);
  }

  rep.monotone = true;
  rep.above_floor = true;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    if (i > 0 && !(rep.rows[i].min_z > rep.rows[i - 1].min_z))
      rep.monotone = false;
    if (!(rep.rows[i].min_z >= rep.rows[i].endpoint_floor - tol))
      rep.above_floor = false;
  }
  return rep;
}

TriangleReport gauss_bonnet_triangle(const GraphSurfaceMetric& surf,
                                     const GeodesicState& p1,
                                     const GeodesicState& p2,
                                     const GeodesicState& p3, long grid_cells,
                                     double connect_tol) {
  GeodesicSegment s12 = connect_geodesic(surf, p1, p2, connect_tol);
  GeodesicSegment s23 = connect_geodesic(surf, p2, p3, connect_tol);
  GeodesicSegment s31 = connect_geodesic(surf, p3, p1, connect_tol);

  auto out_alpha = [](const GeodesicSegment& s) {
    return s.path.samples.front().alpha;
  };
  auto in_alpha = [](const GeodesicSegment& s) {
    return s.path.samples.back().alpha;
  };

  TriangleReport rep;
  rep.angles[0] = vertex_angle(surf, p1.u, p1.v, out_alpha(s12), in_alpha(s31));
  rep.angles[1] = vertex_angle(surf, p2.u, p2.v, out_alpha(s23), in_alpha(s12));
  rep.angles[2] = vertex_angle(surf, p3.u, p3.v, out_alpha(s31), in_alpha(s23));
  rep.angle_sum = rep.angles[0] + rep.angles[1] + rep.angles[2];

  std::vector<std::pair<double, double>> poly;
  append_side(poly, s12.path, false);
  append_side(poly, s23.path, true);
  append_side(poly, s31.path, true);
  if (!poly.empty()) poly.pop_back();  // closing point repeats the start

  rep.curvature_integral = polygon_curvature_integral(
      surf, poly, grid_cells, &rep.cells_inside, &rep.grid_cells);
  rep.residual = std::abs(rep.angle_sum - kPi - rep.curvature_integral);
  return rep;
}

InvisibilityReport invisibility_witness(const GraphSurfaceMetric& surf,
                                        double separation,
                                        const std::vector<double>& horizons,
                                        GeodesicState apex, double tol) {
  if (!(separation > 0.0 && separation < kPi))
    throw DomainError("ray separation must lie in (0, pi)");

  InvisibilityReport rep;
  rep.separation = separation;
  double budget = surf.slope_budget();
  rep.lower_bound = kPi - separation - budget * budget;

  Form m0 = surf.form(apex.u, apex.v);
  double n2 = std::sqrt(m0.G - m0.F * m0.F / m0.E);
  double a_dir = std::atan2(n2, (m0.E + m0.F) / std::sqrt(m0.E));
  double alpha1 = a_dir + 0.5 * separation;
  double alpha2 = a_dir - 0.5 * separation;

  double itol = std::clamp(0.01 * tol, 1e-12, 1e-4);
  rep.all_above_bound = true;
  for (double T : horizons) {
    Trajectory r1 = integrate_geodesic(surf, apex.u, apex.v, alpha1, T, itol);
    Trajectory r2 = integrate_geodesic(surf, apex.u, apex.v, alpha2, T, itol);
    GeodesicState e1 = r1.back();
    GeodesicState e2 = r2.back();
    GeodesicSegment con = connect_geodesic(surf, e1, e2, tol);

    InvisibilityRow row;
    row.T = T;
    row.base_angle =
        metric_angle(m0, from_angle(m0, alpha1), from_angle(m0, alpha2));
    row.far_angle_sum =
        vertex_angle(surf, e1.u, e1.v, con.path.samples.front().alpha,
                     r1.samples.back().alpha) +
        metric_angle(surf.form(e2.u, e2.v),
                     from_angle(surf.form(e2.u, e2.v),
                                r2.samples.back().alpha),
                     from_angle(surf.form(e2.u, e2.v),
                                con.path.samples.back().alpha));

    std::vector<std::pair<double, double>> poly;
    append_side(poly, r1, false);
    append_side(poly, con.path, true);
    for (size_t k = r2.samples.size() - 1; k-- > 1;)
      poly.emplace_back(r2.samples[k].u, r2.samples[k].v);

    row.curvature_integral =
        polygon_curvature_integral(surf, poly, 640000, nullptr, nullptr);
    row.residual = std::abs(row.base_angle + row.far_angle_sum - kPi -
                            row.curvature_integral);
    rep.max_abs_integral =
        std::max(rep.max_abs_integral, std::abs(row.curvature_integral));
    if (!(row.far_angle_sum >= rep.lower_bound)) rep.all_above_bound = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace cuspforge
