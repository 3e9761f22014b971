#include "cuspforge/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuspforge/errors.hpp"
#include "cuspforge/quadrature.hpp"

namespace cuspforge {

WarpedCurvature warped_curvature(const Jet2& fjet) {
  double f = fjet.f;
  return {-fjet.ddf / f, -(1.0 + fjet.df * fjet.df) / (f * f)};
}

WarpedCurvature warped_curvature(const ProfileFunction& f, double t) {
  return warped_curvature(f.jet(t));
}

double CurvatureReport::global_min() const {
  double m = kInf;
  for (const auto& fam : families) m = std::min(m, fam.min);
  return m;
}

double CurvatureReport::global_max() const {
  double m = -kInf;
  for (const auto& fam : families) m = std::max(m, fam.max);
  return m;
}

CurvatureReport plane_curvature_bounds(const ProfileFunction& f,
                                       Interval interval, int resolution) {
  if (resolution < 2) resolution = 2;
  CurvatureReport rep;
  rep.resolution = resolution;
  {
    std::ostringstream os;
    os << "t in [" << interval.lo << ", " << interval.hi << "]";
    rep.region = os.str();
  }
  CurvatureReport::Family rad{"radial", kInf, -kInf, 0.0, 0.0};
  CurvatureReport::Family tan{"tangential", kInf, -kInf, 0.0, 0.0};
  for (double t : linspace(interval.lo, interval.hi, resolution)) {
    WarpedCurvature k = warped_curvature(f, t);
    if (k.radial < rad.min) rad.min = k.radial, rad.argmin = t;
    if (k.radial > rad.max) rad.max = k.radial, rad.argmax = t;
    if (k.tangential < tan.min) tan.min = k.tangential, tan.argmin = t;
    if (k.tangential > tan.max) tan.max = k.tangential, tan.argmax = t;
  }
  rep.families = {rad, tan};
  return rep;
}

Interval warped_curvature_range(const ProfileFunction& f, double lo, double hi,
                                int grid) {
  CurvatureReport rep = plane_curvature_bounds(f, {lo, hi}, grid);
  return {rep.global_min(), rep.global_max()};
}

DiagonalMetric3D::DiagonalMetric3D(Curve1D a, Curve1D b, Curve1D c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

namespace {

void check_axis(const Jet2& b, double r) {
  if (std::fabs(b.f) <= 1e-8) {
    std::ostringstream os;
    os << "angular coefficient vanishes at r=" << r;
    throw AxisError(os.str());
  }
}

}  // namespace

double DiagonalMetric3D::k_ur(double r) const {
  Jet2 a = a_.jet(r), b = b_.jet(r), c = c_.jet(r);
  check_axis(b, r);
  return -(a.ddf * c.f - a.df * c.df) / (a.f * c.f * c.f * c.f);
}

double DiagonalMetric3D::k_thetar(double r) const {
  Jet2 b = b_.jet(r), c = c_.jet(r);
  check_axis(b, r);
  return -(b.ddf * c.f - b.df * c.df) / (b.f * c.f * c.f * c.f);
}

double DiagonalMetric3D::k_utheta(double r) const {
  Jet2 a = a_.jet(r), b = b_.jet(r), c = c_.jet(r);
  check_axis(b, r);
  return -(a.df * b.df) / (a.f * b.f * c.f * c.f);
}

Interval DiagonalMetric3D::plane_range(double r) const {
  double k1 = k_ur(r), k2 = k_thetar(r), k3 = k_utheta(r);
  return {std::min({k1, k2, k3}), std::max({k1, k2, k3})};
}

DiagonalMetric3D DiagonalMetric3D::homothety(double s) const {
  return DiagonalMetric3D(Curve1D::scaled(a_, s), Curve1D::scaled(b_, s),
                          Curve1D::scaled(c_, s));
}

GraphSurfaceMetric::GraphSurfaceMetric()
    : gen_(Curve1D::tanh_slope(3.14159265358979323846 / 10.0)) {}

GraphSurfaceMetric::GraphSurfaceMetric(Curve1D generator)
    : gen_(std::move(generator)) {}

GraphSurfaceMetric::Form GraphSurfaceMetric::form(double x, double y) const {
  Jet2 jx = gen_.jet(x), jy = gen_.jet(y);
  Form m;
  m.E = 1.0 + jx.df * jx.df;
  m.F = -jx.df * jy.df;
  m.G = 1.0 + jy.df * jy.df;
  m.Eu = 2.0 * jx.df * jx.ddf;
  m.Ev = 0.0;
  m.Fu = -jx.ddf * jy.df;
  m.Fv = -jx.df * jy.ddf;
  m.Gu = 0.0;
  m.Gv = 2.0 * jy.df * jy.ddf;
  return m;
}

double GraphSurfaceMetric::gauss_curvature(double x, double y) const {
  Jet2 jx = gen_.jet(x), jy = gen_.jet(y);
  double w = 1.0 + jx.df * jx.df + jy.df * jy.df;
  return -jx.ddf * jy.ddf / (w * w);
}

double GraphSurfaceMetric::area_element(double x, double y) const {
  Jet2 jx = gen_.jet(x), jy = gen_.jet(y);
  return std::sqrt(1.0 + jx.df * jx.df + jy.df * jy.df);
}

double GraphSurfaceMetric::total_curvature(double half, double tol,
                                           long cell_cap) const {
  long evals = 0;
  auto integrand = [this, &evals, cell_cap](double x, double y) {
    if (++evals > cell_cap)
      throw QuadratureFailure("curvature integral exceeded its cell budget");
    Jet2 jx = gen_.jet(x), jy = gen_.jet(y);
    double w = 1.0 + jx.df * jx.df + jy.df * jy.df;
    return -jx.ddf * jy.ddf / (w * std::sqrt(w));
  };
  double inner_tol = tol / (16.0 * half);
  auto row = [&](double x) {
    return integrate_adaptive([&](double y) { return integrand(x, y); },
                              -half, half, inner_tol)
        .value;
  };
  return integrate_adaptive(row, -half, half, 0.5 * tol).value;
}

double GraphSurfaceMetric::slope_budget() const {
  const Interval& dom = gen_.domain();
  double lo = std::isinf(dom.lo) ? -40.0 : dom.lo;
  double hi = std::isinf(dom.hi) ? 40.0 : dom.hi;
  return gen_.d1(hi) - gen_.d1(lo);
}

Christoffel2D christoffel(const GraphSurfaceMetric::Form& m) {
  double W = m.E * m.G - m.F * m.F;
  double inv = 1.0 / (2.0 * W);
  Christoffel2D g;
  g.g111 = (m.G * m.Eu - 2.0 * m.F * m.Fu + m.F * m.Ev) * inv;
  g.g211 = (2.0 * m.E * m.Fu - m.E * m.Ev - m.F * m.Eu) * inv;
  g.g112 = (m.G * m.Ev - m.F * m.Gu) * inv;
  g.g212 = (m.E * m.Gu - m.F * m.Ev) * inv;
  g.g122 = (2.0 * m.G * m.Fv - m.G * m.Gu - m.F * m.Gv) * inv;
  g.g222 = (m.E * m.Gv - 2.0 * m.F * m.Fv + m.F * m.Gu) * inv;
  return g;
}

}  // namespace cuspforge
