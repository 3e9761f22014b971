#include <cmath>

#include "cuspforge/curvature.hpp"
#include "cuspforge/errors.hpp"
#include "doctest.h"

using namespace cuspforge;

namespace {

double det3(double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Gaussian curvature from (E, F, G) alone, all derivatives by central
// differences: an oracle independent of the closed-form implementation.
double brioschi_fd(const GraphSurfaceMetric& s, double x, double y) {
  const double h = 1e-4;
  auto E = [&](double u, double v) { return s.form(u, v).E; };
  auto F = [&](double u, double v) { return s.form(u, v).F; };
  auto G = [&](double u, double v) { return s.form(u, v).G; };

  double Ev = (E(x, y + h) - E(x, y - h)) / (2 * h);
  double Eu = (E(x + h, y) - E(x - h, y)) / (2 * h);
  double Gu = (G(x + h, y) - G(x - h, y)) / (2 * h);
  double Gv = (G(x, y + h) - G(x, y - h)) / (2 * h);
  double Fu = (F(x + h, y) - F(x - h, y)) / (2 * h);
  double Fv = (F(x, y + h) - F(x, y - h)) / (2 * h);
  double Evv = (E(x, y + h) - 2 * E(x, y) + E(x, y - h)) / (h * h);
  double Guu = (G(x + h, y) - 2 * G(x, y) + G(x - h, y)) / (h * h);
  double Fuv = (F(x + h, y + h) - F(x + h, y - h) - F(x - h, y + h) +
                F(x - h, y - h)) /
               (4 * h * h);

  double e = E(x, y), f = F(x, y), g = G(x, y);
  double m1[3][3] = {
      {-Evv / 2 + Fuv - Guu / 2, Eu / 2, Fu - Ev / 2},
      {Fv - Gu / 2, e, f},
      {Gv / 2, f, g}};
  double m2[3][3] = {{0.0, Ev / 2, Gu / 2}, {Ev / 2, e, f}, {Gu / 2, f, g}};
  double den = e * g - f * f;
  return (det3(m1) - det3(m2)) / (den * den);
}

}  // namespace

TEST_CASE("cosh warping is constant curvature -1") {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, kInf);
  for (int i = 0; i <= 100; ++i) {
    double t = 8.0 * i / 100.0;
    WarpedCurvature k = warped_curvature(f, t);
    CHECK(std::fabs(k.radial + 1.0) <= 1e-12);
    CHECK(std::fabs(k.tangential + 1.0) <= 1e-12);
    CHECK(k.strictly_negative());
  }
}

TEST_CASE("exponential warping pins radial at -1 and blows tangential down") {
  ProfileFunction f = ProfileFunction::exponential(0.0, kInf);
  for (double t : {0.0, 1.0, 5.0, 10.0}) {
    WarpedCurvature k = warped_curvature(f, t);
    CHECK(k.radial == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(k.tangential ==
          doctest::Approx(-(std::exp(2.0 * t) + 1.0)).epsilon(1e-12));
  }
  CHECK(warped_curvature(f, 10.0).tangential ==
        doctest::Approx(-485165196.40979028).epsilon(1e-12));
}

TEST_CASE("warped curvature agrees with finite-difference jets") {
  ProfileFunction f = make_decay_profile(-2.0, DecayMode::Exponential);
  const double h = 1e-5;
  for (double t : {-1.5, -0.5, 0.5, 2.0, 4.0}) {
    double fd1 = (f.value(t + h) - f.value(t - h)) / (2 * h);
    double fd2 = (f.value(t + h) - 2 * f.value(t) + f.value(t - h)) / (h * h);
    Jet2 fj{f.value(t), fd1, fd2};
    WarpedCurvature kfd = warped_curvature(fj);
    WarpedCurvature k = warped_curvature(f, t);
    CHECK(k.radial == doctest::Approx(kfd.radial).epsilon(1e-4));
    CHECK(k.tangential == doctest::Approx(kfd.tangential).epsilon(1e-4));
  }
}

TEST_CASE("plane curvature bounds cover both families") {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, kInf);
  CurvatureReport rep = plane_curvature_bounds(f, {0.0, 5.0}, 512);
  CHECK(rep.families.size() == 2);
  CHECK(rep.global_min() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rep.global_max() == doctest::Approx(-1.0).epsilon(1e-12));

  ProfileFunction g = ProfileFunction::exponential(0.0, kInf);
  Interval r = warped_curvature_range(g, 0.0, 3.0);
  CHECK(r.hi == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.lo == doctest::Approx(-(std::exp(6.0) + 1.0)).epsilon(1e-9));
}

TEST_CASE("diagonal metric with cosh, sinh, 1 has curvature -1") {
  Interval dom{0.0, 10.0};
  DiagonalMetric3D m(Curve1D::cosh_curve(1.0, 1.0, dom),
                     Curve1D::sinh_curve(1.0, 1.0, dom),
                     Curve1D::constant(1.0, dom));
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(m.k_ur(r) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m.k_thetar(r) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m.k_utheta(r) == doctest::Approx(-1.0).epsilon(1e-12));
  }
  Interval pr = m.plane_range(1.0);
  CHECK(pr.lo == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pr.hi == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(m.k_utheta(1e-12), AxisError);

  DiagonalMetric3D half = m.homothety(2.0);
  CHECK(half.k_ur(1.0) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(half.k_utheta(1.0) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("graph surface curvature matches a finite-difference Brioschi oracle") {
  GraphSurfaceMetric s;
  CHECK(s.slope_budget() == doctest::Approx(0.31415926535897931).epsilon(1e-12));
  CHECK(s.gauss_curvature(0.0, 0.0) < 0.0);
  CHECK(std::fabs(s.gauss_curvature(-8.0, -8.0)) < 1e-10);

  for (auto [x, y] : {std::pair{0.3, -0.4}, {1.0, 0.7}, {-1.2, 0.5}}) {
    double kfd = brioschi_fd(s, x, y);
    double k = s.gauss_curvature(x, y);
    CHECK(k == doctest::Approx(kfd).epsilon(1e-4));
    CHECK(std::fabs(k - kfd) < 1e-6);
  }
}

TEST_CASE("total graph curvature sits in the slope-budget window") {
  GraphSurfaceMetric s;
  double b2 = s.slope_budget() * s.slope_budget();
  double prev = 0.0;
  for (double half : {5.0, 10.0, 20.0}) {
    double tc = s.total_curvature(half);
    CHECK(tc < 0.0);
    CHECK(tc >= -b2 - 1e-9);
    CHECK(tc < prev);
    prev = tc;
  }
}

TEST_CASE("christoffel symbols vanish for a constant metric") {
  GraphSurfaceMetric::Form flat{1.0, 0.0, 1.0, 0, 0, 0, 0, 0, 0};
  Christoffel2D c = christoffel(flat);
  CHECK(c.g111 == 0.0);
  CHECK(c.g211 == 0.0);
  CHECK(c.g112 == 0.0);
  CHECK(c.g212 == 0.0);
  CHECK(c.g122 == 0.0);
  CHECK(c.g222 == 0.0);
}
