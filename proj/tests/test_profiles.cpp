#include <cmath>
#include <vector>

#include "cuspforge/errors.hpp"
#include "cuspforge/profile.hpp"
#include "doctest.h"

using namespace cuspforge;

TEST_CASE("segment forms evaluate their closed forms") {
  Segment cs = Segment::cosh_seg(0.0, 4.0, 2.0, 3.0, 1.0);
  for (double t : {0.25, 1.0, 3.5}) {
    Jet2 j = cs.jet(t);
    CHECK(j.f == doctest::Approx(2.0 * std::cosh(3.0 * (t - 1.0))).epsilon(1e-14));
    CHECK(j.df == doctest::Approx(6.0 * std::sinh(3.0 * (t - 1.0))).epsilon(1e-14));
    CHECK(j.ddf == doctest::Approx(18.0 * std::cosh(3.0 * (t - 1.0))).epsilon(1e-14));
  }

  Segment es = Segment::exp_seg(0.0, 10.0, 0.5, 2.0, -1.0);
  Jet2 j = es.jet(2.0);
  CHECK(j.f == doctest::Approx(0.5 * std::exp(-6.0)).epsilon(1e-14));
  CHECK(j.df == doctest::Approx(-std::exp(-6.0)).epsilon(1e-14));
  CHECK(j.ddf == doctest::Approx(2.0 * std::exp(-6.0)).epsilon(1e-14));

  Segment ps = Segment::power_seg(1.0, 100.0, 3.0, 2.0, 0.0);
  j = ps.jet(4.0);
  CHECK(j.f == doctest::Approx(3.0 / 16.0).epsilon(1e-14));
  CHECK(j.df == doctest::Approx(-6.0 / 64.0).epsilon(1e-14));
  CHECK(j.ddf == doctest::Approx(18.0 / 256.0).epsilon(1e-14));
}

TEST_CASE("cosh and exponential factory profiles") {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, kInf);
  CHECK(f.value(1.5) == doctest::Approx(std::cosh(1.5)).epsilon(1e-15));
  CHECK(f.d1(1.5) == doctest::Approx(std::sinh(1.5)).epsilon(1e-15));
  CHECK(f.unbounded());
  CHECK(f.knots().empty());
  f.validate();

  ProfileFunction g = ProfileFunction::exponential(0.0, kInf, 2.0, 0.5);
  CHECK(g.value(3.0) == doctest::Approx(2.0 * std::exp(-1.5)).epsilon(1e-15));
  CHECK(g.d2(3.0) == doctest::Approx(0.5 * std::exp(-1.5)).epsilon(1e-15));
  g.validate();
}

TEST_CASE("evaluation outside the domain throws") {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, 5.0);
  CHECK_THROWS_AS(f.jet(-0.1), DomainError);
  CHECK_THROWS_AS(f.jet(6.0), DomainError);
}

TEST_CASE("validation rejects jump, gap, and nonpositive profiles") {
  std::vector<Segment> jump = {Segment::constant_seg(0.0, 1.0, 1.0),
                               Segment::constant_seg(1.0, 2.0, 2.0)};
  CHECK_THROWS_AS(ProfileFunction(jump).validate(), ToleranceFailure);

  std::vector<Segment> gap = {Segment::constant_seg(0.0, 1.0, 1.0),
                              Segment::constant_seg(1.5, 2.0, 1.0)};
  CHECK_THROWS_AS(ProfileFunction(gap).validate(), DomainError);

  CHECK_THROWS_AS(ProfileFunction::constant(0.0, 1.0, -1.0).validate(),
                  ToleranceFailure);
  CHECK_THROWS_AS(ProfileFunction(std::vector<Segment>{}), DomainError);
}

TEST_CASE("decay profile keeps the boundary jet and convexity for a < 0") {
  for (double a : {-3.0, -2.0, -1.5}) {
    for (DecayMode mode : {DecayMode::CubicDecay, DecayMode::Exponential}) {
      ProfileFunction f = make_decay_profile(a, mode);
      f.validate();
      Jet2 j = f.jet(a);
      CHECK(j.f == doctest::Approx(std::cosh(a)).epsilon(1e-12));
      CHECK(j.df == doctest::Approx(std::sinh(a)).epsilon(1e-12));
      CHECK(j.ddf == doctest::Approx(std::cosh(a)).epsilon(1e-12));
      CHECK(f.min_second_derivative() >= -1e-12);
    }
  }
}

TEST_CASE("cubic decay tails kill t^3 f(t)") {
  ProfileFunction f = make_decay_profile(-2.0, DecayMode::CubicDecay);
  double m1 = f.value(1e4) * 1e12;
  double m2 = f.value(2e4) * 8e12;
  CHECK(m1 < 1.0);
  CHECK(m2 < m1);
}

TEST_CASE("exponential decay tails have unit rate") {
  ProfileFunction f = make_decay_profile(-2.0, DecayMode::Exponential);
  CHECK(f.value(51.0) / f.value(50.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("decay profile stays total for nonconvex a") {
  ProfileFunction f = make_decay_profile(0.5, DecayMode::Exponential);
  f.validate();
  Jet2 j = f.jet(0.5);
  CHECK(j.f == doctest::Approx(std::cosh(0.5)).epsilon(1e-12));
  CHECK(j.df == doctest::Approx(std::sinh(0.5)).epsilon(1e-12));
  CHECK(f.value(40.0) < f.value(10.0));
}

TEST_CASE("kink smoothing matches both branches and stays convex") {
  double A = 2.0, a = 1.0;
  ProfileFunction h = smooth_kink(A, a);
  h.validate();

  auto ks = h.knots();
  REQUIRE(ks.size() == 2);
  double w = ks[1];
  CHECK(ks[0] == doctest::Approx(-w).epsilon(1e-15));
  CHECK(w > 0.0);
  CHECK(w <= 1.0 / A + 1e-15);

  auto left = [&](double t) { return std::exp(-A * (t + 2.0 * a)); };
  auto right = [&](double t) { return std::exp(2.0 * A * (t - a)); };
  for (double t : {-1.5, -0.8, -w}) {
    Jet2 j = h.jet(t);
    CHECK(j.f == doctest::Approx(left(t)).epsilon(1e-9));
    CHECK(j.df == doctest::Approx(-A * left(t)).epsilon(1e-9));
    CHECK(j.ddf == doctest::Approx(A * A * left(t)).epsilon(1e-9));
  }
  for (double t : {w, 0.8, 1.5}) {
    Jet2 j = h.jet(t);
    CHECK(j.f == doctest::Approx(right(t)).epsilon(1e-9));
    CHECK(j.df == doctest::Approx(2.0 * A * right(t)).epsilon(1e-9));
    CHECK(j.ddf == doctest::Approx(4.0 * A * A * right(t)).epsilon(1e-9));
  }

  // strict convexity ratio inside the patch window
  for (int i = 0; i <= 400; ++i) {
    double t = -w + 2.0 * w * i / 400.0;
    Jet2 j = h.jet(t);
    CHECK(j.ddf / j.f > 1e-10);
  }
}

TEST_CASE("smoothing inflation factor is the patch curvature ratio") {
  double infl = kink_curvature_inflation(2.0, 1.0);
  CHECK(infl == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(kink_curvature_inflation(3.0, 0.5) >= 1.0 - 1e-12);
}

TEST_CASE("profile rescaling transforms curvature data by A^2") {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, kInf);
  double A = 2.0, shift = 1.0;
  ProfileFunction g = scale_profile(f, A, shift);
  for (double tau : {0.0, 0.5, 1.25}) {
    Jet2 jg = g.jet(tau);
    Jet2 jf = f.jet(A * tau + shift);
    CHECK(jg.f == doctest::Approx(jf.f / A).epsilon(1e-12));
    CHECK(jg.df == doctest::Approx(jf.df).epsilon(1e-12));
    CHECK(jg.ddf == doctest::Approx(A * jf.ddf).epsilon(1e-12));
  }
}

TEST_CASE("text serialization round trips jets") {
  ProfileFunction h = smooth_kink(2.0, 1.0);
  std::string text = h.to_text();
  CHECK(text.rfind("profile v1", 0) == 0);
  ProfileFunction back = ProfileFunction::from_text(text);
  for (int i = 0; i <= 40; ++i) {
    double t = -2.0 + 4.0 * i / 40.0;
    Jet2 j1 = h.jet(t), j2 = back.jet(t);
    CHECK(j1.f == doctest::Approx(j2.f).epsilon(1e-14));
    CHECK(j1.df == doctest::Approx(j2.df).epsilon(1e-14));
    CHECK(j1.ddf == doctest::Approx(j2.ddf).epsilon(1e-14));
  }
}

TEST_CASE("minimum analytic second derivative") {
  ProfileFunction f = ProfileFunction::cosh_profile(-1.0, 2.0);
  CHECK(f.min_second_derivative() == doctest::Approx(1.0).epsilon(1e-12));
  ProfileFunction g = ProfileFunction::cosh_profile(1.0, 3.0);
  CHECK(g.min_second_derivative() ==
        doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
}
