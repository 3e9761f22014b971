#include <cmath>
#include <vector>

#include "cuspforge/cusp.hpp"
#include "cuspforge/profile.hpp"
#include "doctest.h"

using namespace cuspforge;

namespace {

// composite Simpson oracle, independent of the adaptive machinery
double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
  double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

CuspModel exp_cusp(int dim, double truncation = kInf, double start = 0.0) {
  return CuspModel{dim, 1.0, ProfileFunction::exponential(0.0, kInf), start,
                   truncation};
}

}  // namespace

TEST_CASE("exponential cusp volumes hit the closed forms") {
  VolumeReport v2 = cusp_volume(exp_cusp(2));
  REQUIRE(v2.finite);
  CHECK(std::fabs(v2.value - 1.0) <= 1e-8);

  VolumeReport v3 = cusp_volume(exp_cusp(3));
  REQUIRE(v3.finite);
  CHECK(std::fabs(v3.value - 0.5) <= 1e-8);
}

TEST_CASE("cusp volume agrees with a fixed Simpson oracle") {
  // tail beyond t = 60 is below 1e-52 for the n = 3 density
  double oracle =
      simpson([](double t) { return std::exp(-2.0 * t); }, 0.0, 60.0, 1 << 16);
  VolumeReport v = cusp_volume(exp_cusp(3));
  REQUIRE(v.finite);
  CHECK(v.value == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("volume is additive across a truncation") {
  VolumeReport head = cusp_volume(exp_cusp(2, 5.0));
  VolumeReport tail = cusp_volume(exp_cusp(2, kInf, 5.0));
  VolumeReport full = cusp_volume(exp_cusp(2));
  REQUIRE(head.finite);
  REQUIRE(tail.finite);
  CHECK(std::fabs(head.value + tail.value - full.value) <= 1e-10);
}

TEST_CASE("divergent tails are reported with a reason") {
  CuspModel cosh_cusp{2, 1.0, ProfileFunction::cosh_profile(0.0, kInf), 0.0,
                      kInf};
  VolumeReport v = cusp_volume(cosh_cusp);
  CHECK(!v.finite);
  CHECK(!v.reason.empty());

  CuspModel flat{3, 1.0, ProfileFunction::constant(0.0, kInf, 1.0), 0.0, kInf};
  CHECK(!cusp_volume(flat).finite);

  std::vector<Segment> slow = {Segment::power_seg(1.0, kInf, 1.0, 1.0, 0.0)};
  CuspModel p1{2, 1.0, ProfileFunction(slow), 1.0, kInf};
  VolumeReport vp = cusp_volume(p1);
  CHECK(!vp.finite);
  CHECK(!vp.reason.empty());
}

TEST_CASE("integrable power tail has the exact tail integral") {
  std::vector<Segment> segs = {Segment::power_seg(1.0, kInf, 1.0, 2.0, 0.0)};
  CuspModel c{2, 1.0, ProfileFunction(segs), 1.0, kInf};
  VolumeReport v = cusp_volume(c);
  REQUIRE(v.finite);
  CHECK(v.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("truncated cosh cusp integrates to sinh") {
  CuspModel c{2, 1.0, ProfileFunction::cosh_profile(0.0, kInf), 0.0, 2.0};
  VolumeReport v = cusp_volume(c);
  REQUIRE(v.finite);
  CHECK(v.value == doctest::Approx(std::sinh(2.0)).epsilon(1e-9));
}

TEST_CASE("cross-section volume scales the answer linearly") {
  CuspModel c = exp_cusp(2);
  c.cross_section_volume = 3.25;
  CHECK(cusp_volume(c).value == doctest::Approx(3.25).epsilon(1e-8));
}

TEST_CASE("manifold volume sums core and cusp contributions") {
  ManifoldDescriptor m;
  m.compact_volume = 3.5;
  m.cusps = {exp_cusp(2), exp_cusp(3)};
  VolumeReport v = manifold_volume(m);
  REQUIRE(v.finite);
  CHECK(std::fabs(v.value - 5.0) <= 1e-8);

  m.cusps.push_back(
      CuspModel{2, 1.0, ProfileFunction::cosh_profile(0.0, kInf), 0.0, kInf});
  VolumeReport bad = manifold_volume(m);
  CHECK(!bad.finite);
  CHECK(!bad.reason.empty());
}

TEST_CASE("completeness is unbounded radial extent") {
  CompletenessReport full = completeness_check(exp_cusp(2));
  CHECK(full.complete);
  CHECK(!full.certificate.empty());
  CompletenessReport cut = completeness_check(exp_cusp(2, 7.0));
  CHECK(!cut.complete);
}

TEST_CASE("curvature asymptotics of the exponential cusp blow down") {
  CurvatureAsymptotics asym = curvature_asymptotics(exp_cusp(2));
  CHECK(asym.blows_down);
  CHECK(asym.sup_curvature < 0.0);
  REQUIRE(!asym.tangential_samples.empty());
  auto [t, ktan] = asym.tangential_samples[asym.tangential_samples.size() / 2];
  CHECK(ktan == doctest::Approx(-(std::exp(2.0 * t) + 1.0)).epsilon(1e-9));
  CHECK(asym.tail_growth_exponent == 0.0);
}

TEST_CASE("cosh cusp keeps bounded curvature") {
  CuspModel c{2, 1.0, ProfileFunction::cosh_profile(0.0, kInf), 0.0, kInf};
  CurvatureAsymptotics asym = curvature_asymptotics(c);
  CHECK(!asym.blows_down);
  CHECK(asym.sup_curvature == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("power-tail curvature growth exponent is read off the samples") {
  std::vector<Segment> segs = {Segment::power_seg(1.0, kInf, 1.0, 2.0, 0.0)};
  CuspModel c{2, 1.0, ProfileFunction(segs), 1.0, kInf};
  CurvatureAsymptotics asym = curvature_asymptotics(c, 200.0, 2000);
  CHECK(asym.blows_down);
  CHECK(asym.tail_growth_exponent == doctest::Approx(4.0).epsilon(0.05));
}
