// Acceptance gate: one verdict line per criterion, exit 0 only when all pass.
// Every tolerance is pinned here, next to the check it guards.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cuspforge/assembly.hpp"
#include "cuspforge/cusp.hpp"
#include "cuspforge/curvature.hpp"
#include "cuspforge/errors.hpp"
#include "cuspforge/experiments.hpp"
#include "cuspforge/geodesic.hpp"
#include "cuspforge/profile.hpp"
#include "cuspforge/series.hpp"

using namespace cuspforge;

namespace {

int g_checked = 0, g_passed = 0;

void verdict(int id, bool ok, const std::string& label) {
  ++g_checked;
  if (ok) ++g_passed;
  std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
  std::fflush(stdout);
}

bool c1_cosh_constant_curvature() {
  ProfileFunction f = ProfileFunction::cosh_profile(0.0, kInf);
  for (int i = 0; i <= 1000; ++i) {
    double t = 10.0 * i / 1000.0;
    WarpedCurvature k = warped_curvature(f, t);
    if (std::fabs(k.radial + 1.0) > 1e-12) return false;
    if (std::fabs(k.tangential + 1.0) > 1e-12) return false;
  }
  return true;
}

bool c2_exponential_curvature_forms() {
  ProfileFunction f = ProfileFunction::exponential(0.0, kInf);
  for (int i = 0; i <= 1000; ++i) {
    double t = 10.0 * i / 1000.0;
    WarpedCurvature k = warped_curvature(f, t);
    if (std::fabs(k.radial + 1.0) > 1e-12) return false;
    double want = -(std::exp(2.0 * t) + 1.0);
    if (std::fabs(k.tangential - want) > 1e-10 * std::fabs(want)) return false;
  }
  return true;
}

bool c3_cusp_volumes_and_additivity() {
  ProfileFunction f = ProfileFunction::exponential(0.0, kInf);
  VolumeReport v2 = cusp_volume(CuspModel{2, 1.0, f, 0.0, kInf});
  VolumeReport v3 = cusp_volume(CuspModel{3, 1.0, f, 0.0, kInf});
  if (!v2.finite || std::fabs(v2.value - 1.0) > 1e-8) return false;
  if (!v3.finite || std::fabs(v3.value - 0.5) > 1e-8) return false;

  VolumeReport head = cusp_volume(CuspModel{2, 1.0, f, 0.0, 5.0});
  VolumeReport tail = cusp_volume(CuspModel{2, 1.0, f, 5.0, kInf});
  return head.finite && tail.finite &&
         std::fabs(head.value + tail.value - v2.value) <= 1e-10;
}

bool c4_smoothing_jets_and_convexity() {
  double A = 2.0, a = 1.0;
  ProfileFunction h = smooth_kink(A, a);
  auto ks = h.knots();
  if (ks.size() != 2) return false;
  double w = ks[1];

  Jet2 l = h.jet(-w);
  double lf = std::exp(-A * (-w + 2.0 * a));
  if (std::fabs(l.f - lf) > 1e-9 * lf) return false;
  if (std::fabs(l.df + A * lf) > 1e-9 * std::fabs(A * lf)) return false;
  if (std::fabs(l.ddf - A * A * lf) > 1e-9 * A * A * lf) return false;

  Jet2 r = h.jet(w);
  double rf = std::exp(2.0 * A * (w - a));
  if (std::fabs(r.f - rf) > 1e-9 * rf) return false;
  if (std::fabs(r.df - 2.0 * A * rf) > 1e-9 * 2.0 * A * rf) return false;
  if (std::fabs(r.ddf - 4.0 * A * A * rf) > 1e-9 * 4.0 * A * A * rf)
    return false;

  for (int i = 0; i <= 2000; ++i) {
    double t = -w + 2.0 * w * i / 2000.0;
    Jet2 j = h.jet(t);
    if (!(j.ddf / j.f > 1e-10)) return false;
  }
  return true;
}

bool c5_graph_curvature_budget() {
  GraphSurfaceMetric s;
  double b2 = s.slope_budget() * s.slope_budget();
  if (std::fabs(b2 - 0.098696044010893586) > 1e-12) return false;
  double prev = 0.0;
  for (double half : {5.0, 10.0, 20.0}) {
    double tc = s.total_curvature(half);
    if (!(tc < 0.0)) return false;
    if (!(tc >= -b2 - 1e-9)) return false;
    if (!(tc < prev)) return false;  // mass grows with the window
    prev = tc;
  }
  return true;
}

bool c6_triangle_residual_refines() {
  GraphSurfaceMetric s;
  GeodesicState p1{-0.8, -0.6, 0, 0}, p2{0.7, -0.4, 0, 0}, p3{0.1, 0.9, 0, 0};
  TriangleReport coarse = gauss_bonnet_triangle(s, p1, p2, p3, 1000000);
  if (!(coarse.residual < 1e-3)) return false;
  TriangleReport fine = gauss_bonnet_triangle(s, p1, p2, p3, 4000000);
  return fine.residual <= 0.75 * coarse.residual + 1e-6;
}

bool c7_far_angles_stay_large() {
  GraphSurfaceMetric s;
  double sep = M_PI / 100.0;
  double bound = M_PI - sep - M_PI * M_PI / 100.0;
  InvisibilityReport rep =
      invisibility_witness(s, sep, {5.0, 10.0, 20.0, 40.0});
  if (rep.rows.size() != 4) return false;
  for (const auto& row : rep.rows)
    if (!(row.far_angle_sum >= bound - 1e-3)) return false;
  return rep.all_above_bound;
}

bool c8_clairaut_drift_and_scaling() {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  double base = integrate_geodesic(horn, 1.0, 0.0, 0.3, 100.0, 1e-10)
                    .clairaut_drift;
  if (!(base < 1e-8)) return false;
  // error-per-unit-step control keeps drift roughly proportional to tol
  for (double tol : {1e-11, 1e-10, 1e-9}) {
    double d = integrate_geodesic(horn, 1.0, 0.0, 0.3, 100.0, tol)
                   .clairaut_drift;
    if (!(d <= 100.0 * tol)) return false;
  }
  return true;
}

bool c9_escape_heights_rise() {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  std::vector<std::pair<double, double>> arcs;
  for (int n = 1; n <= 6; ++n) arcs.emplace_back(4.0 * n, 4.0 * n);
  VisibilityReport rep =
      visibility_experiment(horn, 1.0, 0.0, 0.3, arcs, 1e-8);
  if (rep.rows.size() != 6 || !rep.monotone) return false;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    if (!(rep.rows[i].min_z >= rep.rows[i].endpoint_floor - 1e-6))
      return false;
    if (i > 0 && !(rep.rows[i].min_z > rep.rows[i - 1].min_z)) return false;
  }
  return true;
}

bool c10_cyclic_cover_dichotomy() {
  ScaleSchedule cyc = ScaleSchedule::cyclic_cover(1, 2);
  CompletenessVerdict comp = completeness_series(cyc);
  if (!comp.complete || comp.series.verdict != SeriesVerdict::Divergent)
    return false;
  SeriesReport vol = total_volume(GraphPlan{GraphKind::Line}, cyc, 1.0, 2);
  if (vol.verdict != SeriesVerdict::Convergent) return false;
  // 1/4 + 2 sum_{k>=1} (k+2)^-2
  return std::fabs(vol.value - 1.0398681336964528) <= 1e-6;
}

bool c11_matching_and_chords() {
  ScaleSchedule pow2 =
      ScaleSchedule::lambda([](double k) { return std::exp2(k); });
  BlockTemplate block = BlockTemplate::exponential_block(3);
  TruncationPlan tri = assemble_plan(GraphPlan{GraphKind::TrivalentTree},
                                     pow2, block, 10.0, 8);
  if (!(tri.max_matching_residual() <= 1e-12)) return false;

  ScaleSchedule lin =
      ScaleSchedule::lambda([](double k) { return k + 1.0; });
  TruncationPlan chord =
      assemble_plan(GraphPlan{GraphKind::Chord}, lin, block, 8.0, 6);
  if (chord.chords.empty() || !chord.chord_constraints_ok()) return false;
  for (const auto& c : chord.chords) {
    if (!(c.lA + c.lB < c.lC)) return false;
    if (!(c.lC < 2.0 * (c.lA + c.lB))) return false;
  }
  return true;
}

bool c12_cgvd_invariance_and_decay() {
  ChainModel chain = cosh_cusp_chain(12.0);
  for (double s : {2.0, 3.0}) {
    ChainModel big = chain.homothety(s);
    for (double r = 1.0; r <= 10.0 + 1e-12; r += 0.5) {
      double base = chain.diagnostic(r, 2);
      double scaled = big.diagnostic(s * r, 2, s);
      if (std::fabs(scaled - base) > 1e-9 * std::fabs(base)) return false;
    }
  }
  double final_product = chain.diagnostic(10.0, 2);
  if (!(final_product < 1e-6)) return false;
  double closed = (std::exp(1.0) - 1.0) * (std::exp(1.0) - 1.0) *
                  std::exp(-20.0);
  return std::fabs(final_product - closed) <= 1e-12;
}

bool c13_planner_budgets() {
  GrowthPlan plan = growth_truncation_planner(
      [](double r) { return std::exp(2.0 * r); });
  if (plan.T.empty() || plan.verification.empty()) return false;
  for (auto [r, b] : plan.verification)
    if (!(b < std::exp(2.0 * r))) return false;

  try {
    growth_truncation_planner([](double) { return 0.5; });
    return false;
  } catch (const BudgetInfeasible& e) {
    return e.violating_r >= 0.0;
  }
}

}  // namespace

int main() {
  verdict(1, c1_cosh_constant_curvature(),
          "cosh warping has constant curvature -1 (1e-12)");
  verdict(2, c2_exponential_curvature_forms(),
          "exponential warping curvature closed forms (1e-10 rel)");
  verdict(3, c3_cusp_volumes_and_additivity(),
          "cusp volumes 1 and 1/2 (1e-8), additive across truncation (1e-10)");
  verdict(4, c4_smoothing_jets_and_convexity(),
          "kink smoothing matches branch jets (1e-9), convexity margin 1e-10");
  verdict(5, c5_graph_curvature_budget(),
          "graph curvature mass in [-(pi/10)^2, 0], monotone in the window");
  verdict(6, c6_triangle_residual_refines(),
          "triangle residual < 1e-3 and shrinks at 4x cells");
  verdict(7, c7_far_angles_stay_large(),
          "far angles >= pi - pi/100 - pi^2/100 - 1e-3 for T in {5,10,20,40}");
  verdict(8, c8_clairaut_drift_and_scaling(),
          "clairaut drift < 1e-8 at arc 100 tol 1e-10, drift <= 100*tol");
  verdict(9, c9_escape_heights_rise(),
          "connector min heights strictly rise, floor slack 1e-6");
  verdict(10, c10_cyclic_cover_dichotomy(),
          "cyclic cover d=1 m=2: divergent diameters, convergent volume");
  verdict(11, c11_matching_and_chords(),
          "matching residual <= 1e-12, chord inequalities hold");
  verdict(12, c12_cgvd_invariance_and_decay(),
          "cgvd homothety invariant (1e-9), product < 1e-6 by r=10");
  verdict(13, c13_planner_budgets(),
          "planner succeeds on e^{2r}, reports infeasible flat budget");

  std::printf("ACCEPTANCE %d/%d\n", g_passed, g_checked);
  return g_passed == g_checked ? 0 : 1;
}
