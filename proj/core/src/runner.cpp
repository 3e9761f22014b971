#include "cuspforge/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cuspforge/assembly.hpp"
#include "cuspforge/cusp.hpp"
#include "cuspforge/curvature.hpp"
#include "cuspforge/errors.hpp"
#include "cuspforge/experiments.hpp"
#include "cuspforge/geodesic.hpp"
#include "cuspforge/io.hpp"
#include "cuspforge/profile.hpp"
#include "cuspforge/quadrature.hpp"
#include "cuspforge/surface.hpp"

namespace cuspforge {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> kv;

  void add(const std::string& k, const std::string& v) {
    kv.emplace_back(k, v);
  }
  void add(const std::string& k, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    kv.emplace_back(k, buf);
  }
  void add(const std::string& k, bool v) { kv.emplace_back(k, v ? "1" : "0"); }
};

std::string art_path(const RunOptions& opts, const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return (std::filesystem::path(opts.out_dir) / name).string();
}

ProfileFunction build_profile(const RunConfig& cfg, double a) {
  std::string p = cfg.get("profile", "exp");
  double c = cfg.get_num("amplitude", 1.0);
  double k = cfg.get_num("rate", 1.0);
  if (p == "exp") return ProfileFunction::exponential(a, kInf, c, k, 0.0);
  if (p == "cosh") return ProfileFunction::cosh_profile(a, kInf, c, k, 0.0);
  if (p == "constant") return ProfileFunction::constant(a, kInf, c);
  if (p == "decay-cubic") return make_decay_profile(a, DecayMode::CubicDecay);
  return make_decay_profile(a, DecayMode::Exponential);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ','))
    out.push_back(std::strtod(item.c_str(), nullptr));
  return out;
}

Outcome run_cusp(const RunConfig& cfg, const RunOptions& opts) {
  double a = cfg.get_num("a", 0.0);
  int n = (int)cfg.get_int("n", 3);
  double vn = cfg.get_num("v_n", 1.0);
  double window = cfg.get_num("window", 10.0);
  long samples = cfg.get_int("samples", 512);
  double tol = cfg.get_num("tol", 1e-10);

  ProfileFunction f = build_profile(cfg, a);
  CuspModel model{n, vn, f, a, kInf};

  VolumeReport vol = cusp_volume(model, tol);
  CompletenessReport comp = completeness_check(model);

  CsvWriter csv({"t", "K_radial", "K_tangential", "cumulative_volume"});
  auto ts = linspace(a, a + window, (int)samples);
  KahanSum cumulative;
  double prev = a;
  double k_max = -kInf;
  std::vector<std::pair<double, double>> kr_pts, kt_pts;
  for (double t : ts) {
    if (t > prev) {
      auto q = integrate_adaptive(
          [&](double x) { return std::pow(f.value(x), n - 1); }, prev, t,
          tol / (double)samples);
      cumulative.add(q.value * vn);
      prev = t;
    }
    WarpedCurvature k = warped_curvature(f, t);
    k_max = std::max(k_max, k.max());
    csv.add_row({t, k.radial, k.tangential, cumulative.value()});
    kr_pts.emplace_back(t, k.radial);
    kt_pts.emplace_back(t, k.tangential);
  }
  csv.write_file(art_path(opts, "cusp.csv"));

  SvgChart chart("cusp curvature families", "t", "K");
  chart.add_series("K_radial", kr_pts);
  chart.add_series("K_tangential", kt_pts);
  chart.write_file(art_path(opts, "cusp.svg"));

  Outcome out;
  bool negative = k_max < 0.0;
  out.pass = comp.complete && negative;
  if (vol.finite)
    out.add("volume", vol.value);
  else
    out.add("volume", std::string("inf"));
  out.add("finite", vol.finite);
  out.add("complete", comp.complete);
  out.add("negative", negative);
  out.add("k_max", k_max);
  out.add("final_cumulative", cumulative.value());
  if (!out.pass)
    out.add("reason", std::string(!comp.complete ? "incomplete"
                                                 : "nonnegative-curvature"));
  return out;
}

Outcome run_curvature(const RunConfig& cfg, const RunOptions& opts) {
  Outcome out;
  if (cfg.get("surface", "warped") == "graph") {
    double half = cfg.get_num("half", 10.0);
    double tol = cfg.get_num("tol", 1e-8);
    GraphSurfaceMetric surf;
    double total = surf.total_curvature(half, tol);
    double budget = surf.slope_budget();
    double lo = -budget * budget;

    CsvWriter csv({"half", "total_curvature", "bound_lo", "bound_hi"});
    csv.add_row({half, total, lo, 0.0});
    csv.write_file(art_path(opts, "curvature.csv"));

    SvgChart chart("graph surface curvature mass", "half-width", "integral");
    chart.add_series("total", {{half, total}});
    chart.add_series("bound", {{0.0, lo}, {half, lo}});
    chart.write_file(art_path(opts, "curvature.svg"));

    out.pass = total >= lo && total <= 0.0;
    out.add("total", total);
    out.add("bound_lo", lo);
    out.add("bound_hi", 0.0);
    if (!out.pass) out.add("reason", std::string("budget-exceeded"));
    return out;
  }

  double a = cfg.get_num("a", 0.0);
  double b = cfg.get_num("b", 10.0);
  int resolution = (int)cfg.get_int("resolution", 4096);
  ProfileFunction f = build_profile(cfg, a);

  CurvatureReport rep = plane_curvature_bounds(f, Interval{a, b}, resolution);
  double k_min = rep.global_min(), k_max = rep.global_max();

  // Random off-grid probes; extremes on a fine grid should dominate them.
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(a, b);
  for (int i = 0; i < 64; ++i) {
    WarpedCurvature k = warped_curvature(f, dist(rng));
    k_min = std::min(k_min, k.min());
    k_max = std::max(k_max, k.max());
  }

  CsvWriter csv({"t", "K_radial", "K_tangential"});
  std::vector<std::pair<double, double>> kr_pts, kt_pts;
  for (double t : linspace(a, b, resolution)) {
    WarpedCurvature k = warped_curvature(f, t);
    csv.add_row({t, k.radial, k.tangential});
    kr_pts.emplace_back(t, k.radial);
    kt_pts.emplace_back(t, k.tangential);
  }
  csv.write_file(art_path(opts, "curvature.csv"));

  SvgChart chart("plane curvature bounds", "t", "K");
  chart.add_series("K_radial", kr_pts);
  chart.add_series("K_tangential", kt_pts);
  chart.write_file(art_path(opts, "curvature.svg"));

  out.pass = k_max < 0.0;
  out.add("k_min", k_min);
  out.add("k_max", k_max);
  out.add("negative", out.pass);
  if (!out.pass) out.add("reason", std::string("nonnegative-curvature"));
  return out;
}

Outcome run_smooth(const RunConfig& cfg, const RunOptions& opts) {
  double A = cfg.get_num("rate", 2.0);
  double a = cfg.get_num("offset", 1.0);
  long samples = cfg.get_int("samples", 512);

  ProfileFunction h = smooth_kink(A, a);
  double inflation = kink_curvature_inflation(A, a);
  auto knots = h.knots();
  double w = knots.size() >= 2 ? knots[1] : 0.5;

  // Jet agreement with the two exponential branches at the patch ends:
  // e^(-A(t + 2a)) on the left, e^(2A(t - a)) on the right.
  double jet_residual = 0.0;
  {
    Jet2 left = h.jet(-w);
    double e = std::exp(-A * (-w + 2.0 * a));
    jet_residual = std::max(jet_residual, std::abs(left.f - e));
    jet_residual = std::max(jet_residual, std::abs(left.df + A * e));
    jet_residual = std::max(jet_residual, std::abs(left.ddf - A * A * e));
    Jet2 right = h.jet(w);
    double e2 = std::exp(2.0 * A * (w - a));
    jet_residual = std::max(jet_residual, std::abs(right.f - e2));
    jet_residual = std::max(jet_residual, std::abs(right.df - 2.0 * A * e2));
    jet_residual =
        std::max(jet_residual, std::abs(right.ddf - 4.0 * A * A * e2));
  }

  double min_ratio = kInf;
  CsvWriter csv({"t", "h", "ddh", "ddh_over_h"});
  std::vector<std::pair<double, double>> h_pts;
  for (double t : linspace(-3.0 * w, 3.0 * w, (int)samples)) {
    Jet2 j = h.jet(t);
    double ratio = j.ddf / j.f;
    min_ratio = std::min(min_ratio, ratio);
    csv.add_row({t, j.f, j.ddf, ratio});
    h_pts.emplace_back(t, j.f);
  }
  csv.write_file(art_path(opts, "smooth.csv"));

  SvgChart chart("smoothed kink profile", "t", "h");
  chart.add_series("h", h_pts);
  chart.write_file(art_path(opts, "smooth.svg"));

  Outcome out;
  double scale = std::exp(-2.0 * A * a);
  out.pass = jet_residual <= 1e-9 * std::max(1.0, scale) && min_ratio > 1e-10;
  out.add("window", w);
  out.add("jet_residual", jet_residual);
  out.add("min_ddh_over_h", min_ratio);
  out.add("inflation", inflation);
  if (!out.pass) out.add("reason", std::string("patch-quality"));
  return out;
}

Outcome run_assemble(const RunConfig& cfg, const RunOptions& opts) {
  std::string gname = cfg.get("graph", "trivalent");
  GraphPlan graph;
  int ports = 2;
  if (gname == "line") {
    graph.kind = GraphKind::Line;
    ports = 2;
  } else if (gname == "chord-line") {
    graph.kind = GraphKind::Chord;
    ports = 3;
  } else if (gname == "trivalent") {
    graph.kind = GraphKind::TrivalentTree;
    ports = 3;
  } else {
    graph.kind = GraphKind::F2Cayley;
    ports = 4;
  }

  std::string sname = cfg.get("schedule", "lambda-powers");
  ScaleSchedule schedule = [&] {
    if (sname == "cyclic-cover")
      return ScaleSchedule::cyclic_cover((int)cfg.get_int("d", 1),
                                         (int)cfg.get_int("m", 2));
    if (sname == "constant")
      return ScaleSchedule::lambda([](double) { return 1.0; }, "constant");
    double base = cfg.get_num("lambda", 2.0);
    return ScaleSchedule::lambda(
        [base](double k) { return std::pow(base, k); }, "lambda-powers");
  }();

  int n = (int)cfg.get_int("n", 2);
  int generations = (int)cfg.get_int("generations", 8);
  double block_volume = cfg.get_num("block_volume", 1.0);

  BlockTemplate block = BlockTemplate::exponential_block(ports);
  block.interior_volume = block_volume;
  block.interior_diameter = cfg.get_num("block_diameter", 1.0);

  TruncationPlan plan = assemble_plan(graph, schedule, block,
                                      cfg.get_num("t0", 10.0), generations);
  SeriesReport volume = total_volume(graph, schedule, block_volume, n);
  // blocks keep their interior diameter under assembly, only the gluing
  // necks shrink, so rays through infinitely many blocks have infinite length
  CompletenessVerdict comp = completeness_series(schedule,
                                                 block.interior_diameter,
                                                 /*enforce_unit_diameter=*/true);

  CsvWriter csv({"k", "count", "scale", "T", "port_length"});
  std::vector<std::pair<double, double>> scale_pts;
  for (int k = 0; k < generations; ++k) {
    csv.add_row({(double)k, graph.count(k), plan.scale[(size_t)k],
                 plan.T[(size_t)k], plan.port_length[(size_t)k]});
    scale_pts.emplace_back((double)k, plan.scale[(size_t)k]);
  }
  csv.write_file(art_path(opts, "assemble.csv"));

  SvgChart chart("assembly scale schedule", "generation", "length multiplier");
  chart.add_series(schedule.name(), scale_pts);
  chart.write_file(art_path(opts, "assemble.svg"));

  double residual = plan.max_matching_residual();
  bool chords_ok = plan.chord_constraints_ok();

  Outcome out;
  bool volume_ok = volume.verdict == SeriesVerdict::Convergent;
  out.pass = volume_ok && comp.complete && residual <= 1e-12 && chords_ok;
  out.add("volume_verdict",
          std::string(volume.verdict == SeriesVerdict::Convergent
                          ? "convergent"
                          : volume.verdict == SeriesVerdict::Divergent
                                ? "divergent"
                                : "inconclusive"));
  if (volume_ok) out.add("volume", volume.value);
  out.add("complete", comp.complete);
  out.add("matching_residual", residual);
  out.add("chords_ok", chords_ok);
  out.add("side_condition", schedule.side_condition_holds());
  if (!out.pass) {
    std::string reason = !volume_ok ? "divergent-volume"
                         : !comp.complete
                             ? "incomplete"
                             : (residual > 1e-12 ? "matching" : "chords");
    out.add("reason", reason);
  }
  return out;
}

Outcome run_plan_growth(const RunConfig& cfg, const RunOptions& opts) {
  PlannerParams params;
  params.generations = (int)cfg.get_int("generations", 8);
  params.T_min = cfg.get_num("t_min", 1.0);
  params.T_cap = cfg.get_num("t_cap", 30.0);
  params.kappa_inflation = cfg.get_num("kappa_inflation", 1.0);
  params.block_diameter = cfg.get_num("block_diameter", 1.0);
  params.grid_step = cfg.get_num("grid_step", 0.25);
  params.t_step = cfg.get_num("t_step", 0.125);

  std::function<double(double)> budget;
  if (cfg.get("budget", "exp2") == "exp2")
    budget = [](double r) { return std::exp(2.0 * r); };
  else {
    double v = cfg.get_num("budget_value", 0.5);
    budget = [v](double) { return v; };
  }

  GrowthPlan plan = growth_truncation_planner(budget, params);

  CsvWriter csv({"k", "T", "scale_divisor", "neck_radius"});
  std::vector<std::pair<double, double>> t_pts;
  for (size_t k = 0; k < plan.T.size(); ++k) {
    csv.add_row({(double)k, plan.T[k], plan.scale_divisor[k],
                 plan.neck_radius[k]});
    t_pts.emplace_back((double)k, plan.T[k]);
  }
  csv.write_file(art_path(opts, "plan-growth.csv"));

  SvgChart chart("growth plan truncations", "generation", "T");
  chart.add_series("T", t_pts);
  chart.write_file(art_path(opts, "plan-growth.svg"));

  double t_low = kInf;
  for (double t : plan.T) t_low = std::min(t_low, t);

  Outcome out;
  out.pass = !plan.T.empty();
  out.add("generations", (double)plan.T.size());
  out.add("t_min_chosen", t_low);
  out.add("horizon", plan.chain.horizon());
  return out;
}

Outcome run_cgvd(const RunConfig& cfg, const RunOptions& opts) {
  double horizon = cfg.get_num("horizon", 20.0);
  double r_max = cfg.get_num("r_max", 10.0);
  double r_step = cfg.get_num("r_step", 0.5);
  int n = (int)cfg.get_int("n", 3);
  double width = cfg.get_num("width", 1.0);
  double scale = cfg.get_num("scale", 2.0);
  double threshold = cfg.get_num("threshold", 1e-6);

  // the diagnostic b^n Vol^2 is homothety invariant only when the volume
  // density matches the exponent, so the chain dimension is tied to n
  ChainModel model = cosh_cusp_chain(horizon, n);
  std::vector<double> grid;
  for (double r = width; r <= r_max + 1e-12; r += r_step) grid.push_back(r);

  auto rows = cgvd_diagnostic(model, grid, n, width);

  ChainModel scaled = model.homothety(scale);
  double hdev = 0.0;
  for (double r : grid) {
    double base = model.diagnostic(r, n, width);
    double big = scaled.diagnostic(scale * r, n, scale * width);
    hdev = std::max(hdev, std::abs(big - base) / std::max(1e-300, base));
  }

  CsvWriter csv({"r", "b", "annulus_vol", "product"});
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : rows) {
    csv.add_row({row.r, row.b, row.annulus_vol, row.product});
    pts.emplace_back(row.r, row.product);
  }
  csv.write_file(art_path(opts, "cgvd.csv"));

  SvgChart chart("volume-curvature diagnostic", "r", "b^n vol^2");
  chart.add_series("product", pts);
  chart.write_file(art_path(opts, "cgvd.svg"));

  Outcome out;
  double final_product = rows.empty() ? kInf : rows.back().product;
  out.pass = final_product <= threshold && hdev <= 1e-9;
  out.add("product_final", final_product);
  out.add("threshold", threshold);
  out.add("homothety_dev", hdev);
  if (auto mu1 = margulis_mu1_from_env(); mu1 && !rows.empty())
    out.add("margulis_mu_b", margulis_threshold(rows.back().b, mu1));
  if (!out.pass)
    out.add("reason", std::string(final_product > threshold
                                      ? "diagnostic-large"
                                      : "homothety"));
  return out;
}

Outcome run_geodesic(const RunConfig& cfg, const RunOptions& opts) {
  double waist = cfg.get_num("waist", 1.0);
  RevolutionSurface surf =
      cfg.get("surface", "horn") == "cylinder"
          ? RevolutionSurface::cylinder(waist)
          : RevolutionSurface::exp_horn(waist, cfg.get_num("amplitude", 1.0),
                                        cfg.get_num("rate", 1.0));
  double z0 = cfg.get_num("z0", 0.0);
  double alpha0 = cfg.get_num("alpha0", 0.35);
  double arc = cfg.get_num("arc", 100.0);
  double tol = cfg.get_num("tol", 1e-10);

  Trajectory traj = integrate_geodesic(surf, z0, 0.0, alpha0, arc, tol);
  TrappedRayReport trap =
      trapped_ray_check(surf, z0, alpha0, std::min(arc, 200.0), tol);

  CsvWriter csv({"s", "z", "theta", "alpha"});
  size_t stride = std::max<size_t>(1, traj.samples.size() / 2000);
  std::vector<std::pair<double, double>> z_pts;
  for (size_t i = 0; i < traj.samples.size(); i += stride) {
    const auto& st = traj.samples[i];
    csv.add_row({st.s, st.u, st.v, st.alpha});
    z_pts.emplace_back(st.s, st.u);
  }
  csv.write_file(art_path(opts, "geodesic.csv"));

  SvgChart chart("geodesic height along arc", "s", "z");
  chart.add_series("z", z_pts);
  chart.write_file(art_path(opts, "geodesic.svg"));

  Outcome out;
  out.pass = traj.clairaut_drift <= arc * tol;
  out.add("drift", traj.clairaut_drift);
  out.add("escapes", trap.escapes);
  out.add("clairaut", trap.clairaut);
  out.add("alpha_sup", trap.alpha_sup);
  out.add("z_reached", trap.z_reached);
  out.add("steps", (double)traj.steps_accepted);
  if (!out.pass) out.add("reason", std::string("conservation-drift"));
  return out;
}

Outcome run_visibility(const RunConfig& cfg, const RunOptions& opts) {
  RevolutionSurface surf = RevolutionSurface::exp_horn(
      cfg.get_num("waist", 1.0), cfg.get_num("amplitude", 1.0),
      cfg.get_num("rate", 1.0));
  double z0 = cfg.get_num("z0", 0.0);
  double alpha0 = cfg.get_num("alpha0", 0.3);
  int rows = (int)cfg.get_int("rows", 6);
  double base = cfg.get_num("arc_base", 10.0);
  double tol = cfg.get_num("tol", 1e-6);

  std::vector<std::pair<double, double>> arcs;
  for (int i = 1; i <= rows; ++i)
    arcs.emplace_back(base * i, base * i);

  VisibilityReport rep = visibility_experiment(surf, z0, 0.0, alpha0, arcs,
                                               tol);

  CsvWriter csv({"n", "a", "b", "z1", "z2", "min_z", "endpoint_floor"});
  std::vector<std::pair<double, double>> min_pts, floor_pts;
  for (const auto& row : rep.rows) {
    csv.add_row({(double)row.n, row.a, row.b, row.z1, row.z2, row.min_z,
                 row.endpoint_floor});
    min_pts.emplace_back(row.n, row.min_z);
    floor_pts.emplace_back(row.n, row.endpoint_floor);
  }
  csv.write_file(art_path(opts, "visibility.csv"));

  SvgChart chart("connecting geodesic heights", "n", "z");
  chart.add_series("min_z", min_pts);
  chart.add_series("endpoint_floor", floor_pts);
  chart.write_file(art_path(opts, "visibility.svg"));

  Outcome out;
  out.pass = rep.monotone && rep.above_floor;
  out.add("rows", (double)rep.rows.size());
  out.add("monotone", rep.monotone);
  out.add("above_floor", rep.above_floor);
  if (!rep.rows.empty()) out.add("min_z_last", rep.rows.back().min_z);
  if (!out.pass)
    out.add("reason",
            std::string(!rep.monotone ? "not-monotone" : "below-floor"));
  return out;
}

Outcome run_invisibility(const RunConfig& cfg, const RunOptions& opts) {
  GraphSurfaceMetric surf;
  double separation = cfg.get_num("separation", kPi / 100.0);
  std::vector<double> horizons = parse_list(cfg.get("horizons", "5,10,20,40"));
  double tol = cfg.get_num("tol", 1e-8);

  InvisibilityReport rep =
      invisibility_witness(surf, separation, horizons, {}, tol);

  CsvWriter csv(
      {"T", "base_angle", "far_angle_sum", "curvature_integral", "residual"});
  std::vector<std::pair<double, double>> far_pts;
  for (const auto& row : rep.rows) {
    csv.add_row({row.T, row.base_angle, row.far_angle_sum,
                 row.curvature_integral, row.residual});
    far_pts.emplace_back(row.T, row.far_angle_sum);
  }
  csv.write_file(art_path(opts, "invisibility.csv"));

  SvgChart chart("far angle sums", "T", "angle");
  chart.add_series("far_angle_sum", far_pts);
  chart.add_series("lower_bound",
                   {{rep.rows.empty() ? 0.0 : rep.rows.front().T,
                     rep.lower_bound},
                    {rep.rows.empty() ? 1.0 : rep.rows.back().T,
                     rep.lower_bound}});
  chart.write_file(art_path(opts, "invisibility.svg"));

  double budget = surf.slope_budget();
  Outcome out;
  out.pass = rep.all_above_bound && rep.max_abs_integral <= budget * budget;
  out.add("max_integral", rep.max_abs_integral);
  out.add("budget_sq", budget * budget);
  out.add("lower_bound", rep.lower_bound);
  out.add("all_above_bound", rep.all_above_bound);
  if (!out.pass) out.add("reason", std::string("angle-budget"));
  return out;
}

}  // namespace

int run(const RunConfig& config, const RunOptions& opts, std::ostream& out) {
  const std::string& sub = config.subcommand;
  try {
    Outcome o;
    if (sub == "cusp")
      o = run_cusp(config, opts);
    else if (sub == "curvature")
      o = run_curvature(config, opts);
    else if (sub == "smooth")
      o = run_smooth(config, opts);
    else if (sub == "assemble")
      o = run_assemble(config, opts);
    else if (sub == "plan-growth")
      o = run_plan_growth(config, opts);
    else if (sub == "cgvd")
      o = run_cgvd(config, opts);
    else if (sub == "geodesic")
      o = run_geodesic(config, opts);
    else if (sub == "visibility")
      o = run_visibility(config, opts);
    else if (sub == "invisibility")
      o = run_invisibility(config, opts);
    else {
      out << "RESULT " << sub << " fail reason=unknown-subcommand\n";
      return 1;
    }

    out << "RESULT " << sub << ' ' << (o.pass ? "pass" : "fail");
    for (const auto& [k, v] : o.kv) out << ' ' << k << '=' << v;
    out << '\n';
    return o.pass ? 0 : 2;
  } catch (const BudgetInfeasible& e) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", e.violating_r);
    out << "RESULT " << sub << " fail reason=budget-infeasible violating_r="
        << buf << '\n';
    return 2;
  } catch (const Error& e) {
    out << "RESULT " << sub << " fail reason=error detail=\"" << e.what()
        << "\"\n";
    return 1;
  } catch (const std::exception& e) {
    out << "RESULT " << sub << " fail reason=error detail=\"" << e.what()
        << "\"\n";
    return 1;
  }
}

}  // namespace cuspforge
