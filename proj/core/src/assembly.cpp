#include "cuspforge/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cuspforge/curvature.hpp"
#include "cuspforge/errors.hpp"
#include "cuspforge/quadrature.hpp"

namespace cuspforge {

double GraphPlan::count(long k) const {
  if (k <= 0) return 1.0;
  switch (kind) {
    case GraphKind::Line:
    case GraphKind::Chord:
      return 2.0;
    case GraphKind::TrivalentTree:
      return 3.0 * std::exp2(double(k - 1));
    case GraphKind::F2Cayley:
      return 4.0 * std::pow(3.0, double(k - 1));
  }
  return 0.0;
}

std::function<double(double)> GraphPlan::default_divisor() const {
  switch (kind) {
    case GraphKind::Line:
    case GraphKind::Chord:
      return [](double k) { return k + 1.0; };
    case GraphKind::TrivalentTree:
      return [](double k) { return std::exp2(k); };
    case GraphKind::F2Cayley:
      return [](double k) { return std::pow(3.0, k); };
  }
  return [](double) { return 1.0; };
}

ScaleSchedule ScaleSchedule::lambda(std::function<double(double)> divisor,
                                    std::string name) {
  ScaleSchedule s;
  auto d = std::move(divisor);
  s.multiplier_ = [d](double k) { return 1.0 / d(k); };
  s.name_ = std::move(name);
  return s;
}

ScaleSchedule ScaleSchedule::cyclic_cover(int d, int m, bool strict) {
  if (d < 1 || m < 2)
    throw DomainError("cyclic cover needs d >= 1 and m >= 2");
  double shrink = std::pow(double(m), -1.0 / d);  // 1 - eps
  ScaleSchedule s;
  s.multiplier_ = [d, m, shrink](double k) {
    if (k < d) return std::pow(shrink, k + 1.0);
    return 1.0 / (k - d + m + 1.0);
  };
  {
    std::ostringstream os;
    os << "cyclic-cover(d=" << d << ", m=" << m << ")";
    s.name_ = os.str();
  }
  s.side_condition_ = (double(m - 1) / m) < shrink;
  if (!s.side_condition_) {
    std::ostringstream os;
    os << "side condition (m-1)/m < 1-eps fails: " << (double(m - 1) / m)
       << " >= " << shrink;
    s.side_note_ = os.str();
    if (strict) throw SideConditionError(s.side_note_);
  }
  return s;
}

double ScaleSchedule::length_multiplier(double k) const {
  return multiplier_(k);
}

BlockTemplate BlockTemplate::exponential_block(int n_ports) {
  BlockTemplate b;
  for (int i = 0; i < n_ports; ++i) {
    Port p;
    p.label = std::string(1, char('A' + i));
    p.base_length = 1.0;
    p.profile = ProfileFunction::exponential(0.0, kInf, 1.0, 1.0, 0.0);
    b.ports.push_back(std::move(p));
  }
  return b;
}

double matching_truncation(double scale_u, double scale_v, double T_v) {
  if (scale_u <= 0.0 || scale_v <= 0.0)
    throw DomainError("matching needs positive scales");
  return T_v + std::log(scale_u / scale_v);
}

double matching_truncation(double scale_u, double scale_v, double T_v,
                           const ProfileFunction& profile_u) {
  double T_u = matching_truncation(scale_u, scale_v, T_v);
  const Segment& tail = profile_u.segments().back();
  if (tail.form != SegmentForm::Exp || T_u < tail.lo) {
    std::ostringstream os;
    os << "matched truncation T=" << T_u
       << " falls before the exponential tail";
    throw TailError(os.str());
  }
  return T_u;
}

double boundary_coefficient(const ProfileFunction& f, double T, double scale) {
  return 2.0 * scale * f.value(T);
}

double TruncationPlan::max_matching_residual() const {
  double worst = 0.0;
  for (const GluedEdge& e : edges) {
    double denom =
        std::max({std::fabs(e.coeff_inner), std::fabs(e.coeff_outer), 1e-300});
    worst = std::max(worst, std::fabs(e.coeff_inner - e.coeff_outer) / denom);
  }
  return worst;
}

bool TruncationPlan::chord_constraints_ok() const {
  return std::all_of(chords.begin(), chords.end(),
                     [](const ThreePortLengths& c) { return c.admissible(); });
}

TruncationPlan assemble_plan(const GraphPlan& graph,
                             const ScaleSchedule& schedule,
                             const BlockTemplate& block, double T0,
                             int generations) {
  if (generations < 1) throw DomainError("plan needs at least one generation");
  if (block.ports.empty()) throw DomainError("block template has no ports");
  TruncationPlan plan;
  plan.scale.resize(static_cast<std::size_t>(generations));
  plan.T.resize(static_cast<std::size_t>(generations));
  plan.port_length.resize(static_cast<std::size_t>(generations));
  const ProfileFunction& tail = block.ports.front().profile;
  for (int k = 0; k < generations; ++k) {
    auto i = static_cast<std::size_t>(k);
    plan.scale[i] = schedule.length_multiplier(double(k));
    plan.T[i] = (k == 0) ? T0
                         : matching_truncation(plan.scale[i], plan.scale[i - 1],
                                               plan.T[i - 1], tail);
    plan.port_length[i] = block.ports.front().base_length + plan.T[i];
    if (k > 0) {
      GluedEdge e;
      e.generation = k - 1;
      e.coeff_inner = boundary_coefficient(tail, plan.T[i - 1], plan.scale[i - 1]);
      e.coeff_outer = boundary_coefficient(tail, plan.T[i], plan.scale[i]);
      plan.edges.push_back(e);
    }
    if (graph.kind == GraphKind::Chord && block.ports.size() >= 3) {
      ThreePortLengths c;
      c.generation = k;
      c.lA = block.ports[0].base_length + plan.T[i];
      c.lB = block.ports[1].base_length + plan.T[i];
      c.lC = 1.5 * (c.lA + c.lB);
      plan.chords.push_back(c);
    }
  }
  return plan;
}

SeriesReport total_volume(const GraphPlan& graph,
                          const ScaleSchedule& schedule, double block_volume,
                          int n) {
  if (n < 1) throw DomainError("volume exponent must be positive");
  GraphPlan g = graph;
  auto term = [g, &schedule, block_volume, n](double k) {
    // real-argument extension of log count(k), exact on the integer lattice;
    // the term is assembled in log space so exponential shell counts never
    // overflow before a decaying scale factor can cancel them
    double log_cnt = 0.0;
    switch (g.kind) {
      case GraphKind::Line:
      case GraphKind::Chord:
        log_cnt = (k < 0.5) ? 0.0 : std::log(2.0);
        break;
      case GraphKind::TrivalentTree:
        log_cnt = (k < 0.5) ? 0.0 : std::log(3.0) + (k - 1.0) * std::log(2.0);
        break;
      case GraphKind::F2Cayley:
        log_cnt = (k < 0.5) ? 0.0 : std::log(4.0) + (k - 1.0) * std::log(3.0);
        break;
    }
    double mult = schedule.length_multiplier(k);
    if (!(mult > 0.0)) return 0.0;
    return block_volume * std::exp(log_cnt + double(n) * std::log(mult));
  };
  return classify_series(term, 0.0);
}

CompletenessVerdict completeness_series(const ScaleSchedule& schedule,
                                        double base_diameter,
                                        bool enforce_unit_diameter) {
  auto term = [&schedule, base_diameter, enforce_unit_diameter](double k) {
    double d = base_diameter * schedule.length_multiplier(k);
    return enforce_unit_diameter ? std::max(1.0, d) : d;
  };
  CompletenessVerdict v;
  v.series = classify_series(term, 0.0);
  switch (v.series.verdict) {
    case SeriesVerdict::Divergent:
      v.complete = true;
      v.criterion = "block diameters along a ray are not summable: " +
                    v.series.rule;
      break;
    case SeriesVerdict::Convergent:
      v.complete = false;
      v.criterion =
          "diameter series converges, completeness not established by this "
          "criterion: " +
          v.series.rule;
      break;
    case SeriesVerdict::Inconclusive:
      v.complete = false;
      v.criterion = "diameter series unclassified: " + v.series.rule;
      break;
  }
  return v;
}

DisplacementReport displacement_growth_check() {
  auto D = [](double rho) { return std::exp(rho) / rho; };
  DisplacementReport rep;
  rep.at2 = D(2.0);
  rep.increasing_on_grid = true;
  double prev = D(2.0);
  for (int i = 1; i <= 9800; ++i) {
    double rho = 2.0 + i * 0.01;
    double v = D(rho);
    if (v <= prev) {
      rep.increasing_on_grid = false;
      break;
    }
    prev = v;
  }
  for (double rho = 2.0; rho <= 20.0; rho += 0.01) {
    if (D(rho) > 1e6) {
      rep.unbounded_witness = true;
      rep.rho_exceeding_1e6 = rho;
      break;
    }
  }
  return rep;
}

ChainModel::ChainModel(std::vector<Segment> segs) : segs_(std::move(segs)) {
  if (segs_.empty()) throw DomainError("chain model needs segments");
  offsets_.push_back(0.0);
  for (const Segment& s : segs_) {
    if (s.length <= 0.0 || s.scale <= 0.0)
      throw DomainError("chain segments need positive length and scale");
    offsets_.push_back(offsets_.back() + s.length);
  }
  horizon_ = offsets_.back();
}

namespace {

// max |K| of a chain segment over template coordinates [t0, t1].
double segment_curvature_max(const ChainModel::Segment& s, double t0,
                             double t1) {
  if (s.kappa_clamp > 0.0) return s.kappa_clamp;
  Interval range = warped_curvature_range(s.profile, t0, t1, 512);
  double mag = std::max(std::fabs(range.lo), std::fabs(range.hi));
  return mag * s.kappa_factor / (s.scale * s.scale);
}

// integral over template coordinates [a, b] of f(t)^m dt.
double profile_power_integral(const ProfileFunction& f, double a, double b,
                              int m) {
  if (b <= a) return 0.0;
  // closed forms segment by segment where the form allows
  double total = 0.0;
  for (const Segment& s : f.segments()) {
    double lo = std::max(a, s.lo);
    double hi = std::min(b, std::isinf(s.hi) ? b : s.hi);
    if (hi <= lo) continue;
    switch (s.form) {
      case SegmentForm::Exp: {
        double km = s.k * m;
        total += std::pow(s.c, m) / km *
                 (std::exp(-km * (lo - s.t0)) - std::exp(-km * (hi - s.t0)));
        break;
      }
      case SegmentForm::Power: {
        double sm = s.s * m;
        if (std::fabs(sm - 1.0) < 1e-12) {
          total += std::pow(s.c, m) *
                   (std::log(hi - s.t0) - std::log(lo - s.t0));
        } else {
          total += std::pow(s.c, m) / (sm - 1.0) *
                   (std::pow(lo - s.t0, 1.0 - sm) -
                    std::pow(hi - s.t0, 1.0 - sm));
        }
        break;
      }
      case SegmentForm::Constant:
        total += std::pow(s.c, m) * (hi - lo);
        break;
      default: {
        auto dens = [&s, m](double t) { return std::pow(s.jet(t).f, m); };
        double rough = std::fabs(integrate_fixed(dens, lo, hi, 64));
        total +=
            integrate_adaptive(dens, lo, hi, std::max(1e-15, 1e-13 * rough))
                .value;
        break;
      }
    }
  }
  return total;
}

}  // namespace

double ChainModel::max_abs_curvature(double r) const {
  if (r < 0.0 || r > horizon_ + 1e-9) {
    std::ostringstream os;
    os << "radius " << r << " outside the chain horizon " << horizon_;
    throw HorizonError(os.str());
  }
  double best = 0.0;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (offsets_[i] >= r) break;
    const Segment& s = segs_[i];
    double reach = std::min(r, offsets_[i + 1]);
    double t1 = s.t_start + (reach - offsets_[i]) / s.scale;
    best = std::max(best, segment_curvature_max(s, s.t_start, t1));
  }
  return best;
}

double ChainModel::annulus_volume(double r, double width) const {
  if (r < 0.0 || r > horizon_ + 1e-9) {
    std::ostringstream os;
    os << "radius " << r << " outside the chain horizon " << horizon_;
    throw HorizonError(os.str());
  }
  double x0 = std::max(0.0, r - width);
  double total = 0.0;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    double lo = std::max(x0, offsets_[i]);
    double hi = std::min(r, offsets_[i + 1]);
    if (hi <= lo) continue;
    const Segment& s = segs_[i];
    int m = s.dim - 1;
    double ta = s.t_start + (lo - offsets_[i]) / s.scale;
    double tb = s.t_start + (hi - offsets_[i]) / s.scale;
    total += s.vol_coeff * std::pow(s.scale, s.dim) *
             profile_power_integral(s.profile, ta, tb, m);
  }
  return total;
}

double ChainModel::diagnostic(double r, int n, double width) const {
  double b = max_abs_curvature(r);
  double vol = annulus_volume(r, width);
  return std::pow(b, n) * vol * vol;
}

ChainModel ChainModel::homothety(double s) const {
  std::vector<Segment> out = segs_;
  for (Segment& seg : out) {
    seg.length *= s;
    seg.scale *= s;
    if (seg.kappa_clamp > 0.0) seg.kappa_clamp /= s * s;
  }
  return ChainModel(std::move(out));
}

std::vector<CgvdRow> cgvd_diagnostic(const ChainModel& model,
                                     const std::vector<double>& r_grid, int n,
                                     double width) {
  std::vector<CgvdRow> rows;
  rows.reserve(r_grid.size());
  for (double r : r_grid) {
    CgvdRow row;
    row.r = r;
    row.b = model.max_abs_curvature(r);
    row.annulus_vol = model.annulus_volume(r, width);
    row.product = std::pow(row.b, n) * row.annulus_vol * row.annulus_vol;
    rows.push_back(row);
  }
  return rows;
}

ChainModel cosh_cusp_chain(double horizon, int dim) {
  ChainModel::Segment s;
  s.length = horizon;
  s.scale = 1.0;
  s.profile = ProfileFunction::exponential(0.0, kInf, 1.0, 1.0, 0.0);
  s.t_start = 0.0;
  s.kappa_clamp = 1.0;
  s.vol_coeff = 1.0;
  s.dim = dim;
  return ChainModel({s});
}

GrowthPlan growth_truncation_planner(
    const std::function<double(double)>& budget, const PlannerParams& p) {
  std::function<double(double)> divisor = p.divisor;
  if (!divisor) divisor = [](double k) { return k + 1.0; };
  std::vector<ChainModel::Segment> segs;
  std::vector<std::array<double, 2>> samples;
  GrowthPlan plan{{}, {}, {}, cosh_cusp_chain(1.0), {}};

  double R = 0.0;
  double verified_to = 0.0;
  auto verify_through = [&](double upto) {
    ChainModel chain(segs);
    for (double r = verified_to + p.grid_step; r <= upto + 1e-12;
         r += p.grid_step) {
      double b = chain.max_abs_curvature(r);
      samples.push_back({r, b});
      if (b >= budget(r)) {
        std::ostringstream os;
        os << "curvature bound " << b << " meets the budget " << budget(r)
           << " at r=" << r;
        throw BudgetInfeasible(os.str(), r);
      }
    }
    verified_to = upto;
  };

  for (int i = 0; i < p.generations; ++i) {
    double lam = divisor(double(i));
    double mult = 1.0 / lam;

    // Block interior: curvature back at the scaled reference level.
    ChainModel::Segment interior;
    interior.length = mult * p.block_diameter;
    interior.scale = mult;
    interior.profile = ProfileFunction::constant(0.0, kInf, 1.0);
    interior.t_start = 0.0;
    interior.kappa_clamp = lam * lam;
    segs.push_back(interior);
    R += interior.length;
    verify_through(R);

    // Greedy neck depth: deepest T whose neck curvature stays under the
    // budget at the radius where the neck will sit.
    double chosen = -1.0;
    for (double T = p.T_cap; T >= p.T_min - 1e-12; T -= p.t_step) {
      double neck_bound = lam * lam * (std::exp(2.0 * T) + 1.0) * p.kappa_inflation;
      double neck_radius = R + mult * T;
      if (neck_bound < budget(neck_radius)) {
        chosen = T;
        break;
      }
    }
    if (chosen < 0.0) {
      double r_fail = R + mult * p.T_min;
      std::ostringstream os;
      os << "no truncation depth in [" << p.T_min << ", " << p.T_cap
         << "] fits the budget near r=" << r_fail;
      throw BudgetInfeasible(os.str(), r_fail);
    }

    ChainModel::Segment neck;
    neck.length = mult * chosen;
    neck.scale = mult;
    neck.profile = ProfileFunction::exponential(0.0, kInf, 1.0, 1.0, 0.0);
    neck.t_start = 0.0;
    neck.kappa_factor = p.kappa_inflation;
    segs.push_back(neck);
    R += neck.length;
    verify_through(R);

    plan.T.push_back(chosen);
    plan.scale_divisor.push_back(lam);
    plan.neck_radius.push_back(R);
  }

  plan.chain = ChainModel(segs);
  plan.verification = std::move(samples);
  return plan;
}

double margulis_threshold(double b, std::optional<double> mu1) {
  if (b <= 0.0) throw DomainError("curvature bound must be positive");
  if (!mu1)
    throw ConfigError(
        "Margulis constant mu_1 is not configured (set CUSPFORGE_MU1)");
  return *mu1 / b;
}

std::optional<double> margulis_mu1_from_env() {
  const char* raw = std::getenv("CUSPFORGE_MU1");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    double v = std::stod(raw, &used);
    if (used == 0) throw std::invalid_argument("empty");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("CUSPFORGE_MU1 is not a number: ") + raw);
  }
}

}  // namespace cuspforge
