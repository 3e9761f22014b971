#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuspforge/profile.hpp"
#include "cuspforge/series.hpp"

namespace cuspforge {

// Underlying graph of a graph-of-blocks assembly. Vertices are blocks;
// count(k) is the number of vertices at graph distance k from the base
// vertex. Chord graphs are the integer line plus chords {m, -m}, which do
// not change shell counts.
enum class GraphKind { Line, Chord, TrivalentTree, F2Cayley };

struct GraphPlan {
  GraphKind kind = GraphKind::Line;

  // Shell size at distance k: 1 at k = 0; then line/chord 2, trivalent tree
  // 3*2^(k-1), F2 Cayley 4*3^(k-1). Returned as double (counts overflow
  // 64-bit integers near k = 40 for F2).
  double count(long k) const;

  // Smallest growth divisor making the block-volume series converge for
  // n >= 2: line k+1, trivalent 2^k, F2 3^k.
  std::function<double(double)> default_divisor() const;
};

// Per-generation length scaling. Both kinds evaluate to a length multiplier
// (blocks shrink): lambda schedules multiply lengths by 1/lambda(k); cyclic
// cover schedules multiply by c_k.
class ScaleSchedule {
 public:
  static ScaleSchedule lambda(std::function<double(double)> divisor,
                              std::string name = "lambda");

  // eps = 1 - m^(-1/d); c_k = (1-eps)^(k+1) for k < d, 1/(k-d+m+1) for
  // k >= d. The side condition (m-1)/m < 1-eps fails whenever m >= 2^d; it
  // is reported in the result (and thrown only under strict).
  static ScaleSchedule cyclic_cover(int d, int m, bool strict = false);

  double length_multiplier(double k) const;
  double divisor(double k) const { return 1.0 / length_multiplier(k); }

  const std::string& name() const { return name_; }
  bool side_condition_holds() const { return side_condition_; }
  std::string side_condition_note() const { return side_note_; }

 private:
  ScaleSchedule() = default;
  std::function<double(double)> multiplier_;
  std::string name_;
  bool side_condition_ = true;
  std::string side_note_;
};

struct Port {
  std::string label;
  double base_length = 1.0;  // basepoint-to-knot distance before truncation
  ProfileFunction profile;
};

struct BlockTemplate {
  double interior_volume = 1.0;
  double interior_diameter = 1.0;
  std::vector<Port> ports;

  static BlockTemplate exponential_block(int n_ports);
};

// T_u = T_v + ln(scale_u / scale_v): equal boundary cross-sections for
// exponential tails, where the cross-section coefficient is
// scale * 2 f(T). Scales are length multipliers.
double matching_truncation(double scale_u, double scale_v, double T_v);

// Same, but validates that T_u lands inside profile_u's final exponential
// segment; TailError otherwise.
double matching_truncation(double scale_u, double scale_v, double T_v,
                           const ProfileFunction& profile_u);

double boundary_coefficient(const ProfileFunction& f, double T, double scale);

struct GluedEdge {
  long generation = 0;  // edge from shell k to k+1
  double coeff_inner = 0.0;
  double coeff_outer = 0.0;
};

struct ThreePortLengths {
  long generation = 0;
  double lA = 0.0, lB = 0.0, lC = 0.0;
  bool admissible() const {
    return lA + lB < lC && lC < 2.0 * (lA + lB);
  }
};

struct TruncationPlan {
  std::vector<double> scale;  // length multiplier per generation
  std::vector<double> T;      // truncation depth per generation
  std::vector<double> port_length;  // base_length + T, per generation
  std::vector<GluedEdge> edges;
  std::vector<ThreePortLengths> chords;  // chord graphs only

  double max_matching_residual() const;  // relative, over edges
  bool chord_constraints_ok() const;
};

// Walks generations 0..generations-1, assigning T by the matching equation
// from T0 at the base vertex; chord graphs additionally solve the chord
// port via l(C) = 1.5 (l(A) + l(B)).
TruncationPlan assemble_plan(const GraphPlan& graph,
                             const ScaleSchedule& schedule,
                             const BlockTemplate& block, double T0,
                             int generations);

// Sum over shells of count(k) * multiplier(k)^n * block_volume, classified
// by the series engine (never by raw partial sums).
SeriesReport total_volume(const GraphPlan& graph,
                          const ScaleSchedule& schedule, double block_volume,
                          int n);

struct CompletenessVerdict {
  bool complete = false;
  std::string criterion;
  SeriesReport series;  // the diameter series along a ray
};

// Complete iff per-block diameter lower bounds along a ray sum to infinity.
// enforce_unit_diameter applies the rule that every block keeps diameter
// >= 1 regardless of scaling.
CompletenessVerdict completeness_series(const ScaleSchedule& schedule,
                                        double base_diameter = 1.0,
                                        bool enforce_unit_diameter = false);

struct DisplacementReport {
  double at2 = 0.0;               // e^2/2
  bool increasing_on_grid = false;  // FD check of d/drho (e^rho/rho) > 0
  bool unbounded_witness = false;   // some rho <= 20 with D > 1e6
  double rho_exceeding_1e6 = 0.0;
};

// Grid check on [2, 100] that D(rho) = e^rho / rho is increasing and
// unbounded.
DisplacementReport displacement_growth_check();

// 1-D radial model of a chain assembly: ordered segments outward from the
// basepoint. Each segment carries a template profile entered at t_start and
// traversed under a length multiplier, so a template interval of width w
// occupies scale*w of radius. |K| along a segment comes from the warped
// closed forms divided by scale^2 (times kappa_factor for smoothing-patch
// inflation), unless kappa_clamp > 0 pins it (flat-cross-section segments
// with f = e^-t have |K| identically 1 while keeping volume density
// f^(n-1)). Volume density: vol_coeff * (scale*f)^(n-1) per unit radius.
class ChainModel {
 public:
  struct Segment {
    double length = 1.0;  // radial extent in the assembled metric
    double scale = 1.0;   // length multiplier
    ProfileFunction profile;
    double t_start = 0.0;
    double kappa_clamp = 0.0;   // > 0: |K| reported as exactly this
    double kappa_factor = 1.0;  // multiplies computed |K|
    double vol_coeff = 1.0;
    int dim = 2;  // n in the volume density exponent n-1
  };

  explicit ChainModel(std::vector<Segment> segs);

  double horizon() const { return horizon_; }

  // b_p(r): running max of |K| over radius <= r. HorizonError past the end.
  double max_abs_curvature(double r) const;

  // Vol(B_p(r) \ B_p(r - width)).
  double annulus_volume(double r, double width = 1.0) const;

  // b_p(r)^n * Vol(A_p(r, width))^2.
  double diagnostic(double r, int n, double width = 1.0) const;

  // Metric scaled by s^2: lengths and widths scale by s, curvatures by
  // 1/s^2, so diagnostic(s*r, n, s*width) is unchanged.
  ChainModel homothety(double s) const;

  const std::vector<Segment>& segments() const { return segs_; }

 private:
  std::vector<Segment> segs_;
  std::vector<double> offsets_;
  double horizon_ = 0.0;
};

struct CgvdRow {
  double r = 0.0;
  double b = 0.0;
  double annulus_vol = 0.0;
  double product = 0.0;
};

std::vector<CgvdRow> cgvd_diagnostic(const ChainModel& model,
                                     const std::vector<double>& r_grid, int n,
                                     double width = 1.0);

// The standard finite-volume cusp as a chain model: |K| identically 1,
// volume density e^-t, horizon-limited.
ChainModel cosh_cusp_chain(double horizon, int dim = 2);

struct PlannerParams {
  int generations = 8;
  double T_min = 1.0;
  double T_cap = 30.0;
  double kappa_inflation = 1.0;  // smoothing-patch factor from smooth_kink
  double block_diameter = 1.0;   // radial footprint of a block interior
  std::function<double(double)> divisor;  // lambda(k); default k+1
  double grid_step = 0.25;
  double t_step = 0.125;  // granularity of the greedy T search
};

struct GrowthPlan {
  std::vector<double> T;
  std::vector<double> scale_divisor;
  std::vector<double> neck_radius;  // cumulative radius at each neck
  ChainModel chain;
  std::vector<std::array<double, 2>> verification;  // (r, b_p(r)) samples
};

// Greedy outward walk: at cumulative radius R pick T maximal in
// [T_min, T_cap] with divisor^2 * (e^(2T) + 1) * kappa_inflation <
// budget(R + T), then verify b_p(r) < budget(r) on the radial grid.
// BudgetInfeasible (with the violating radius) when no T qualifies or the
// verification fails.
GrowthPlan growth_truncation_planner(
    const std::function<double(double)>& budget, const PlannerParams& p = {});

// mu_b = mu_1 / b; ConfigError when mu1 is unset (the constant must come
// from configuration, e.g. the CUSPFORGE_MU1 environment variable).
double margulis_threshold(double b, std::optional<double> mu1);

std::optional<double> margulis_mu1_from_env();

}  // namespace cuspforge
