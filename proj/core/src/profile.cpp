#include "cuspforge/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cuspforge/errors.hpp"

namespace cuspforge {

namespace {

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_num(const std::string& tok) {
  if (tok == "inf") return kInf;
  if (tok == "-inf") return -kInf;
  return std::stod(tok);
}

// Quintic through a full 2-jet at each end of [0, w], as coefficients of
// P + Q x + (R/2) x^2 + D x^3 + E x^4 + F x^5.
std::array<double, 6> hermite_quintic(double P, double Q, double R, double V0,
                                      double V1, double V2, double w) {
  double S1 = V0 - (P + Q * w + 0.5 * R * w * w);
  double S2 = (V1 - (Q + R * w)) * w;
  double S3 = (V2 - R) * w * w;
  double d = 10.0 * S1 - 4.0 * S2 + 0.5 * S3;
  double e = 7.0 * S2 - 15.0 * S1 - S3;
  double f = 0.5 * S3 + 6.0 * S1 - 3.0 * S2;
  double w3 = w * w * w;
  return {P, Q, 0.5 * R, d / w3, e / (w3 * w), f / (w3 * w * w)};
}

Jet2 quintic_jet(const std::array<double, 6>& a, double x) {
  double f = ((((a[5] * x + a[4]) * x + a[3]) * x + a[2]) * x + a[1]) * x +
             a[0];
  double df =
      (((5.0 * a[5] * x + 4.0 * a[4]) * x + 3.0 * a[3]) * x + 2.0 * a[2]) * x +
      a[1];
  double ddf = ((20.0 * a[5] * x + 12.0 * a[4]) * x + 6.0 * a[3]) * x +
               2.0 * a[2];
  return {f, df, ddf};
}

// Exact minimum of the (cubic) second derivative of a quintic over [0, w].
double quintic_ddf_min(const std::array<double, 6>& a, double w) {
  auto ddf = [&](double x) {
    return ((20.0 * a[5] * x + 12.0 * a[4]) * x + 6.0 * a[3]) * x +
           2.0 * a[2];
  };
  double best = std::min(ddf(0.0), ddf(w));
  // d3f = 60 a5 x^2 + 24 a4 x + 6 a3
  double A = 60.0 * a[5], B = 24.0 * a[4], C = 6.0 * a[3];
  if (std::fabs(A) < 1e-300) {
    if (std::fabs(B) > 1e-300) {
      double x = -C / B;
      if (x > 0.0 && x < w) best = std::min(best, ddf(x));
    }
    return best;
  }
  double disc = B * B - 4.0 * A * C;
  if (disc >= 0.0) {
    double sq = std::sqrt(disc);
    for (double x : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)})
      if (x > 0.0 && x < w) best = std::min(best, ddf(x));
  }
  return best;
}

// Minimum value of a quintic over [0, w]: grid scan plus bisection on the
// derivative sign changes.
double quintic_value_min(const std::array<double, 6>& a, double w) {
  auto val = [&](double x) { return quintic_jet(a, x).f; };
  auto der = [&](double x) { return quintic_jet(a, x).df; };
  int n = 4096;
  double best = std::min(val(0.0), val(w));
  double prev_x = 0.0, prev_d = der(0.0);
  for (int i = 1; i <= n; ++i) {
    double x = w * i / n;
    double d = der(x);
    if ((prev_d < 0.0 && d > 0.0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (der(mid) < 0.0 ? lo : hi) = mid;
      }
      best = std::min(best, val(0.5 * (lo + hi)));
    }
    best = std::min(best, val(x));
    prev_x = x;
    prev_d = d;
  }
  return best;
}

}  // namespace

Jet2 Segment::jet(double t) const {
  switch (form) {
    case SegmentForm::Cosh: {
      double u = k * (t - t0);
      double ch = std::cosh(u), sh = std::sinh(u);
      return {c * ch, c * k * sh, c * k * k * ch};
    }
    case SegmentForm::Exp: {
      double e = c * std::exp(-k * (t - t0));
      return {e, -k * e, k * k * e};
    }
    case SegmentForm::Power: {
      double x = t - t0;
      double p = c * std::pow(x, -s);
      return {p, -s * p / x, s * (s + 1.0) * p / (x * x)};
    }
    case SegmentForm::Quintic:
      return quintic_jet(a, t - t0);
    case SegmentForm::Constant:
      return {c, 0.0, 0.0};
  }
  return {};
}

Segment Segment::cosh_seg(double lo, double hi, double c, double k,
                          double t0) {
  Segment s;
  s.lo = lo, s.hi = hi, s.form = SegmentForm::Cosh;
  s.c = c, s.k = k, s.t0 = t0;
  return s;
}

Segment Segment::exp_seg(double lo, double hi, double c, double k, double t0) {
  Segment s;
  s.lo = lo, s.hi = hi, s.form = SegmentForm::Exp;
  s.c = c, s.k = k, s.t0 = t0;
  return s;
}

Segment Segment::power_seg(double lo, double hi, double c, double ss,
                           double t0) {
  Segment s;
  s.lo = lo, s.hi = hi, s.form = SegmentForm::Power;
  s.c = c, s.s = ss, s.t0 = t0;
  return s;
}

Segment Segment::quintic_seg(double lo, double hi,
                             const std::array<double, 6>& a, double t0) {
  Segment s;
  s.lo = lo, s.hi = hi, s.form = SegmentForm::Quintic;
  s.a = a, s.t0 = t0;
  return s;
}

Segment Segment::constant_seg(double lo, double hi, double c) {
  Segment s;
  s.lo = lo, s.hi = hi, s.form = SegmentForm::Constant;
  s.c = c;
  return s;
}

ProfileFunction::ProfileFunction(std::vector<Segment> segs)
    : segs_(std::move(segs)) {
  if (segs_.empty()) throw DomainError("profile needs at least one segment");
}

double ProfileFunction::lo() const { return segs_.front().lo; }
double ProfileFunction::hi() const { return segs_.back().hi; }
bool ProfileFunction::unbounded() const { return std::isinf(hi()); }

const Segment& ProfileFunction::segment_at(double t) const {
  if (segs_.empty()) throw DomainError("empty profile");
  if (t < lo() || t > hi()) {
    std::ostringstream os;
    os << "profile evaluated at t=" << t << " outside [" << lo() << ", "
       << hi() << "]";
    throw DomainError(os.str());
  }
  auto it = std::upper_bound(
      segs_.begin(), segs_.end(), t,
      [](double v, const Segment& s) { return v < s.hi; });
  if (it == segs_.end()) --it;  // t == hi(): close the top end
  return *it;
}

Jet2 ProfileFunction::jet(double t) const { return segment_at(t).jet(t); }

std::vector<double> ProfileFunction::knots() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < segs_.size(); ++i) out.push_back(segs_[i].lo);
  return out;
}

void ProfileFunction::validate() const {
  if (segs_.empty()) throw DomainError("empty profile");
  for (const Segment& s : segs_)
    if (!(s.lo < s.hi))
      throw DomainError("segment with empty interval");
  for (std::size_t i = 1; i < segs_.size(); ++i) {
    double gap = segs_[i].lo - segs_[i - 1].hi;
    double scale = std::max(1.0, std::fabs(segs_[i].lo));
    if (std::fabs(gap) > 1e-9 * scale)
      throw DomainError("profile segments leave a gap");
    Jet2 l = segs_[i - 1].jet(segs_[i].lo);
    Jet2 r = segs_[i].jet(segs_[i].lo);
    auto close = [](double x, double y) {
      return std::fabs(x - y) <=
             1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
    };
    if (!close(l.f, r.f) || !close(l.df, r.df) || !close(l.ddf, r.ddf)) {
      std::ostringstream os;
      os << "profile is not C^2 at the knot t=" << segs_[i].lo;
      throw ToleranceFailure(os.str());
    }
  }
  for (const Segment& s : segs_) {
    switch (s.form) {
      case SegmentForm::Cosh:
      case SegmentForm::Exp:
        if (s.c <= 0.0) throw ToleranceFailure("nonpositive segment");
        break;
      case SegmentForm::Constant:
        if (s.c <= 0.0) throw ToleranceFailure("nonpositive segment");
        break;
      case SegmentForm::Power:
        if (s.c <= 0.0) throw ToleranceFailure("nonpositive segment");
        if (s.lo <= s.t0)
          throw DomainError("power segment reaches its pole");
        break;
      case SegmentForm::Quintic: {
        if (quintic_value_min(s.a, s.hi - s.lo) <= 0.0)
          throw ToleranceFailure("quintic segment dips to zero");
        break;
      }
    }
  }
}

double ProfileFunction::min_second_derivative() const {
  double best = kInf;
  for (const Segment& s : segs_) {
    double cap = std::isinf(s.hi) ? s.lo + 64.0 : s.hi;
    switch (s.form) {
      case SegmentForm::Cosh: {
        // c k^2 cosh: minimized at the point nearest t0.
        double t = std::clamp(s.t0, s.lo, cap);
        best = std::min({best, s.jet(s.lo).ddf, s.jet(t).ddf});
        if (!std::isinf(s.hi)) best = std::min(best, s.jet(s.hi).ddf);
        break;
      }
      case SegmentForm::Exp:
      case SegmentForm::Power:
        // monotone in t; decaying tails have infimum 0 at +inf.
        best = std::min(best, s.jet(s.lo).ddf);
        if (std::isinf(s.hi))
          best = std::min(best, 0.0);
        else
          best = std::min(best, s.jet(s.hi).ddf);
        break;
      case SegmentForm::Quintic:
        best = std::min(best, quintic_ddf_min(s.a, s.hi - s.lo));
        break;
      case SegmentForm::Constant:
        best = std::min(best, 0.0);
        break;
    }
  }
  return best;
}

Curve1D ProfileFunction::as_curve() const {
  ProfileFunction copy = *this;
  return Curve1D([copy](double t) { return copy.jet(t); },
                 Interval{lo(), hi()});
}

std::string ProfileFunction::to_text() const {
  std::ostringstream os;
  os << "profile v1 " << segs_.size() << "\n";
  for (const Segment& s : segs_) {
    switch (s.form) {
      case SegmentForm::Cosh:
        os << "cosh " << fmt17(s.lo) << " " << fmt17(s.hi) << " "
           << fmt17(s.c) << " " << fmt17(s.k) << " " << fmt17(s.t0) << "\n";
        break;
      case SegmentForm::Exp:
        os << "exp " << fmt17(s.lo) << " " << fmt17(s.hi) << " " << fmt17(s.c)
           << " " << fmt17(s.k) << " " << fmt17(s.t0) << "\n";
        break;
      case SegmentForm::Power:
        os << "power " << fmt17(s.lo) << " " << fmt17(s.hi) << " "
           << fmt17(s.c) << " " << fmt17(s.s) << " " << fmt17(s.t0) << "\n";
        break;
      case SegmentForm::Quintic: {
        os << "quintic " << fmt17(s.lo) << " " << fmt17(s.hi) << " "
           << fmt17(s.t0);
        for (double ai : s.a) os << " " << fmt17(ai);
        os << "\n";
        break;
      }
      case SegmentForm::Constant:
        os << "const " << fmt17(s.lo) << " " << fmt17(s.hi) << " "
           << fmt17(s.c) << "\n";
        break;
    }
  }
  return os.str();
}

ProfileFunction ProfileFunction::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string word;
  std::size_t n = 0;
  is >> word;
  if (word != "profile") throw ConfigError("not a profile record");
  is >> word >> n;
  if (word != "v1") throw ConfigError("unknown profile version " + word);
  std::vector<Segment> segs;
  auto num = [&is] {
    std::string tok;
    if (!(is >> tok)) throw ConfigError("truncated profile record");
    return parse_num(tok);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!(is >> word)) throw ConfigError("truncated profile record");
    if (word == "cosh") {
      double lo = num(), hi = num(), c = num(), k = num(), t0 = num();
      segs.push_back(Segment::cosh_seg(lo, hi, c, k, t0));
    } else if (word == "exp") {
      double lo = num(), hi = num(), c = num(), k = num(), t0 = num();
      segs.push_back(Segment::exp_seg(lo, hi, c, k, t0));
    } else if (word == "power") {
      double lo = num(), hi = num(), c = num(), s = num(), t0 = num();
      segs.push_back(Segment::power_seg(lo, hi, c, s, t0));
    } else if (word == "quintic") {
      double lo = num(), hi = num(), t0 = num();
      std::array<double, 6> a{};
      for (double& ai : a) ai = num();
      segs.push_back(Segment::quintic_seg(lo, hi, a, t0));
    } else if (word == "const") {
      double lo = num(), hi = num(), c = num();
      segs.push_back(Segment::constant_seg(lo, hi, c));
    } else {
      throw ConfigError("unknown segment form '" + word + "'");
    }
  }
  return ProfileFunction(std::move(segs));
}

ProfileFunction ProfileFunction::cosh_profile(double lo, double hi, double c,
                                              double k, double t0) {
  return ProfileFunction({Segment::cosh_seg(lo, hi, c, k, t0)});
}

ProfileFunction ProfileFunction::exponential(double lo, double hi, double c,
                                             double k, double t0) {
  return ProfileFunction({Segment::exp_seg(lo, hi, c, k, t0)});
}

ProfileFunction ProfileFunction::constant(double lo, double hi, double c) {
  return ProfileFunction({Segment::constant_seg(lo, hi, c)});
}

namespace {

// Tail 2-jet (value, d1, d2) at the transition knot for decay rate v > 0.
Jet2 tail_jet(DecayMode mode, double v) {
  if (mode == DecayMode::Exponential) return {v, -v, v};
  // power tail c (t-t0)^-4 with t-t0 = 4 at the knot: d1 = -v, d2 = 1.25 v.
  return {v, -v, 1.25 * v};
}

Segment tail_segment(DecayMode mode, double v, double knot) {
  if (mode == DecayMode::Exponential)
    return Segment::exp_seg(knot, kInf, v * std::exp(knot), 1.0, 0.0);
  return Segment::power_seg(knot, kInf, 256.0 * v, 4.0, knot - 4.0);
}

// Best single quintic [a, a+w] from the cosh jet into the tail jet over a
// scan of tail values; returns the achieved min f'' and the best v.
struct BlendScan {
  double margin = -kInf;
  double v = 0.0;
  std::array<double, 6> coeff{};
};

BlendScan scan_tail_value(double P, double Q, double R, DecayMode mode,
                          double w, double v_hi, bool convex) {
  BlendScan best;
  int steps = 800;
  for (int i = 1; i <= steps; ++i) {
    double v = v_hi * i / steps;
    Jet2 tj = tail_jet(mode, v);
    auto co = hermite_quintic(P, Q, R, tj.f, tj.df, tj.ddf, w);
    double margin = convex ? quintic_ddf_min(co, w) : quintic_value_min(co, w);
    if (margin > best.margin) {
      best.margin = margin;
      best.v = v;
      best.coeff = co;
    }
  }
  return best;
}

}  // namespace

ProfileFunction make_decay_profile(double a, DecayMode mode) {
  double P = std::cosh(a), Q = std::sinh(a), R = std::cosh(a);
  std::vector<Segment> segs;

  if (a < 0.0) {
    // Convex construction. First try: one quintic over [a, a+1].
    BlendScan direct =
        scan_tail_value(P, Q, R, mode, 1.0, 0.999 * P, /*convex=*/true);
    if (direct.margin >= 0.0) {
      segs.push_back(Segment::quintic_seg(a, a + 1.0, direct.coeff, a));
      segs.push_back(tail_segment(mode, direct.v, a + 1.0));
      return ProfileFunction(std::move(segs));
    }

    // Staged: ramp f'' linearly from R to 0 while f' rises to -W1, coast at
    // f'' = 0 down to V2, then blend into the tail.
    double W1 = 0.5 * std::fabs(Q);
    double delta = 2.0 * W1 / R;
    std::array<double, 6> ramp = {P, Q, 0.5 * R, -R / (6.0 * delta), 0.0, 0.0};
    segs.push_back(Segment::quintic_seg(a, a + delta, ramp, a));
    double V1 = P + Q * delta + R * delta * delta / 3.0;
    double V2 = std::min(V1, 2.0 * W1);
    double pos = a + delta;
    if (V1 > V2) {
      double w2 = (V1 - V2) / W1;
      std::array<double, 6> line = {V1, -W1, 0.0, 0.0, 0.0, 0.0};
      segs.push_back(Segment::quintic_seg(pos, pos + w2, line, pos));
      pos += w2;
    }
    double v_hi = 0.999 * std::min(W1, V2);
    for (double w3 : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0}) {
      BlendScan blend;
      int steps = 400;
      for (int i = 1; i <= steps; ++i) {
        double v = v_hi * i / steps;
        Jet2 tj = tail_jet(mode, v);
        auto co = hermite_quintic(V2, -W1, 0.0, tj.f, tj.df, tj.ddf, w3);
        double margin = quintic_ddf_min(co, w3);
        if (margin > blend.margin) {
          blend.margin = margin;
          blend.v = v;
          blend.coeff = co;
        }
      }
      if (blend.margin >= 0.0) {
        segs.push_back(Segment::quintic_seg(pos, pos + w3, blend.coeff, pos));
        segs.push_back(tail_segment(mode, blend.v, pos + w3));
        return ProfileFunction(std::move(segs));
      }
    }
    throw PatchFailure("no convex decay blend found");
  }

  // a >= 0: f'(a) >= 0 forbids a globally convex decaying profile; keep the
  // jet, positivity, and the decay tail.
  BlendScan direct =
      scan_tail_value(P, Q, R, mode, 1.0, 0.999 * P, /*convex=*/false);
  if (direct.margin <= 0.0)
    throw PatchFailure("no positive decay blend found");
  segs.push_back(Segment::quintic_seg(a, a + 1.0, direct.coeff, a));
  segs.push_back(tail_segment(mode, direct.v, a + 1.0));
  return ProfileFunction(std::move(segs));
}

ProfileFunction smooth_kink(double A, double a) {
  if (A < 2.0) throw DomainError("kink smoothing requires A >= 2");
  if (a <= 0.0) throw DomainError("kink smoothing requires a > 0");
  // Branches e^{-A(t+2a)} (t <= 0 side) and e^{2A(t-a)} (t >= 0 side) meet
  // at t = 0 with value e^{-2Aa}.
  double w = 1.0 / A;
  double w_min = 1e-6 / A;
  while (w >= w_min) {
    double Lv = std::exp(-A * (-w + 2.0 * a));
    double Rv = std::exp(2.0 * A * (w - a));
    auto co = hermite_quintic(Lv, -A * Lv, A * A * Lv, Rv, 2.0 * A * Rv,
                              4.0 * A * A * Rv, 2.0 * w);
    bool ok = true;
    int n = 10000;
    for (int i = 0; i <= n && ok; ++i) {
      double x = 2.0 * w * i / n;
      Jet2 j = quintic_jet(co, x);
      ok = j.f > 0.0 && j.ddf / j.f > 1e-10;
    }
    if (ok) {
      std::vector<Segment> segs;
      segs.push_back(
          Segment::exp_seg(-kInf, -w, std::exp(-2.0 * A * a), A, 0.0));
      segs.push_back(Segment::quintic_seg(-w, w, co, -w));
      segs.push_back(
          Segment::exp_seg(w, kInf, std::exp(-2.0 * A * a), -2.0 * A, 0.0));
      return ProfileFunction(std::move(segs));
    }
    w *= 0.5;
  }
  throw PatchFailure("no smoothing window satisfies h''/h > 1e-10");
}

double kink_curvature_inflation(double A, double a) {
  ProfileFunction h = smooth_kink(A, a);
  const Segment& patch = h.segments()[1];
  auto kink = [&](double t) {
    return t <= 0.0 ? std::exp(-A * (t + 2.0 * a))
                    : std::exp(2.0 * A * (t - a));
  };
  auto kink_d = [&](double t) {
    return t <= 0.0 ? -A * kink(t) : 2.0 * A * kink(t);
  };
  double worst = 1.0;
  int n = 4096;
  for (int i = 0; i <= n; ++i) {
    double t = patch.lo + (patch.hi - patch.lo) * i / n;
    Jet2 j = h.jet(t);
    double smoothed = (1.0 + j.df * j.df) / (j.f * j.f);
    double f = kink(t), fd = kink_d(t);
    double sharp = (1.0 + fd * fd) / (f * f);
    worst = std::max(worst, smoothed / sharp);
  }
  return worst;
}

ProfileFunction scale_profile(const ProfileFunction& f, double A,
                              double shift) {
  if (A <= 0.0) throw DomainError("scale factor must be positive");
  std::vector<Segment> out;
  for (Segment s : f.segments()) {
    double lo = (s.lo - shift) / A;
    double hi = std::isinf(s.hi) ? kInf : (s.hi - shift) / A;
    switch (s.form) {
      case SegmentForm::Cosh:
      case SegmentForm::Exp:
        s.c /= A;
        s.k *= A;
        s.t0 = (s.t0 - shift) / A;
        break;
      case SegmentForm::Power:
        s.c *= std::pow(A, -s.s - 1.0);
        s.t0 = (s.t0 - shift) / A;
        break;
      case SegmentForm::Quintic: {
        double pw = 1.0 / A;  // A^{i-1}
        for (double& ai : s.a) {
          ai *= pw;
          pw *= A;
        }
        s.t0 = (s.t0 - shift) / A;
        break;
      }
      case SegmentForm::Constant:
        s.c /= A;
        break;
    }
    s.lo = lo;
    s.hi = hi;
    out.push_back(s);
  }
  return ProfileFunction(std::move(out));
}

}  // namespace cuspforge
