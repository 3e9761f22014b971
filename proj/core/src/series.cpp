#include "cuspforge/series.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cuspforge/errors.hpp"
#include "cuspforge/numeric.hpp"
#include "cuspforge/quadrature.hpp"

namespace cuspforge {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SeriesReport classify_series(const std::function<double(double)>& term,
                             double k0, long max_terms) {
  // Work on the index lattice j = 0, 1, 2, ... with u(j) = term(k0 + j).
  auto u = [&term, k0](double j) { return term(k0 + j); };

  SeriesReport rep;

  // Octave probes u(2^j).
  int top = 0;
  while ((2L << top) <= max_terms && top < 40) ++top;
  std::vector<double> probe(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) probe[static_cast<std::size_t>(j)] = u(double(1L << j));
  double last = probe[static_cast<std::size_t>(top)];
  double prev = probe[static_cast<std::size_t>(top) - 1];
  double prev2 = probe[static_cast<std::size_t>(top) - 2];

  if (std::isnan(last) || std::isnan(prev) || last < 0.0 || prev < 0.0) {
    rep.verdict = SeriesVerdict::Inconclusive;
    rep.rule = "terms are not eventually positive and finite";
    rep.terms_used = 1L << top;
    return rep;
  }

  // Positive terms that blow past the floating range cannot tend to zero.
  if (std::isinf(last) && prev > 0.0 && prev2 > 0.0) {
    rep.verdict = SeriesVerdict::Divergent;
    rep.rule = "terms overflow the floating range (unbounded positive tail)";
    rep.terms_used = 1L << top;
    return rep;
  }

  // Finite support: the far tail is identically zero.
  if (last == 0.0 && prev == 0.0 && prev2 == 0.0) {
    bool all_zero = true;
    long far = 1L << (top - 2);
    for (long j = far; j < far + 256 && all_zero; ++j) all_zero = u(double(j)) == 0.0;
    if (all_zero) {
      KahanSum head;
      for (long j = 0; j < far; ++j) head.add(u(double(j)));
      rep.verdict = SeriesVerdict::Convergent;
      rep.value = head.value();
      rep.tail_bound = 0.0;
      rep.rule = "finite support";
      rep.terms_used = far + 256;
      return rep;
    }
  }

  // Terms that do not tend to zero: constant minorant.
  if (last > 0.0 && last >= 0.999 * prev && prev >= 0.999 * prev2) {
    rep.verdict = SeriesVerdict::Divergent;
    rep.rule = "terms do not tend to zero (constant minorant " + fmt(0.999 * prev) + ")";
    rep.terms_used = 1L << top;
    return rep;
  }

  // Geometric ratio, certified by stability across octaves.
  {
    bool usable = true;
    double qmax = 0.0, qfirst = -1.0, qlast = -1.0;
    for (long base : {64L, 256L, 1024L}) {
      double qwin = 0.0;
      for (long j = base; j < base + 16; ++j) {
        double a = u(double(j)), b = u(double(j + 1));
        if (!(a > 0.0) || b < 0.0) {
          usable = false;
          break;
        }
        qwin = std::max(qwin, b / a);
      }
      if (!usable) break;
      if (qfirst < 0.0) qfirst = qwin;
      qlast = qwin;
      qmax = std::max(qmax, qwin);
    }
    if (usable && qmax <= 0.995 && std::fabs(qlast - qfirst) <= 0.01) {
      double q = std::min(0.999, qmax + 0.001);
      KahanSum head;
      long j = 0;
      double bound = kInf;
      for (; j < max_terms; ++j) {
        double v = u(double(j));
        head.add(v);
        bound = std::fabs(u(double(j + 1))) / (1.0 - q);
        if (bound <= 1e-12 * std::max(1.0, std::fabs(head.value()))) break;
      }
      rep.verdict = SeriesVerdict::Convergent;
      rep.value = head.value();
      rep.tail_bound = bound;
      rep.rule = "ratio test (q <= " + fmt(q) + ")";
      rep.terms_used = j + 1;
      return rep;
    }
  }

  // Power-law fit from doubling ratios.
  {
    double p1 = -std::log2(u(double(1L << (top - 1))) / u(double(1L << (top - 2))));
    double p2 = -std::log2(u(double(1L << top)) / u(double(1L << (top - 1))));
    bool stable = std::isfinite(p1) && std::isfinite(p2) &&
                  std::fabs(p2 - p1) <= 0.02;

    if (stable && p2 >= 1.10) {
      // Head sum plus a midpoint integral for the remaining tail. The tail
      // ladder certifies clean power decay; log-corrected integrands decay
      // only polynomially after the exponential substitution and fail it,
      // in which case the verdict falls through to the remaining stages.
      bool tail_ok = true;
      QuadratureResult tail;
      long J = std::min<long>(20000, max_terms);
      double cut = double(J) - 0.5;  // integrate over j in [J - 1/2, inf)
      try {
        tail =
            integrate_to_infinity([&u](double j) { return u(j); }, cut, 1e-13);
      } catch (const QuadratureFailure&) {
        tail_ok = false;
      }
      if (tail_ok) {
        KahanSum head;
        for (long j = 0; j < J; ++j) head.add(u(double(j)));
        // Midpoint-rule correction: sum_{j >= J} u(j) ~ integral + u'(cut)/24.
        double corr = (u(double(J)) - u(double(J - 1))) / 24.0;
        rep.verdict = SeriesVerdict::Convergent;
        rep.value = head.value() + tail.value + corr;
        rep.tail_bound = std::fabs(corr) * 1e-3 + tail.error_estimate +
                         1e-15 * std::fabs(rep.value);
        rep.rule = "p-test (p ~ " + fmt(p2) + ", integral tail)";
        rep.terms_used = J;
        return rep;
      }
    }

    // Harmonic minorant: j * u(j) essentially non-decaying across the top
    // octaves. The 3% slack per octave rejects any power decay faster than
    // k^-1.045; slower contamination stays in the documented gray zone.
    double m1 = double(1L << (top - 2)) * prev2;
    double m2 = double(1L << (top - 1)) * prev;
    double m3 = double(1L << top) * last;
    if (m3 > 0.0 && m2 > 0.0 && m3 >= 0.97 * m2 && m2 >= 0.97 * m1) {
      rep.verdict = SeriesVerdict::Divergent;
      rep.rule = "harmonic minorant (k*term >= " + fmt(0.97 * m2) + ")";
      rep.terms_used = 1L << top;
      return rep;
    }
  }

  rep.verdict = SeriesVerdict::Inconclusive;
  rep.rule = "no comparison certificate within the term budget";
  rep.terms_used = max_terms;
  return rep;
}

}  // namespace cuspforge
