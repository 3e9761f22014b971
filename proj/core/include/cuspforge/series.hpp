#pragma once

#include <functional>
#include <string>

namespace cuspforge {

enum class SeriesVerdict { Convergent, Divergent, Inconclusive };

struct SeriesReport {
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  double value = 0.0;       // sum estimate when convergent
  double tail_bound = 0.0;  // rigorous bound on the neglected tail
  std::string rule;         // which test decided
  long terms_used = 0;
};

// Classify sum_{k>=k0} term(k) for eventually positive, eventually monotone
// terms. Decision ladder: exact-zero tail; non-decreasing terms (constant
// minorant, divergent); ratio test with a certified q < 1 (geometric tail
// bound); power-law fit p from s(2k)/s(k) with p-test verdict either way
// (value via a long head plus an integral tail correction when convergent;
// harmonic minorant when divergent). Raw partial sums never decide; after
// max_terms with no certificate the verdict is Inconclusive.
SeriesReport classify_series(const std::function<double(double)>& term,
                             double k0, long max_terms = 1000000);

}  // namespace cuspforge
