#pragma once

#include <map>
#include <string>
#include <vector>

#include "subshift/scan.hpp"
#include "subshift/word.hpp"

namespace subshift {

// Brute-force verification layer.  Works only from the substitution itself
// and from externally supplied measure values, never from the spectral
// machinery, so that agreement between the two is evidence and not
// circularity.

struct FrequencyEstimate {
  Word w;
  int seed_letter = 0;
  uint64_t iterations = 0;   // N
  int64_t count = 0;         // |s^N(a)|_w
  int64_t positions = 0;     // |s^N(a)| - |w| + 1
  double estimate = 0.0;     // count / positions
};

// Sliding-window frequency of w in s^N(a).  For primitive s this converges
// to the unique ergodic cylinder measure; for reducible s the seed letter
// selects which measure is targeted (a letter of the dominating stratum for
// the full-support measure, a bottom-stratum letter for the bottom one).
FrequencyEstimate letter_frequency(const Substitution& s, int seed_letter, const Word& w,
                                   uint64_t n, int64_t budget = kDefaultBudget);

struct ConsistencyReport {
  double max_violation = 0.0;
  double probability_defect = 0.0;  // max_i |sum_a mu_i([a]) - 1|
  bool ok = false;
  std::vector<std::string> failures;
};

// Kolmogorov consistency of externally supplied cylinder tables: for every
// measure and every |w| <= max_len-1, sum_x mu([wx]) = mu([w]) = sum_x
// mu([xw]); letter masses sum to 1.
// `tables` maps words (|w| <= max_len) to one value per measure.
ConsistencyReport consistency_suite(const Substitution& s,
                                    const std::map<Word, std::vector<double>>& tables,
                                    int max_len, double tol);

struct OracleRow {
  Word w;
  double formula = 0.0;
  double estimate = 0.0;
  double delta = 0.0;
  uint64_t iterations = 0;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  double max_delta = 0.0;
  bool ok = false;
};

// Compare supplied formula values with frequency estimates seeded at
// `seed_letter`, at iteration depth n.
OracleReport oracle_vs_formula(const Substitution& s, int seed_letter,
                               const std::vector<std::pair<Word, double>>& formula_values,
                               uint64_t n, double tol, int64_t budget = kDefaultBudget);

}  // namespace subshift
