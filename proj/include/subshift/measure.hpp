#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subshift/eigenpair.hpp"
#include "subshift/scan.hpp"

namespace subshift {

// An ergodic invariant probability measure of the subshift of an everywhere
// growing substitution, carried by a distinguished eigenvector: the letter
// vector holds the cylinder measures of length-1 words, its augmented
// extension those of length-2 words.
struct ErgodicMeasure {
  double lambda = 0.0;
  std::optional<Rat> lambda_exact;
  Eigen::VectorXd letters;             // sum 1
  Eigen::VectorXd augmented;           // length d^2+d, letters as prefix
  std::optional<RatVector> letters_exact;
  std::optional<RatVector> augmented_exact;
  std::vector<int> support;            // letters with positive mass
  std::string name;                    // "mu1", "mu2", ... in output order

  bool has_exact() const { return augmented_exact.has_value(); }
};

struct MeasureCombination {
  std::vector<double> coeffs;  // one per measure, >= 0

  static MeasureCombination single(size_t index, size_t total) {
    MeasureCombination c;
    c.coeffs.assign(total, 0.0);
    c.coeffs.at(index) = 1.0;
    return c;
  }
};

// Coefficients of the occurrence vector v(w)_n in canonical A2 order:
// letter entries count w inside s^n(a); pair entries count only occurrences
// straddling the seam of s^n(x1)s^n(x2).
struct OccurrenceVector {
  Word w;
  int64_t level = 0;
  std::vector<int64_t> coeffs;
};

// A cylinder-measure value: always a double; additionally exact when every
// participating measure has exact rational spectral data.
struct CylinderValue {
  double value = 0.0;
  std::optional<Rat> exact;
};

// One ErgodicMeasure per distinguished eigenvector, probability-normalized,
// ordered by descending eigenvalue, then lexicographic support.
std::vector<ErgodicMeasure> ergodic_measures(const Substitution& s, double tol = 1e-12);

// Minimal n with |s^n(a)| >= |w| - 1 for all letters a.
int64_t sigma_w_large(const Substitution& s, const Word& w);

OccurrenceVector occurrence_vector(const Substitution& s, const Word& w, int64_t n,
                                   int64_t budget = kDefaultBudget);

// Exact integer identity  v(w)_n^T = v(w)_m^T (M+)^(n-m)  for levels m <= n
// that are both (s,w)-large.
bool occurrence_recursion_check(const Substitution& s, const Word& w, int64_t m, int64_t n,
                                int64_t budget = kDefaultBudget);

// mu([w]) = v(w)_n . sum_i c_i lambda_i^-n v_i^+ ; independent of the choice
// of (s,w)-large n.  Default n is the minimal one.
CylinderValue cylinder_measure(const Substitution& s, const Word& w,
                               const std::vector<ErgodicMeasure>& measures,
                               const MeasureCombination& combo,
                               std::optional<int64_t> n = std::nullopt,
                               int64_t budget = kDefaultBudget);

// Direct lookup of the v+ coordinate for |w| in {1,2}.
CylinderValue cylinder_measure_short(const Word& w, const ErgodicMeasure& measure);

struct CylinderTableRow {
  Word word;
  std::vector<CylinderValue> values;  // one per measure
};

// Values of every cylinder [w] with 1 <= |w| <= max_len, one column per
// measure; zero-valued words included.  Words of equal length share one
// materialization of the level images; rows evaluate in parallel.
std::vector<CylinderTableRow> cylinder_table(const Substitution& s, int max_len,
                                             const std::vector<ErgodicMeasure>& measures,
                                             int64_t budget = kDefaultBudget);

}  // namespace subshift
