#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "subshift/augmented.hpp"
#include "subshift/cone.hpp"
#include "subshift/scan.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

// A finitely truncatable sequence of substitutions sigma_n : A_{n+1}* -> A_n*.
//
// Stationary and explicit sequences carry their terms directly.  The two
// built-in construction families (A and B) generate terms on demand; deep
// construction-B levels have image lengths like 3^q with q beyond 10^6, so
// those terms exist only symbolically: their incidence action is available
// exactly (q, m as big integers) and as a normalized ray update, while
// materializing the substitution itself raises budget_exceeded.
class DirectiveSequence {
 public:
  enum class Kind { stationary, construction_a, construction_b, explicit_list };

  // Construction-B level data: sigma'(a_j) = a_j^(3^q) (cycle word)^h,
  // sigma'(a_k) = a_k^(2^m) for k != j, with h = 3^q - 2^m.
  struct Pow23Level {
    mpz_class q, m;
    std::optional<mpz_class> h;  // materialized only for moderate q
    double ratio = 0.0;          // h / 2^m
    int j = 0;                   // 0-based distinguished letter
  };

  static DirectiveSequence stationary(Substitution s, int64_t horizon);
  static DirectiveSequence explicit_list(std::vector<Substitution> terms);
  static DirectiveSequence construction_a(int d, std::vector<mpz_class> ell);
  static DirectiveSequence construction_b(int d, std::vector<Pow23Level> levels);

  Kind kind() const { return kind_; }
  int64_t horizon() const { return horizon_; }  // number of terms
  const Alphabet& level_alphabet(int64_t n) const;
  bool constant_alphabet_size() const;

  // sigma_n as an explicit Substitution (cached; budget-guarded).
  const Substitution& term(int64_t n) const;
  bool term_materializable(int64_t n) const;

  IntMatrix term_matrix(int64_t n) const;       // exact; budget-guarded for symbolic levels
  BoolMatrix term_pattern(int64_t n) const;     // support pattern, always available
  // v := M_n v, L1-normalized; exact ratios are all a ray ever needs.
  void apply_term_to_ray(int64_t n, Eigen::VectorXd& v) const;

  // Exact lengths |sigma_[0,n)(a)| for a in A_n.
  std::vector<mpz_class> telescoped_lengths(int64_t n) const;

  const std::vector<mpz_class>& ell_schedule() const { return ell_; }
  const std::vector<Pow23Level>& pow23_levels() const { return pow23_; }

 private:
  DirectiveSequence() = default;
  void check_level(int64_t n, int64_t max) const;

  // Append-only cache of materialized construction terms; safe to share
  // between copies and concurrent readers.
  struct TermCache {
    std::mutex mu;
    std::map<int64_t, std::shared_ptr<const Substitution>> map;
  };

  Kind kind_ = Kind::stationary;
  int64_t horizon_ = 0;
  int d_ = 0;
  std::vector<Alphabet> alphabets_;       // explicit: level alphabets; else one shared
  std::vector<Substitution> terms_;       // stationary: 1; explicit: horizon
  std::vector<mpz_class> ell_;            // construction A: ell(1..N)
  std::vector<Pow23Level> pow23_;         // construction B: level 0..N-1
  std::shared_ptr<TermCache> cache_ = std::make_shared<TermCache>();
};

// Composition sigma_[m,n) = sigma_m o ... o sigma_{n-1} : A_n* -> A_m*;
// telescope(seq, m, m) is the identity on A_m.
Substitution telescope(const DirectiveSequence& seq, int64_t m, int64_t n,
                       int64_t budget = kDefaultBudget);
IntMatrix telescope_matrix(const DirectiveSequence& seq, int64_t m, int64_t n);

struct WeakPrimitivityReport {
  bool ok = false;
  // witness[m] = smallest n in (m, m+window] with M_[m,n) positive, or -1.
  std::vector<int64_t> witness;
};

// For every m <= horizon - window, some n <= m + window must give a positive
// composed incidence matrix.  Decided on support patterns, so symbolic
// construction levels are fine.
WeakPrimitivityReport is_weakly_primitive(const DirectiveSequence& seq, int64_t window,
                                          int64_t horizon);

// Non-negative vectors v_n per level with v_n = M_n v_{n+1}.
class VectorTowerPrefix {
 public:
  enum class Extension { explicit_only, eigen_decay };

  static VectorTowerPrefix explicit_prefix(std::vector<Eigen::VectorXd> vectors);
  // v_n = lambda^-n v0 (compatible when M v0 = lambda v0).
  static VectorTowerPrefix eigen_decay(Eigen::VectorXd v0, double lambda, int64_t depth);

  int64_t depth() const { return depth_; }
  Eigen::VectorXd at(int64_t n) const;

 private:
  Extension ext_ = Extension::explicit_only;
  int64_t depth_ = 0;
  std::vector<Eigen::VectorXd> vectors_;
  Eigen::VectorXd v0_;
  double lambda_ = 0.0;
};

// Max over n < depth of ||v_n - M_n v_{n+1}||_inf; throws
// compatibility_violation above tol.
double check_tower_compatibility(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                                 int64_t depth, double tol = 1e-9);

// A tower compatible with seq by construction: v_depth = uniform, pushed down
// by the incidence matrices, rescaled so the level-0 letter masses sum to 1.
VectorTowerPrefix backpropagated_tower(const DirectiveSequence& seq, int64_t depth);

struct ApproxSum {
  double value = 0.0;
  double last_increment = 0.0;
  std::vector<double> partial;  // partial[n], n = 0..depth
};

// Monotone partial sums  sum_{a in A_n} v_n(a) |sigma_[0,n)(a)|_w  whose
// limit is the measure of [w] under the tower's measure.
ApproxSum approx_measure_sum(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                             const Word& w, int64_t depth, int64_t budget = kDefaultBudget);

struct WeightTable {
  int64_t level = 0;
  int64_t depth = 0;
  Eigen::MatrixXd omega;         // (a, a') pair weights at the final truncation
  Eigen::MatrixXd prev_partial;  // truncation depth-1: monotone lower-bound certificate
  double max_increment() const { return (omega - prev_partial).cwiseAbs().maxCoeff(); }
};

// Pair weights omega^n_{a,a'} = lim_k sum_b v_k(b) |sigma_[n,k)(b)|_{aa'},
// truncated at k = depth.  Computed from augmented-matrix products, so no
// word materialization is involved.
WeightTable local_weights(const DirectiveSequence& seq, const VectorTowerPrefix& tower, int64_t n,
                          int64_t depth);

// Transition identity between consecutive weight levels: for letters c,c' of
// A_{n-1},  omega^{n-1}_{c,c'} = sum over pairs (a,a') of A_n whose
// sigma_{n-1}-transition (last letter of image(a), first letter of image(a'))
// equals (c,c') of omega^n_{a,a'}, plus sum_a v_n(a) |sigma_{n-1}(a)|_{cc'}.
bool weight_transition_check(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                             int64_t n, int64_t depth, double tol = 1e-8);

// Cylinder measure straight from the tower: needs |sigma_[0,n)(a)| >= |w|-1
// for all a in A_n.
double sadic_cylinder_measure(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                              const Word& w, int64_t n, int64_t depth,
                              int64_t budget = kDefaultBudget);

struct ConeSequenceDim {
  int dimension = 0;
  Cone cone;
};

// Extremal rays of M_[0,depth) applied to the standard cone; the dimension
// (rank at tolerance) lower-bounds the number of ergodic measures.
ConeSequenceDim cone_sequence_dim(const DirectiveSequence& seq, int64_t depth, double tol = 1e-6);

// Nesting check: rays at depth n+1 lie in the cone of rays at depth n.
bool cone_monotonic_check(const DirectiveSequence& seq, int64_t depth, double tol = 1e-8);

}  // namespace subshift
