#pragma once

#include <string>
#include <vector>

#include "subshift/substitution.hpp"

namespace subshift {

// Canonical index order on words of length 1 and 2: the d letters first,
// then the d^2 pairs lexicographically by (first, second) letter.
struct PairIndexing {
  int d = 0;
  explicit PairIndexing(int alphabet_size) : d(alphabet_size) {}
  int size() const { return d * d + d; }
  int letter(int a) const { return a; }
  int pair(int first, int second) const { return d + first * d + second; }
  bool is_letter(int idx) const { return idx < d; }
  std::pair<int, int> pair_letters(int idx) const {
    int k = idx - d;
    return {k / d, k % d};
  }
  std::vector<std::string> labels(const Alphabet& alphabet) const;
  Word word_at(int idx) const {
    if (is_letter(idx)) return Word::single(idx);
    auto [x, y] = pair_letters(idx);
    return Word::pair(x, y);
  }
};

// Extension of the incidence matrix to words of length 1 and 2.  Rows are
// indexed by the codomain's letters-then-pairs, columns by the domain's.
// Block structure (letter block first):
//   [ M        0     ]     M  = incidence matrix
//   [ B     S (x) P  ]     B(x1x2, y) = |sigma(y)|_{x1x2}
// with S, P the suffix/prefix matrices; the pair-pair block is their
// Kronecker product: entry (x1x2, y1y2) = 1 iff x1 ends sigma(y1) and x2
// starts sigma(y2).  The construction is a monoid homomorphism:
// aug(s o t) = aug(s) aug(t).
class AugmentedMatrix {
 public:
  static AugmentedMatrix of(const Substitution& s);

  const Substitution& base() const { return base_; }
  const IntMatrix& matrix() const { return full_; }
  const PairIndexing& row_indexing() const { return row_idx_; }
  const PairIndexing& col_indexing() const { return col_idx_; }
  // Endomorphism convenience (row and column indexing coincide).
  const PairIndexing& indexing() const { return row_idx_; }
  int dim() const { return full_.rows(); }

  IntMatrix letter_block() const;       // upper-left d' x d
  IntMatrix pair_pair_block() const;    // lower-right d'^2 x d^2
  IntMatrix pair_letter_block() const;  // lower-left d'^2 x d

 private:
  AugmentedMatrix(Substitution base, IntMatrix full, PairIndexing ridx, PairIndexing cidx)
      : base_(std::move(base)), full_(std::move(full)), row_idx_(ridx), col_idx_(cidx) {}
  Substitution base_;
  IntMatrix full_;
  PairIndexing row_idx_, col_idx_;
};

}  // namespace subshift
