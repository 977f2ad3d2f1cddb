#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/intmat.hpp"
#include "subshift/word.hpp"

namespace subshift {

// A map from domain letters to non-empty words over the codomain alphabet,
// extended to a monoid homomorphism.  Images must be non-empty so that
// first/last letters exist for the augmented-matrix construction.
class Substitution {
 public:
  Substitution(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  // Endomorphism with equal domain and codomain.
  static Substitution endo(Alphabet alphabet, std::vector<Word> images);
  static Substitution identity(const Alphabet& alphabet);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  bool is_endo() const { return domain_ == codomain_; }
  const Word& image(int letter) const;
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  // Incidence matrix: entry (a', a) = number of occurrences of codomain
  // letter a' in the image of domain letter a (a' indexes rows).
  IntMatrix incidence() const;
  // 0/1 matrices with entry (x,y) = 1 iff x is the first (resp. last) letter
  // of the image of y; exactly one 1 per column.
  IntMatrix prefix_matrix() const;
  IntMatrix suffix_matrix() const;

  int first_letter(int y) const { return image(y)[0]; }
  int last_letter(int y) const { return image(y)[image(y).size() - 1]; }

  bool operator==(const Substitution& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && images_ == o.images_;
  }

 private:
  Alphabet domain_, codomain_;
  std::vector<Word> images_;
};

// compose(s, t) = s after t: (s.t)(a) = s(t(a)).  t's codomain must equal
// s's domain; the result maps t's domain into s's codomain.
Substitution compose(const Substitution& s, const Substitution& t);

// n-fold self-composition of an endomorphism; power(s, 0) is the identity.
Substitution power(const Substitution& s, uint64_t n);

// Letters a with |s^n(a)| -> infinity, decided on the letter graph
// (a -> letters of s(a)): a grows iff some cycle reachable from a contains a
// vertex whose image has length >= 2.
std::vector<bool> growing_letters(const Substitution& s);
bool is_everywhere_growing(const Substitution& s);

// Primitivity of a non-negative square matrix via the Wielandt bound:
// some power M^k with 1 <= k <= (d-1)^2 + 1 is entrywise positive.
bool is_primitive(const IntMatrix& m);

// All length-L factors of the depth-th images of the letters.  This is a
// finite approximation of the language: exact only when depth is large
// enough, which no finite computation certifies in general.
std::set<Word> language_factors(const Substitution& s, int length, int depth,
                                int64_t budget = 10'000'000);

// Letter-count vector of w (entry a = |w|_a).
std::vector<int64_t> count_vector(const Word& w, int alphabet_size);

}  // namespace subshift
