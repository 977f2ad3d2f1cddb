#pragma once

#include <optional>
#include <vector>

#include "subshift/ratlin.hpp"

namespace subshift {

// Polynomials with exact rational coefficients, used to decide ordering of
// Perron-Frobenius eigenvalues of integer matrix blocks exactly (numeric
// ties between strata must be resolved as genuinely equal or strictly
// ordered, never guessed from floats).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly char_poly(const IntMatrix& m);  // monic, via Faddeev-LeVerrier

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;
  Poly derivative() const;
  Poly square_free() const;  // p / gcd(p, p')

  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  Poly scaled(const Rat& s) const;

  // Euclidean remainder and gcd (monic-normalized).
  static Poly rem(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);

 private:
  void trim();
  std::vector<Rat> c_;  // c_[i] is the coefficient of x^i
};

struct RatInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
};

// Number of distinct real roots of p in (a, b], via Sturm chains.
int count_real_roots(const Poly& p, const Rat& a, const Rat& b);

// Isolating interval for the largest real root (the PF eigenvalue when p is
// the characteristic polynomial of an irreducible non-negative block).
// Requires at least one real root > lower_hint.
RatInterval isolate_largest_root(const Poly& p);

// Shrink an isolating interval (exactly one root inside) below `width`.
RatInterval refine_root(const Poly& square_free, RatInterval iv, const Rat& width);

// Compare the largest real roots of two integer-matrix characteristic
// polynomials: -1, 0, +1.  Equality is certified through a common factor, so
// exact ties (e.g. identical blocks along an accessibility chain) are
// recognized rather than guessed; returns nullopt only if the iteration cap
// is hit without a decision.
std::optional<int> compare_largest_roots(const Poly& p1, RatInterval i1, const Poly& p2,
                                         RatInterval i2);

// Exact comparison of the largest root against a rational constant.
int compare_largest_root_to(const Poly& p, RatInterval iv, const Rat& c);

// The largest root if it is rational (roots of monic integer polynomials are
// integers, so only integer candidates need checking).
std::optional<Rat> rational_largest_root(const Poly& p, const RatInterval& iv);

}  // namespace subshift
