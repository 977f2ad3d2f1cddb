#pragma once

#include <optional>
#include <vector>

#include "subshift/intmat.hpp"
#include "subshift/poly.hpp"

namespace subshift {

// One strongly connected component of the letter digraph (edge a -> a' iff
// M(a', a) > 0), with the spectral data of its diagonal block.
struct Stratum {
  std::vector<int> letters;  // ascending letter indices
  bool primitive = false;
  double lambda = 0.0;                     // PF eigenvalue of the block
  std::optional<Rat> lambda_rational;      // set when exactly rational
  Poly char_poly;                          // of the diagonal block
  RatInterval pf_interval;                 // isolating interval for lambda
};

struct Strata {
  std::vector<Stratum> components;              // topological order: accessors first
  std::vector<std::vector<bool>> accesses;      // accesses[i][j]: i reaches j (i != j)
  std::vector<int> component_of;                // letter -> component index

  int count() const { return static_cast<int>(components.size()); }
};

// SCC decomposition plus per-block PF eigenvalues.  Components are emitted in
// a topological order of the accessibility relation ("C accesses C'" when a
// letter of C has an image containing a letter of C').
Strata analyze_strata(const IntMatrix& m, double tol = 1e-12);

// PF eigenpair of an irreducible (or 1x1) non-negative block.  v > 0,
// normalized to sum 1; deterministic all-ones start, iteration cap 1e5.
// Iterates B+I so periodic irreducible blocks converge too.
std::pair<double, Eigen::VectorXd> pf_eigenpair(const IntMatrix& b, double tol = 1e-12);

}  // namespace subshift
