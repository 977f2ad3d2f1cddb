#pragma once

#include <optional>
#include <vector>

#include "subshift/augmented.hpp"
#include "subshift/strata.hpp"

namespace subshift {

// A non-negative eigenvector of M attached to a stratum whose eigenvalue
// strictly dominates every distinct stratum it accesses.  One such vector
// exists per dominating stratum; together they span the extremal rays of the
// nested cone intersection of M.
struct DistinguishedVector {
  int stratum = 0;                    // index into Strata::components
  double lambda = 0.0;
  std::optional<Rat> lambda_exact;
  Eigen::VectorXd v;                  // letter vector, sum 1, >= 0
  std::optional<RatVector> v_exact;   // set when lambda is exactly rational
  std::vector<int> support;           // letters with v > 0
};

// Distinguished eigenvectors of an incidence matrix, one per stratum C with
// lambda_C > 1 and lambda_C > lambda_C' for every distinct stratum C'
// accessible from C.  Eigenvalue comparisons along accessibility chains are
// decided exactly (characteristic polynomials over Q); exact ties exclude the
// upstream stratum.  Throws degenerate_spectrum only if an exact comparison
// fails to terminate.
std::vector<DistinguishedVector> distinguished_eigenvectors(const IntMatrix& m,
                                                            double tol = 1e-12);

// Unique extension of an eigenvector (lambda > 1) of M to the augmented
// matrix: solves (lambda I - S(x)P) u = B v; the lower block has spectral
// radius <= 1, so the system is non-singular and u >= 0.
Eigen::VectorXd extend_to_augmented(const AugmentedMatrix& aug, double lambda,
                                    const Eigen::VectorXd& v, double tol = 1e-12);
RatVector extend_to_augmented_exact(const AugmentedMatrix& aug, const Rat& lambda,
                                    const RatVector& v);

}  // namespace subshift
