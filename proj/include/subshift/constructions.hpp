#pragma once

#include "subshift/ratlin.hpp"
#include "subshift/sadic.hpp"

namespace subshift {

// Schedule eps_n = 1/ell(n), where ell(n) is the smallest integer with
//   (a)  log(1 + d/ell) < 2^-n log 2      and
//   (b)  1/ell < 2^-(n+1).
// Entry [i] holds ell(i+1).
std::vector<mpz_class> build_epsilon_schedule(int d, int levels);

// sigma_0 = id, then sigma_n : a_k -> a_k^ell(n) a_1...a_d, whose incidence
// matrix is ell(n) I + 1_{dxd}.  The nested images of the standard cone
// converge to a simplicial cone of full dimension d.
DirectiveSequence build_construction_a(int d, int levels);

using Pow23 = DirectiveSequence::Pow23Level;  // without the j component

// Smallest q >= 1 with 1 >= 2^m/3^q >= 1 - eps/2 where m is the largest
// exponent with 2^m <= 3^q; h = 3^q - 2^m >= 1.  Equivalent search: minimal
// q with frac(q log2 3) <= -log2(1 - eps/2), walked along the one-sided best
// rational approximations of log2 3, which agrees with a literal increasing-q
// scan but stays cheap when eps is tiny.  h is materialized only for
// moderate q; the ratio h/2^m is always available.
Pow23 approx_rational_23(const Rat& eps);

// Finite-generator realization of the same cone geometry:
//   rho_j(a_j) = a_j^3,  theta_j(a_j) = a_j^2,
//   tau_j(a_j) = a_j a_{j+1} ... a_d a_1 ... a_{j-1},   all fixing a_k, k != j,
// level n uses sigma'_{eps_n, j} = rho_j^q tau_j^h theta'_j^m with j cycling
// through 1..d, theta'_j the product of all theta_i with i != j.  On letters:
// a_j -> a_j^(3^q) (a_{j+1}...a_{j-1})^h and a_k -> a_k^(2^m).
DirectiveSequence build_construction_b(int d, int levels);

// Generators over the 4-element set {rho_1, theta_1, tau_1, pi} with
// pi : a_i -> a_{i+1} (cyclically); every sigma'_{eps,j} factors over them.
Substitution generator_rho1(int d);
Substitution generator_theta1(int d);
Substitution generator_tau1(int d);
Substitution generator_pi(int d);

struct GeneratorPower {
  enum class G { rho1, theta1, tau1, pi } g;
  mpz_class power;
};

// Run-length factorization of level (j, (q,m,h)) over {rho_1, theta_1,
// tau_1, pi}:
//   pi^j . rho_1^q . tau_1^h . pi^(d-1) . (theta_1^m pi^(d-1))^(d-1) . pi^(d-j)
// (j is 0-based here; pi-powers reduce mod d).  Telescoping this sequence
// reproduces the level substitution word-for-word.
std::vector<GeneratorPower> construction_b_factorization(int d, const Pow23& mqh, int j);

// Word-exact composition of generator powers (square-and-multiply per
// factor); budget-guarded.
Substitution compose_generator_powers(int d, const std::vector<GeneratorPower>& factors,
                                      int64_t budget = kDefaultBudget);

// The level substitution built directly from its closed-form images.
Substitution construction_b_term(int d, const Pow23& mqh, int j, int64_t budget = kDefaultBudget);

// M_eps (standard cone) is contained in M'_{eps,j} (standard cone), where
// M_eps = I + eps 1_{dxd}: each column of M_eps must be a non-negative
// combination of the columns of M'_{eps,j}.
bool inclusion_check(const Rat& eps, int j, int d, double tol = 1e-10);

}  // namespace subshift
