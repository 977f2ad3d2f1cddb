#pragma once

#include <Eigen/Dense>
#include <vector>

#include "subshift/intmat.hpp"

namespace subshift {

// Finitely generated sub-cone of the non-negative orthant: unit-normalized
// generating rays plus an estimate of how far the rays moved in the last
// deepening step (projective convergence diameter).
struct Cone {
  std::vector<Eigen::VectorXd> rays;  // L1-normalized, >= 0, pairwise distinct
  double convergence_diameter = 0.0;
};

// True iff x is a non-negative combination of the generators, within tol
// (non-negative least squares residual test).
bool in_cone(const Eigen::VectorXd& x, const std::vector<Eigen::VectorXd>& gens, double tol);

// Deduplicate (angular tolerance) and drop rays expressible as non-negative
// combinations of the others.
std::vector<Eigen::VectorXd> extremal_rays(std::vector<Eigen::VectorXd> rays, double dedup_tol,
                                           double feas_tol);

// Number of linearly independent rays at relative singular-value threshold.
int cone_dimension(const std::vector<Eigen::VectorXd>& rays, double sv_tol = 1e-6);

// Extremal rays of M^depth applied to the standard non-negative cone:
// normalized images of the basis vectors, deduplicated and reduced.
Cone cone_intersection(const IntMatrix& m, int depth, double tol = 1e-8);

// Non-negative least squares min ||A x - b||, x >= 0 (Lawson-Hanson active
// set).  Returns the residual norm; coefficients in x.
double nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, Eigen::VectorXd& x);

}  // namespace subshift
