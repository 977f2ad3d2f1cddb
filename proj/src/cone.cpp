#include "subshift/cone.hpp"

#include "subshift/ratlin.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace subshift {

double nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, Eigen::VectorXd& x) {
  // Lawson-Hanson active set; fine for the handful of rays handled here.
  const int n = static_cast<int>(a.cols());
  x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<size_t>(n), false);
  Eigen::VectorXd w;
  const int max_outer = 4 * n + 16;
  for (int outer = 0; outer < max_outer; ++outer) {
    Eigen::VectorXd resid = b - a * x;
    w = a.transpose() * resid;
    int best = -1;
    double best_w = 1e-14;
    for (int i = 0; i < n; ++i)
      if (!passive[static_cast<size_t>(i)] && w(i) > best_w) {
        best_w = w(i);
        best = i;
      }
    if (best < 0) break;
    passive[static_cast<size_t>(best)] = true;
    for (int inner = 0; inner < max_outer; ++inner) {
      std::vector<int> pidx;
      for (int i = 0; i < n; ++i)
        if (passive[static_cast<size_t>(i)]) pidx.push_back(i);
      Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(pidx.size()));
      for (size_t k = 0; k < pidx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(pidx[k]);
      Eigen::VectorXd z =
          ap.completeOrthogonalDecomposition().solve(b);
      bool all_pos = true;
      for (Eigen::Index k = 0; k < z.size(); ++k)
        if (z(k) <= 0) all_pos = false;
      if (all_pos) {
        x.setZero();
        for (size_t k = 0; k < pidx.size(); ++k) x(pidx[k]) = z(static_cast<Eigen::Index>(k));
        break;
      }
      // step toward z until the first passive coordinate hits zero
      double alpha = 1.0;
      for (size_t k = 0; k < pidx.size(); ++k) {
        double zi = z(static_cast<Eigen::Index>(k)), xi = x(pidx[k]);
        if (zi <= 0) alpha = std::min(alpha, xi / (xi - zi));
      }
      for (size_t k = 0; k < pidx.size(); ++k) {
        double zi = z(static_cast<Eigen::Index>(k));
        x(pidx[k]) += alpha * (zi - x(pidx[k]));
        if (x(pidx[k]) <= 1e-14) {
          x(pidx[k]) = 0;
          passive[static_cast<size_t>(pidx[k])] = false;
        }
      }
    }
  }
  return (a * x - b).norm();
}

bool in_cone(const Eigen::VectorXd& x, const std::vector<Eigen::VectorXd>& gens, double tol) {
  if (gens.empty()) return x.lpNorm<Eigen::Infinity>() <= tol;
  Eigen::MatrixXd a(x.size(), static_cast<Eigen::Index>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = gens[i];
  Eigen::VectorXd coeff;
  double resid = nnls(a, x, coeff);
  return resid <= tol * std::max(1.0, x.norm());
}

std::vector<Eigen::VectorXd> extremal_rays(std::vector<Eigen::VectorXd> rays, double dedup_tol,
                                           double feas_tol) {
  // normalize, deduplicate
  std::vector<Eigen::VectorXd> uniq;
  for (auto& r : rays) {
    double s = r.lpNorm<1>();
    if (s <= 0) continue;
    r /= s;
    bool dup = false;
    for (const auto& u : uniq)
      if ((u - r).lpNorm<Eigen::Infinity>() <= dedup_tol) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(r);
  }
  // drop rays expressible as non-negative combinations of the others
  std::vector<Eigen::VectorXd> kept;
  for (size_t i = 0; i < uniq.size(); ++i) {
    std::vector<Eigen::VectorXd> others;
    for (size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (!in_cone(uniq[i], others, feas_tol)) kept.push_back(uniq[i]);
  }
  if (kept.empty() && !uniq.empty()) kept.push_back(uniq.front());
  return kept;
}

int cone_dimension(const std::vector<Eigen::VectorXd>& rays, double sv_tol) {
  if (rays.empty()) return 0;
  Eigen::MatrixXd a(rays[0].size(), static_cast<Eigen::Index>(rays.size()));
  for (size_t i = 0; i < rays.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = rays[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > sv_tol * sv(0)) ++rank;
  return rank;
}

Cone cone_intersection(const IntMatrix& m, int depth, double tol) {
  if (!m.is_square()) fail(errc::alphabet_mismatch, "cone_intersection needs a square matrix");
  if (!m.all_nonnegative()) fail(errc::alphabet_mismatch, "cone_intersection needs non-negative entries");
  const int d = m.rows();
  auto rays_at = [&](int n) {
    IntMatrix p = m.pow(static_cast<uint64_t>(n));
    std::vector<Eigen::VectorXd> rays;
    for (int j = 0; j < d; ++j) {
      mpz_class colsum = 0;
      for (int i = 0; i < d; ++i) colsum += p.at(i, j);
      if (colsum == 0) continue;  // letter dies out; contributes no ray
      Eigen::VectorXd r(d);
      for (int i = 0; i < d; ++i) {
        Rat entry(p.at(i, j), colsum);
        entry.canonicalize();
        r(i) = entry.get_d();
      }
      rays.push_back(r);
    }
    return rays;
  };
  auto deep = rays_at(depth);
  auto prev = rays_at(std::max(0, depth - 1));
  Cone cone;
  cone.rays = extremal_rays(deep, 1e-6, tol);
  // projective movement of the raw rays in the last deepening step
  double diam = 0.0;
  for (const auto& r : deep) {
    double best = 2.0;
    for (const auto& q : prev) best = std::min(best, (r - q).lpNorm<1>());
    diam = std::max(diam, best);
  }
  cone.convergence_diameter = diam;
  return cone;
}

}  // namespace subshift
