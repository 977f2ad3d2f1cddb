#include "subshift/eigenpair.hpp"

#include <algorithm>

namespace subshift {

namespace {

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  IntMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          m.at(rows[i], cols[j]);
  return out;
}

// Is stratum `c` distinguished: lambda_c > 1 and lambda_c strictly larger
// than the eigenvalue of every distinct accessible stratum.  Both decisions
// are made exactly on characteristic polynomials; numeric near-ties are never
// guessed.
bool is_distinguished(const Strata& st, int c) {
  const Stratum& sc = st.components[static_cast<size_t>(c)];
  if (compare_largest_root_to(sc.char_poly, sc.pf_interval, Rat(1)) <= 0) return false;
  for (int o = 0; o < st.count(); ++o) {
    if (o == c || !st.accesses[static_cast<size_t>(c)][static_cast<size_t>(o)]) continue;
    const Stratum& so = st.components[static_cast<size_t>(o)];
    auto cmp = compare_largest_roots(sc.char_poly, sc.pf_interval, so.char_poly, so.pf_interval);
    if (!cmp)
      fail(errc::degenerate_spectrum,
           "could not order stratum eigenvalues along an accessibility chain");
    if (*cmp <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<DistinguishedVector> distinguished_eigenvectors(const IntMatrix& m, double tol) {
  Strata st = analyze_strata(m, tol);
  const int d = m.rows();
  std::vector<DistinguishedVector> out;

  for (int c = 0; c < st.count(); ++c) {
    if (!is_distinguished(st, c)) continue;
    const Stratum& sc = st.components[static_cast<size_t>(c)];

    // Support: the stratum plus everything it accesses.
    std::vector<bool> in_support(static_cast<size_t>(st.count()), false);
    in_support[static_cast<size_t>(c)] = true;
    for (int o = 0; o < st.count(); ++o)
      if (st.accesses[static_cast<size_t>(c)][static_cast<size_t>(o)])
        in_support[static_cast<size_t>(o)] = true;

    DistinguishedVector dv;
    dv.stratum = c;
    dv.lambda = sc.lambda;
    dv.lambda_exact = sc.lambda_rational;

    // Assemble in topological order: the stratum block carries its PF
    // vector; each accessible block B solves (lambda I - M_B) x = inflow,
    // which is non-singular (lambda > rho(M_B)) with non-negative solution.
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    {
      auto [bl, bv] = pf_eigenpair(submatrix(m, sc.letters, sc.letters), tol);
      for (size_t i = 0; i < sc.letters.size(); ++i)
        v(sc.letters[i]) = bv(static_cast<Eigen::Index>(i));
    }
    for (int o = c + 1; o < st.count(); ++o) {
      if (!in_support[static_cast<size_t>(o)] || o == c) continue;
      const auto& letters = st.components[static_cast<size_t>(o)].letters;
      const int k = static_cast<int>(letters.size());
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
      for (int i = 0; i < k; ++i) {
        double s = 0;
        for (int a = 0; a < d; ++a)
          if (st.component_of[static_cast<size_t>(a)] != o && v(a) != 0.0)
            s += m.at(letters[static_cast<size_t>(i)], a).get_d() * v(a);
        rhs(i) = s;
      }
      Eigen::MatrixXd block =
          submatrix(m, letters, letters).to_double();
      Eigen::MatrixXd sys = dv.lambda * Eigen::MatrixXd::Identity(k, k) - block;
      Eigen::VectorXd x = sys.partialPivLu().solve(rhs);
      for (int i = 0; i < k; ++i) v(letters[static_cast<size_t>(i)]) = x(i);
    }
    if (v.minCoeff() < -1e-9)
      fail(errc::non_convergence, "distinguished eigenvector came out negative");
    v = v.cwiseMax(0.0);
    v /= v.sum();
    dv.v = v;

    // Exact route for rational eigenvalues: kernel of (M_C - lambda I) on the
    // stratum, exact solves downstream, all over Q.
    if (dv.lambda_exact) {
      const Rat lam = *dv.lambda_exact;
      RatVector vx(static_cast<size_t>(d), Rat(0));
      {
        const auto& letters = sc.letters;
        const int k = static_cast<int>(letters.size());
        RatMatrix a = RatMatrix::of(submatrix(m, letters, letters));
        for (int i = 0; i < k; ++i) a.at(i, i) -= lam;
        auto ker = kernel_1d(a);
        if (!ker) fail(errc::degenerate_spectrum, "stratum PF eigenspace is not one-dimensional");
        // orient non-negative
        Rat s = 0;
        for (const Rat& x : *ker) s += x;
        if (s == 0) fail(errc::degenerate_spectrum, "degenerate stratum eigenvector");
        for (int i = 0; i < k; ++i) vx[static_cast<size_t>(letters[static_cast<size_t>(i)])] =
            (*ker)[static_cast<size_t>(i)] / s;
      }
      for (int o = c + 1; o < st.count(); ++o) {
        if (!in_support[static_cast<size_t>(o)]) continue;
        const auto& letters = st.components[static_cast<size_t>(o)].letters;
        const int k = static_cast<int>(letters.size());
        RatVector rhs(static_cast<size_t>(k), Rat(0));
        for (int i = 0; i < k; ++i)
          for (int a = 0; a < d; ++a)
            if (st.component_of[static_cast<size_t>(a)] != o && vx[static_cast<size_t>(a)] != 0)
              rhs[static_cast<size_t>(i)] +=
                  Rat(m.at(letters[static_cast<size_t>(i)], a)) * vx[static_cast<size_t>(a)];
        RatMatrix sys = RatMatrix::of(submatrix(m, letters, letters));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sys.at(i, j) = (i == j ? lam : Rat(0)) - sys.at(i, j);
        auto x = solve_linear(sys, rhs);
        if (!x) fail(errc::singular_system, "downstream block solve was singular");
        for (int i = 0; i < k; ++i)
          vx[static_cast<size_t>(letters[static_cast<size_t>(i)])] = (*x)[static_cast<size_t>(i)];
      }
      Rat total = 0;
      for (const Rat& x : vx) total += x;
      for (Rat& x : vx) x /= total;
      dv.v_exact = vx;
      // keep the double view consistent with the exact one
      for (int a = 0; a < d; ++a) dv.v(a) = vx[static_cast<size_t>(a)].get_d();
    }

    for (int a = 0; a < d; ++a)
      if (dv.v(a) > 0) dv.support.push_back(a);
    out.push_back(std::move(dv));
  }
  return out;
}

Eigen::VectorXd extend_to_augmented(const AugmentedMatrix& aug, double lambda,
                                    const Eigen::VectorXd& v, double tol) {
  if (!aug.base().is_endo())
    fail(errc::alphabet_mismatch, "augmented extension needs an endomorphism");
  if (lambda <= 1.0 + tol)
    fail(errc::singular_system, "augmented extension needs lambda > 1");
  const int d = aug.indexing().d;
  const int dd = d * d;
  Eigen::MatrixXd sp = aug.pair_pair_block().to_double();
  Eigen::MatrixXd b = aug.pair_letter_block().to_double();
  Eigen::VectorXd rhs = b * v;
  Eigen::MatrixXd sys = lambda * Eigen::MatrixXd::Identity(dd, dd) - sp;
  Eigen::VectorXd u = sys.partialPivLu().solve(rhs);
  Eigen::VectorXd out(d + dd);
  out.head(d) = v;
  out.tail(dd) = u.cwiseMax(0.0);
  return out;
}

RatVector extend_to_augmented_exact(const AugmentedMatrix& aug, const Rat& lambda,
                                    const RatVector& v) {
  if (lambda <= 1) fail(errc::singular_system, "augmented extension needs lambda > 1");
  const int d = aug.indexing().d;
  const int dd = d * d;
  RatMatrix sys = RatMatrix::of(aug.pair_pair_block());
  for (int i = 0; i < dd; ++i)
    for (int j = 0; j < dd; ++j) sys.at(i, j) = (i == j ? lambda : Rat(0)) - sys.at(i, j);
  RatMatrix b = RatMatrix::of(aug.pair_letter_block());
  RatVector rhs = b.apply(v);
  auto u = solve_linear(sys, rhs);
  if (!u) fail(errc::singular_system, "augmented extension system was singular");
  RatVector out(static_cast<size_t>(d + dd));
  for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
  for (int i = 0; i < dd; ++i) out[static_cast<size_t>(d + i)] = (*u)[static_cast<size_t>(i)];
  return out;
}

}  // namespace subshift
