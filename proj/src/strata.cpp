#include "subshift/strata.hpp"

#include <algorithm>
#include <functional>

#include "subshift/substitution.hpp"

namespace subshift {

std::pair<double, Eigen::VectorXd> pf_eigenpair(const IntMatrix& b, double tol) {
  if (!b.is_square()) fail(errc::alphabet_mismatch, "pf_eigenpair needs a square matrix");
  if (!b.all_nonnegative()) fail(errc::alphabet_mismatch, "pf_eigenpair needs a non-negative matrix");
  const int n = b.rows();
  if (n == 1) {
    Eigen::VectorXd v(1);
    v(0) = 1.0;
    return {b.at(0, 0).get_d(), v};
  }
  Eigen::MatrixXd m = b.to_double();
  // Shift by I: same eigenvectors, spectrum moved off the unit circle, so
  // power iteration also converges for periodic irreducible blocks.
  Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / n);
  double lambda = 0.0;
  const int cap = 100000;
  for (int it = 0; it < cap; ++it) {
    Eigen::VectorXd w = shifted * v;
    double s = w.sum();
    if (s <= 0) fail(errc::non_convergence, "power iteration collapsed");
    w /= s;
    lambda = s - 1.0;
    double resid = (m * w - lambda * w).lpNorm<Eigen::Infinity>();
    v = w;
    if (resid <= tol * v.lpNorm<Eigen::Infinity>()) return {lambda, v};
  }
  fail(errc::non_convergence, "power iteration exceeded the iteration cap");
}

namespace {

// Tarjan SCC on the letter digraph (edge a -> b iff M(b, a) > 0).
struct Scc {
  std::vector<std::vector<int>> comps;  // in reverse topological order of discovery
  std::vector<int> comp_of;
};

Scc tarjan(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.at(b, a) != 0) adj[static_cast<size_t>(a)].push_back(b);

  Scc out;
  out.comp_of.assign(static_cast<size_t>(n), -1);
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  int counter = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<size_t>(v)] = true;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (index[static_cast<size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      } else if (on_stack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      std::vector<int> comp;
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<size_t>(w)] = false;
        comp.push_back(w);
        out.comp_of[static_cast<size_t>(w)] = static_cast<int>(out.comps.size());
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      out.comps.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[static_cast<size_t>(v)] < 0) strongconnect(v);
  return out;
}

IntMatrix diagonal_block(const IntMatrix& m, const std::vector<int>& letters) {
  const int k = static_cast<int>(letters.size());
  IntMatrix b(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      b.at(i, j) = m.at(letters[static_cast<size_t>(i)], letters[static_cast<size_t>(j)]);
  return b;
}

}  // namespace

Strata analyze_strata(const IntMatrix& m, double tol) {
  if (!m.is_square()) fail(errc::alphabet_mismatch, "strata need a square matrix");
  Scc scc = tarjan(m);
  const int k = static_cast<int>(scc.comps.size());

  // Tarjan emits components in reverse topological order of the edge
  // direction a -> b (successors first); flip so that accessors come first.
  std::vector<int> order(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<size_t>(i)] = k - 1 - i;

  Strata out;
  out.components.resize(static_cast<size_t>(k));
  out.component_of.assign(static_cast<size_t>(m.rows()), -1);
  std::vector<int> newindex(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) newindex[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  for (int letter = 0; letter < m.rows(); ++letter)
    out.component_of[static_cast<size_t>(letter)] =
        newindex[static_cast<size_t>(scc.comp_of[static_cast<size_t>(letter)])];

  for (int i = 0; i < k; ++i) {
    Stratum& st = out.components[static_cast<size_t>(i)];
    st.letters = scc.comps[static_cast<size_t>(order[static_cast<size_t>(i)])];
    IntMatrix block = diagonal_block(m, st.letters);
    st.primitive = is_primitive(block);
    auto [lambda, v] = pf_eigenpair(block, tol);
    st.lambda = lambda;
    st.char_poly = Poly::char_poly(block);
    st.pf_interval = isolate_largest_root(st.char_poly);
    st.lambda_rational = rational_largest_root(st.char_poly, st.pf_interval);
    if (st.lambda_rational) st.lambda = st.lambda_rational->get_d();
  }

  // Direct access edges, then transitive closure in topological order.
  out.accesses.assign(static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k), false));
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.rows(); ++b)
      if (m.at(b, a) != 0) {
        int ca = out.component_of[static_cast<size_t>(a)];
        int cb = out.component_of[static_cast<size_t>(b)];
        if (ca != cb) out.accesses[static_cast<size_t>(ca)][static_cast<size_t>(cb)] = true;
      }
  for (int i = k - 1; i >= 0; --i)
    for (int j = 0; j < k; ++j)
      if (out.accesses[static_cast<size_t>(i)][static_cast<size_t>(j)])
        for (int l = 0; l < k; ++l)
          if (out.accesses[static_cast<size_t>(j)][static_cast<size_t>(l)])
            out.accesses[static_cast<size_t>(i)][static_cast<size_t>(l)] = true;
  return out;
}

}  // namespace subshift
