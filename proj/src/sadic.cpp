#include "subshift/sadic.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

namespace {

Alphabet standard_alphabet(int d) {
  std::vector<std::string> symbols;
  symbols.reserve(static_cast<size_t>(d));
  // a..z for small d, a1..ad beyond
  for (int i = 0; i < d; ++i) {
    if (d <= 26)
      symbols.emplace_back(1, static_cast<char>('a' + i));
    else
      symbols.push_back("a" + std::to_string(i + 1));
  }
  return Alphabet(std::move(symbols));
}

mpz_class pow_mpz(unsigned long base, const mpz_class& e) {
  if (!e.fits_ulong_p()) fail(errc::budget_exceeded, "exponent too large to materialize");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e.get_ui());
  return out;
}

}  // namespace

DirectiveSequence DirectiveSequence::stationary(Substitution s, int64_t horizon) {
  if (!s.is_endo()) fail(errc::alphabet_mismatch, "stationary sequences need an endomorphism");
  if (horizon < 0) fail(errc::horizon_exceeded, "negative horizon");
  DirectiveSequence seq;
  seq.kind_ = Kind::stationary;
  seq.horizon_ = horizon;
  seq.d_ = s.domain().size();
  seq.alphabets_.push_back(s.domain());
  seq.terms_.push_back(std::move(s));
  return seq;
}

DirectiveSequence DirectiveSequence::explicit_list(std::vector<Substitution> terms) {
  if (terms.empty()) fail(errc::horizon_exceeded, "explicit sequence needs at least one term");
  DirectiveSequence seq;
  seq.kind_ = Kind::explicit_list;
  seq.horizon_ = static_cast<int64_t>(terms.size());
  for (size_t n = 0; n + 1 < terms.size(); ++n)
    if (terms[n].domain() != terms[n + 1].codomain())
      fail(errc::alphabet_mismatch,
           "level " + std::to_string(n) + ": domain must equal the next level's codomain");
  seq.d_ = terms.front().codomain().size();
  for (const auto& t : terms) seq.alphabets_.push_back(t.codomain());
  seq.alphabets_.push_back(terms.back().domain());
  seq.terms_ = std::move(terms);
  return seq;
}

DirectiveSequence DirectiveSequence::construction_a(int d, std::vector<mpz_class> ell) {
  DirectiveSequence seq;
  seq.kind_ = Kind::construction_a;
  seq.horizon_ = static_cast<int64_t>(ell.size()) + 1;  // term 0 is the identity
  seq.d_ = d;
  seq.alphabets_.push_back(standard_alphabet(d));
  seq.ell_ = std::move(ell);
  return seq;
}

DirectiveSequence DirectiveSequence::construction_b(int d, std::vector<Pow23Level> levels) {
  DirectiveSequence seq;
  seq.kind_ = Kind::construction_b;
  seq.horizon_ = static_cast<int64_t>(levels.size());
  seq.d_ = d;
  seq.alphabets_.push_back(standard_alphabet(d));
  seq.pow23_ = std::move(levels);
  return seq;
}

void DirectiveSequence::check_level(int64_t n, int64_t max) const {
  if (n < 0 || n > max)
    fail(errc::horizon_exceeded,
         "level " + std::to_string(n) + " outside horizon " + std::to_string(horizon_));
}

const Alphabet& DirectiveSequence::level_alphabet(int64_t n) const {
  check_level(n, horizon_);
  if (kind_ == Kind::explicit_list) return alphabets_[static_cast<size_t>(n)];
  return alphabets_.front();
}

bool DirectiveSequence::constant_alphabet_size() const {
  if (kind_ != Kind::explicit_list) return true;
  for (const auto& a : alphabets_)
    if (a.size() != d_) return false;
  return true;
}

bool DirectiveSequence::term_materializable(int64_t n) const {
  check_level(n, horizon_ - 1);
  if (kind_ != Kind::construction_b) {
    if (kind_ == Kind::construction_a && n >= 1)
      return ell_[static_cast<size_t>(n - 1)] + d_ <= kDefaultBudget;
    return true;
  }
  const Pow23Level& lv = pow23_[static_cast<size_t>(n)];
  if (!lv.h) return false;
  mpz_class len_j = pow_mpz(3, lv.q) + mpz_class(d_ - 1) * *lv.h;
  mpz_class len_k = lv.m.fits_ulong_p() && lv.m < 64 ? pow_mpz(2, lv.m) : mpz_class(kDefaultBudget) + 1;
  mpz_class total = len_j + mpz_class(d_ - 1) * len_k;
  return total <= kDefaultBudget;
}

const Substitution& DirectiveSequence::term(int64_t n) const {
  check_level(n, horizon_ - 1);
  if (kind_ == Kind::stationary) return terms_.front();
  if (kind_ == Kind::explicit_list) return terms_[static_cast<size_t>(n)];

  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(n);
    if (it != cache_->map.end()) return *it->second;
  }
  const Alphabet& alphabet = alphabets_.front();
  std::vector<Word> images;
  if (kind_ == Kind::construction_a) {
    if (n == 0) {
      Substitution id = Substitution::identity(alphabet);
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto [it, inserted] =
          cache_->map.emplace(n, std::make_shared<const Substitution>(std::move(id)));
      return *it->second;
    }
    const mpz_class& ell = ell_[static_cast<size_t>(n - 1)];
    if (ell + d_ > kDefaultBudget)
      fail(errc::budget_exceeded, "construction-A level " + std::to_string(n) +
                                      " image length " + ell.get_str());
    const long reps = ell.get_si();
    for (int k = 0; k < d_; ++k) {
      Word img;
      img.letters().reserve(static_cast<size_t>(reps + d_));
      for (long r = 0; r < reps; ++r) img.push_back(k);
      for (int a = 0; a < d_; ++a) img.push_back(a);
      images.push_back(std::move(img));
    }
  } else {  // construction_b
    if (!term_materializable(n))
      fail(errc::budget_exceeded,
           "construction-B level " + std::to_string(n) + " is symbolic (image too long)");
    const Pow23Level& lv = pow23_[static_cast<size_t>(n)];
    const mpz_class p3 = pow_mpz(3, lv.q);
    const mpz_class p2 = pow_mpz(2, lv.m);
    const long n3 = p3.get_si(), n2 = p2.get_si(), h = lv.h->get_si();
    for (int k = 0; k < d_; ++k) {
      Word img;
      if (k == lv.j) {
        img.letters().reserve(static_cast<size_t>(n3 + h * (d_ - 1)));
        for (long r = 0; r < n3; ++r) img.push_back(k);
        for (long r = 0; r < h; ++r)
          for (int off = 1; off < d_; ++off) img.push_back((lv.j + off) % d_);
      } else {
        img.letters().reserve(static_cast<size_t>(n2));
        for (long r = 0; r < n2; ++r) img.push_back(k);
      }
      images.push_back(std::move(img));
    }
  }
  Substitution s = Substitution::endo(alphabet, std::move(images));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->map.emplace(n, std::make_shared<const Substitution>(std::move(s)));
  return *it->second;
}

IntMatrix DirectiveSequence::term_matrix(int64_t n) const {
  check_level(n, horizon_ - 1);
  switch (kind_) {
    case Kind::stationary:
      return terms_.front().incidence();
    case Kind::explicit_list:
      return terms_[static_cast<size_t>(n)].incidence();
    case Kind::construction_a: {
      if (n == 0) return IntMatrix::identity(d_);
      IntMatrix m(d_, d_);
      const mpz_class& ell = ell_[static_cast<size_t>(n - 1)];
      for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) m.at(i, j) = (i == j) ? ell + 1 : mpz_class(1);
      return m;
    }
    case Kind::construction_b: {
      const Pow23Level& lv = pow23_[static_cast<size_t>(n)];
      if (lv.q > 2000000)
        fail(errc::budget_exceeded, "construction-B level matrix entries exceed the budget");
      const mpz_class p3 = pow_mpz(3, lv.q);
      const mpz_class p2 = pow_mpz(2, lv.m);
      const mpz_class h = p3 - p2;
      IntMatrix m(d_, d_);
      for (int i = 0; i < d_; ++i) m.at(i, i) = p2;
      for (int i = 0; i < d_; ++i) m.at(i, lv.j) = (i == lv.j) ? p3 : h;
      return m;
    }
  }
  fail(errc::horizon_exceeded, "unreachable");
}

BoolMatrix DirectiveSequence::term_pattern(int64_t n) const {
  check_level(n, horizon_ - 1);
  switch (kind_) {
    case Kind::stationary:
      return BoolMatrix::of(terms_.front().incidence());
    case Kind::explicit_list:
      return BoolMatrix::of(terms_[static_cast<size_t>(n)].incidence());
    case Kind::construction_a: {
      if (n == 0) return BoolMatrix::identity(d_);
      BoolMatrix b(d_, d_);
      for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) b.set(i, j);
      return b;
    }
    case Kind::construction_b: {
      const Pow23Level& lv = pow23_[static_cast<size_t>(n)];
      BoolMatrix b = BoolMatrix::identity(d_);
      for (int i = 0; i < d_; ++i) b.set(i, lv.j);  // h >= 1 fills column j
      return b;
    }
  }
  fail(errc::horizon_exceeded, "unreachable");
}

void DirectiveSequence::apply_term_to_ray(int64_t n, Eigen::VectorXd& v) const {
  check_level(n, horizon_ - 1);
  switch (kind_) {
    case Kind::construction_a: {
      if (n == 0) break;
      // (ell I + 1) v  =  ell (v + (sum v / ell) c)
      double ell = ell_[static_cast<size_t>(n - 1)].get_d();
      double s = v.sum() / ell;
      v.array() += s;
      break;
    }
    case Kind::construction_b: {
      // (2^m I + h 1 e_j^T) v = 2^m (v + (h/2^m) v_j c)
      const Pow23Level& lv = pow23_[static_cast<size_t>(n)];
      double add = lv.ratio * v(lv.j);
      v.array() += add;
      break;
    }
    default: {
      Eigen::MatrixXd m = term_matrix(n).to_double();
      v = m * v;
      break;
    }
  }
  double s = v.lpNorm<1>();
  if (s <= 0) fail(errc::non_convergence, "ray collapsed to zero");
  v /= s;
}

std::vector<mpz_class> DirectiveSequence::telescoped_lengths(int64_t n) const {
  check_level(n, horizon_);
  // |sigma_[0,k+1)(a)| = sum_b M_k(b, a) |sigma_[0,k)(b)|
  std::vector<mpz_class> len(static_cast<size_t>(level_alphabet(0).size()), 1);
  for (int64_t k = 0; k < n; ++k) {
    if (kind_ == Kind::construction_b) {
      const Pow23Level& lv = pow23_[static_cast<size_t>(k)];
      // column sums: letter j image length 3^q + (d-1)h, others 2^m
      if (lv.q > 2000000) fail(errc::budget_exceeded, "telescoped lengths exceed the budget");
    }
    IntMatrix m = term_matrix(k);
    std::vector<mpz_class> next(static_cast<size_t>(m.cols()), 0);
    for (int a = 0; a < m.cols(); ++a)
      for (int b = 0; b < m.rows(); ++b)
        if (m.at(b, a) != 0) next[static_cast<size_t>(a)] += m.at(b, a) * len[static_cast<size_t>(b)];
    len = std::move(next);
  }
  return len;
}

Substitution telescope(const DirectiveSequence& seq, int64_t m, int64_t n, int64_t budget) {
  if (m > n) fail(errc::horizon_exceeded, "telescope needs m <= n");
  if (n > seq.horizon()) fail(errc::horizon_exceeded, "telescope end beyond horizon");
  Substitution acc = Substitution::identity(seq.level_alphabet(m));
  for (int64_t k = m; k < n; ++k) {
    acc = compose(acc, seq.term(k));
    mpz_class total = 0;
    for (int a = 0; a < acc.domain().size(); ++a) total += static_cast<long>(acc.image(a).size());
    if (total > budget) fail(errc::budget_exceeded, "telescoped substitution exceeds the budget");
  }
  return acc;
}

IntMatrix telescope_matrix(const DirectiveSequence& seq, int64_t m, int64_t n) {
  if (m > n) fail(errc::horizon_exceeded, "telescope needs m <= n");
  if (n > seq.horizon()) fail(errc::horizon_exceeded, "telescope end beyond horizon");
  IntMatrix acc = IntMatrix::identity(seq.level_alphabet(m).size());
  for (int64_t k = m; k < n; ++k) acc = acc * seq.term_matrix(k);
  return acc;
}

WeakPrimitivityReport is_weakly_primitive(const DirectiveSequence& seq, int64_t window,
                                          int64_t horizon) {
  if (horizon < window) fail(errc::horizon_exceeded, "horizon must be at least the window");
  if (horizon > seq.horizon()) fail(errc::horizon_exceeded, "horizon beyond the sequence");
  WeakPrimitivityReport rep;
  rep.ok = true;
  for (int64_t m = 0; m + window <= horizon; ++m) {
    BoolMatrix acc = BoolMatrix::identity(seq.level_alphabet(m).size());
    int64_t found = -1;
    for (int64_t n = m + 1; n <= m + window; ++n) {
      acc = acc * seq.term_pattern(n - 1);
      if (acc.all_true()) {
        found = n;
        break;
      }
    }
    rep.witness.push_back(found);
    if (found < 0) rep.ok = false;
  }
  return rep;
}

VectorTowerPrefix VectorTowerPrefix::explicit_prefix(std::vector<Eigen::VectorXd> vectors) {
  if (vectors.empty()) fail(errc::horizon_exceeded, "tower prefix needs at least v_0");
  VectorTowerPrefix t;
  t.ext_ = Extension::explicit_only;
  t.depth_ = static_cast<int64_t>(vectors.size()) - 1;
  t.vectors_ = std::move(vectors);
  return t;
}

VectorTowerPrefix VectorTowerPrefix::eigen_decay(Eigen::VectorXd v0, double lambda, int64_t depth) {
  VectorTowerPrefix t;
  t.ext_ = Extension::eigen_decay;
  t.depth_ = depth;
  t.v0_ = std::move(v0);
  t.lambda_ = lambda;
  return t;
}

Eigen::VectorXd VectorTowerPrefix::at(int64_t n) const {
  if (n < 0) fail(errc::horizon_exceeded, "negative tower level");
  if (ext_ == Extension::eigen_decay)
    return v0_ * std::pow(lambda_, -static_cast<double>(n));
  if (n > depth_) fail(errc::horizon_exceeded, "tower prefix ends at depth " + std::to_string(depth_));
  return vectors_[static_cast<size_t>(n)];
}

double check_tower_compatibility(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                                 int64_t depth, double tol) {
  double worst = 0.0;
  for (int64_t n = 0; n < depth; ++n) {
    Eigen::MatrixXd m = seq.term_matrix(n).to_double();
    Eigen::VectorXd lhs = tower.at(n);
    Eigen::VectorXd rhs = m * tower.at(n + 1);
    worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
  }
  if (worst > tol)
    fail(errc::compatibility_violation,
         "tower compatibility defect " + std::to_string(worst));
  return worst;
}

VectorTowerPrefix backpropagated_tower(const DirectiveSequence& seq, int64_t depth) {
  std::vector<Eigen::VectorXd> vs(static_cast<size_t>(depth) + 1);
  const int dtop = seq.level_alphabet(depth).size();
  vs[static_cast<size_t>(depth)] = Eigen::VectorXd::Constant(dtop, 1.0);
  for (int64_t n = depth - 1; n >= 0; --n) {
    Eigen::MatrixXd m = seq.term_matrix(n).to_double();
    vs[static_cast<size_t>(n)] = m * vs[static_cast<size_t>(n + 1)];
  }
  // Scale so the level-0 letter masses sum to 1 (the n = 0 partial sum of the
  // total-mass series; a probability tower up to the truncation defect).
  double s = vs[0].sum();
  if (s <= 0) fail(errc::non_convergence, "degenerate backpropagated tower");
  for (auto& v : vs) v /= s;
  return VectorTowerPrefix::explicit_prefix(std::move(vs));
}

namespace {

// Row vector r (over A2 of the level-n alphabet) times the augmented matrix
// of term n, exactly.
std::vector<mpz_class> push_row(const std::vector<mpz_class>& r, const AugmentedMatrix& aug) {
  const IntMatrix& m = aug.matrix();
  if (static_cast<int>(r.size()) != m.rows())
    fail(errc::alphabet_mismatch, "row/augmented-matrix size mismatch");
  std::vector<mpz_class> out(static_cast<size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (r[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[static_cast<size_t>(j)] += r[static_cast<size_t>(i)] * m.at(i, j);
  }
  return out;
}

int64_t sadic_large_level(const DirectiveSequence& seq, const Word& w) {
  const int64_t need = static_cast<int64_t>(w.size()) - 1;
  if (need <= 1) return 0;
  for (int64_t n = 0; n <= seq.horizon(); ++n) {
    auto len = seq.telescoped_lengths(n);
    bool ok = true;
    for (const auto& l : len)
      if (l < need) {
        ok = false;
        break;
      }
    if (ok) return n;
  }
  fail(errc::horizon_exceeded, "no (sequence,w)-large level within the horizon");
}

}  // namespace

ApproxSum approx_measure_sum(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                             const Word& w, int64_t depth, int64_t budget) {
  if (w.empty()) fail(errc::empty_pattern, "measure of the empty cylinder");
  if (depth > seq.horizon()) fail(errc::horizon_exceeded, "depth beyond the horizon");
  ApproxSum out;
  const int64_t m0 = std::min<int64_t>(sadic_large_level(seq, w), depth);

  // Up to the large level: direct counts in materialized telescoped images.
  std::vector<std::vector<mpz_class>> rows;  // occurrence row from m0 onward
  for (int64_t n = 0; n <= depth; ++n) {
    double partial = 0.0;
    const int dn = seq.level_alphabet(n).size();
    Eigen::VectorXd vn = tower.at(n);
    if (static_cast<int>(vn.size()) != dn)
      fail(errc::compatibility_violation, "tower vector has the wrong dimension");
    if (n < m0) {
      Substitution tele = telescope(seq, 0, n, budget);
      for (int a = 0; a < dn; ++a)
        partial += vn(a) * static_cast<double>(count_occurrences(tele.apply(Word::single(a)), w));
    } else {
      if (rows.empty()) {
        // occurrence vector of w at level m0, then exact pushes by augmented
        // matrices of the terms
        Substitution tele = telescope(seq, 0, m0, budget);
        const int dm = seq.level_alphabet(m0).size();
        PairIndexing idx(dm);
        std::vector<mpz_class> r(static_cast<size_t>(idx.size()), 0);
        std::vector<Word> imgs;
        imgs.reserve(static_cast<size_t>(dm));
        for (int a = 0; a < dm; ++a) imgs.push_back(tele.apply(Word::single(a)));
        for (int a = 0; a < dm; ++a) r[static_cast<size_t>(a)] = count_occurrences(imgs[static_cast<size_t>(a)], w);
        for (int x = 0; x < dm; ++x)
          for (int y = 0; y < dm; ++y)
            r[static_cast<size_t>(idx.pair(x, y))] =
                count_straddling(imgs[static_cast<size_t>(x)], imgs[static_cast<size_t>(y)], w);
        rows.push_back(std::move(r));
      }
      while (static_cast<int64_t>(rows.size()) - 1 < n - m0) {
        int64_t k = m0 + static_cast<int64_t>(rows.size()) - 1;
        rows.push_back(push_row(rows.back(), AugmentedMatrix::of(seq.term(k))));
      }
      const auto& r = rows[static_cast<size_t>(n - m0)];
      for (int a = 0; a < dn; ++a) partial += vn(a) * r[static_cast<size_t>(a)].get_d();
    }
    if (!out.partial.empty() && partial < out.partial.back() - 1e-9)
      fail(errc::non_convergence, "partial sums decreased; tower is not compatible");
    out.partial.push_back(partial);
  }
  out.value = out.partial.back();
  out.last_increment =
      out.partial.size() >= 2 ? out.partial.back() - out.partial[out.partial.size() - 2] : out.value;
  return out;
}

WeightTable local_weights(const DirectiveSequence& seq, const VectorTowerPrefix& tower, int64_t n,
                          int64_t depth) {
  if (depth <= n) fail(errc::horizon_exceeded, "weight truncation depth must exceed the level");
  if (depth > seq.horizon()) fail(errc::horizon_exceeded, "depth beyond the horizon");
  const int dn = seq.level_alphabet(n).size();
  PairIndexing idx(dn);

  WeightTable wt;
  wt.level = n;
  wt.depth = depth;
  wt.omega = Eigen::MatrixXd::Zero(dn, dn);
  wt.prev_partial = Eigen::MatrixXd::Zero(dn, dn);

  // P = augmented matrix of sigma_[n,k); the (pair row, letter column) block
  // holds |sigma_[n,k)(b)|_{aa'} exactly.
  IntMatrix p = AugmentedMatrix::of(Substitution::identity(seq.level_alphabet(n))).matrix();
  Eigen::MatrixXd last = Eigen::MatrixXd::Zero(dn, dn);
  for (int64_t k = n; k <= depth; ++k) {
    if (k > n) p = p * AugmentedMatrix::of(seq.term(k - 1)).matrix();
    const int dk = seq.level_alphabet(k).size();
    Eigen::VectorXd vk = tower.at(k);
    Eigen::MatrixXd table(dn, dn);
    for (int a = 0; a < dn; ++a)
      for (int b = 0; b < dn; ++b) {
        double acc = 0.0;
        for (int c = 0; c < dk; ++c) {
          const mpz_class& cnt = p.at(idx.pair(a, b), c);
          if (cnt != 0) acc += vk(c) * cnt.get_d();
        }
        table(a, b) = acc;
      }
    if (k > n && (table - last).minCoeff() < -1e-9)
      fail(errc::non_convergence, "weight partial sums decreased");
    if (k == depth - 1 || (depth == n + 1 && k == n)) wt.prev_partial = table;
    last = table;
  }
  wt.omega = last;
  return wt;
}

bool weight_transition_check(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                             int64_t n, int64_t depth, double tol) {
  if (n < 1) fail(errc::level_too_small, "transition check needs n >= 1");
  WeightTable wn = local_weights(seq, tower, n, depth);
  WeightTable wprev = local_weights(seq, tower, n - 1, depth);
  const Substitution& s = seq.term(n - 1);  // A_n* -> A_{n-1}*
  const int dn = seq.level_alphabet(n).size();
  const int dprev = seq.level_alphabet(n - 1).size();
  Eigen::VectorXd vn = tower.at(n);

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(dprev, dprev);
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dn; ++b) {
      int c = s.last_letter(a);
      int cp = s.first_letter(b);
      rhs(c, cp) += wn.omega(a, b);
    }
  for (int a = 0; a < dn; ++a) {
    const Word& img = s.image(a);
    for (size_t p = 0; p + 1 < img.size(); ++p) rhs(img[p], img[p + 1]) += vn(a);
  }
  return (rhs - wprev.omega).cwiseAbs().maxCoeff() <= tol;
}

double sadic_cylinder_measure(const DirectiveSequence& seq, const VectorTowerPrefix& tower,
                              const Word& w, int64_t n, int64_t depth, int64_t budget) {
  if (w.empty()) fail(errc::empty_pattern, "measure of the empty cylinder");
  auto lens = seq.telescoped_lengths(n);
  for (const auto& l : lens)
    if (l < static_cast<int64_t>(w.size()) - 1)
      fail(errc::level_too_small, "level fails the cylinder length requirement");

  const int dn = seq.level_alphabet(n).size();
  Substitution tele = telescope(seq, 0, n, budget);
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(dn));
  for (int a = 0; a < dn; ++a) imgs.push_back(tele.apply(Word::single(a)));

  Eigen::VectorXd vn = tower.at(n);
  double first = 0.0;
  for (int a = 0; a < dn; ++a)
    first += vn(a) * static_cast<double>(count_occurrences(imgs[static_cast<size_t>(a)], w));

  WeightTable wt = local_weights(seq, tower, n, depth);
  double second = 0.0;
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dn; ++b) {
      if (wt.omega(a, b) == 0.0) continue;
      second += wt.omega(a, b) *
                static_cast<double>(count_straddling(imgs[static_cast<size_t>(a)],
                                                     imgs[static_cast<size_t>(b)], w));
    }
  return first + second;
}

ConeSequenceDim cone_sequence_dim(const DirectiveSequence& seq, int64_t depth, double tol) {
  if (!seq.constant_alphabet_size())
    fail(errc::alphabet_mismatch, "cone dimension needs equal level alphabet sizes");
  if (depth > seq.horizon()) fail(errc::horizon_exceeded, "depth beyond the horizon");
  const int d = seq.level_alphabet(0).size();
  auto rays_at = [&](int64_t n) {
    std::vector<Eigen::VectorXd> rays;
    for (int k = 0; k < d; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v(k) = 1.0;
      for (int64_t i = n - 1; i >= 0; --i) seq.apply_term_to_ray(i, v);
      rays.push_back(v);
    }
    return rays;
  };
  auto deep = rays_at(depth);
  auto prev = rays_at(depth > 0 ? depth - 1 : 0);
  ConeSequenceDim out;
  out.cone.rays = extremal_rays(deep, 1e-9, 1e-8);
  double diam = 0.0;
  for (const auto& r : deep) {
    double best = 2.0;
    for (const auto& q : prev) best = std::min(best, (r - q).lpNorm<1>());
    diam = std::max(diam, best);
  }
  out.cone.convergence_diameter = diam;
  out.dimension = cone_dimension(out.cone.rays, tol);
  return out;
}

bool cone_monotonic_check(const DirectiveSequence& seq, int64_t depth, double tol) {
  if (!seq.constant_alphabet_size())
    fail(errc::alphabet_mismatch, "cone nesting needs equal level alphabet sizes");
  const int d = seq.level_alphabet(0).size();
  std::vector<Eigen::VectorXd> prev;
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    v(k) = 1.0;
    prev.push_back(v);
  }
  for (int64_t n = 1; n <= depth; ++n) {
    std::vector<Eigen::VectorXd> cur;
    for (int k = 0; k < d; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v(k) = 1.0;
      for (int64_t i = n - 1; i >= 0; --i) seq.apply_term_to_ray(i, v);
      cur.push_back(v);
    }
    for (const auto& r : cur)
      if (!in_cone(r, prev, tol)) return false;
    prev = std::move(cur);
  }
  return true;
}

}  // namespace subshift
