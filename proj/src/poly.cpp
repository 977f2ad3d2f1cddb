#include "subshift/poly.hpp"

#include <algorithm>

namespace subshift {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::char_poly(const IntMatrix& m) {
  // Faddeev-LeVerrier: B_0 = I; C_k = A B_{k-1}; c_k = -tr(C_k)/k;
  // B_k = C_k + c_k I.  Exact, monic, integer coefficients for integer input.
  if (!m.is_square()) fail(errc::alphabet_mismatch, "char_poly needs a square matrix");
  const int n = m.rows();
  RatMatrix a = RatMatrix::of(m);
  RatMatrix bk = RatMatrix::identity(n);
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1, Rat(0));
  coeff[static_cast<size_t>(n)] = 1;
  for (int k = 1; k <= n; ++k) {
    RatMatrix ck(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int l = 0; l < n; ++l)
          if (a.at(i, l) != 0 && bk.at(l, j) != 0) s += a.at(i, l) * bk.at(l, j);
        ck.at(i, j) = s;
      }
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += ck.at(i, i);
    Rat c = -tr / k;
    coeff[static_cast<size_t>(n - k)] = c;
    bk = ck;
    for (int i = 0; i < n; ++i) bk.at(i, i) += c;
  }
  return Poly(std::move(coeff));
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int Poly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return sgn(v);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(errc::singular_system, "polynomial division by zero");
  std::vector<Rat> r = a.c_;
  const int db = b.degree();
  const Rat lead = b.c_.back();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const Rat f = r.back() / lead;
    const size_t shift = r.size() - 1 - static_cast<size_t>(db);
    for (size_t i = 0; i < b.c_.size(); ++i) r[shift + i] -= f * b.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() <= static_cast<size_t>(db)) break;
  }
  return Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.c_.back());  // monic
}

Poly Poly::square_free() const {
  if (degree() <= 1) return *this;
  Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  // exact division: this / g
  std::vector<Rat> q(static_cast<size_t>(degree() - g.degree()) + 1, Rat(0));
  std::vector<Rat> r = c_;
  const Rat lead = g.coeffs().back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const Rat f = r[static_cast<size_t>(k + g.degree())] / lead;
    q[static_cast<size_t>(k)] = f;
    for (size_t i = 0; i < g.coeffs().size(); ++i)
      r[static_cast<size_t>(k) + i] -= f * g.coeffs()[i];
  }
  return Poly(std::move(q));
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    Poly r = Poly::rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(r.scaled(-1));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const Poly& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

Rat cauchy_bound(const Poly& p) {
  // 1 + max |c_i / c_n|
  Rat b = 0;
  const Rat lead = abs(p.coeffs().back());
  for (size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    Rat q = abs(p.coeffs()[i]) / lead;
    if (q > b) b = q;
  }
  return b + 1;
}

}  // namespace

int count_real_roots(const Poly& p, const Rat& a, const Rat& b) {
  Poly sf = p.square_free();
  auto chain = sturm_chain(sf);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

RatInterval isolate_largest_root(const Poly& p) {
  Poly sf = p.square_free();
  auto chain = sturm_chain(sf);
  Rat hi = cauchy_bound(sf);
  Rat lo = -hi;
  if (sign_variations(chain, lo) - sign_variations(chain, hi) < 1)
    fail(errc::singular_system, "polynomial has no real root");
  // Shrink until exactly one root remains in (lo, hi], always keeping the
  // largest (prefer the right half whenever it contains a root).
  for (int iter = 0; iter < 4096; ++iter) {
    int total = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (total == 1) return {lo, hi};
    Rat mid = (lo + hi) / 2;
    int right = sign_variations(chain, mid) - sign_variations(chain, hi);
    if (right >= 1)
      lo = mid;
    else
      hi = mid;
  }
  fail(errc::degenerate_spectrum, "largest-root isolation did not terminate");
}

RatInterval refine_root(const Poly& square_free, RatInterval iv, const Rat& width) {
  // The interval is half-open (lo, hi] and contains exactly one root; the
  // endpoints themselves may be other roots, so halving is driven by Sturm
  // counts rather than endpoint signs.
  auto chain = sturm_chain(square_free);
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  while (iv.width() > width) {
    Rat mid = iv.mid();
    if (count(mid, iv.hi) >= 1)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

std::optional<int> compare_largest_roots(const Poly& p1, RatInterval i1, const Poly& p2,
                                         RatInterval i2) {
  Poly s1 = p1.square_free();
  Poly s2 = p2.square_free();
  Poly g = Poly::gcd(s1, s2);
  for (int iter = 0; iter < 512; ++iter) {
    if (i1.lo >= i2.hi) return 1;
    if (i2.lo >= i1.hi) return -1;
    // Overlap.  If both isolated roots are the one root of a common factor
    // inside the overlap, they are exactly equal.
    if (g.degree() >= 1) {
      Rat lo = std::max(i1.lo, i2.lo);
      Rat hi = std::min(i1.hi, i2.hi);
      if (count_real_roots(g, lo, hi) >= 1 && count_real_roots(s1, lo, hi) == 1 &&
          count_real_roots(s2, lo, hi) == 1)
        return 0;
    }
    Rat w1 = i1.width() / 2, w2 = i2.width() / 2;
    i1 = refine_root(s1, i1, w1);
    i2 = refine_root(s2, i2, w2);
  }
  return std::nullopt;
}

int compare_largest_root_to(const Poly& p, RatInterval iv, const Rat& c) {
  // The interval isolates the largest real root r: r in (iv.lo, iv.hi].
  Poly sf = p.square_free();
  if (sf.sign_at(c) == 0) {
    if (c <= iv.lo) return 1;  // r > lo >= c
    if (c > iv.hi) return -1;  // r <= hi < c
    return 0;                  // c is the unique root in (lo, hi]
  }
  for (int iter = 0; iter < 4096; ++iter) {
    if (iv.hi <= c) return -1;  // r <= hi <= c, r != c
    if (iv.lo >= c) return 1;   // r > lo >= c
    iv = refine_root(sf, iv, iv.width() / 2);
  }
  fail(errc::degenerate_spectrum, "root comparison did not terminate");
}

std::optional<Rat> rational_largest_root(const Poly& p, const RatInterval& iv) {
  // Rational roots of monic integer polynomials are integers.
  Poly sf = p.square_free();
  RatInterval narrow = iv;
  if (narrow.width() > Rat(1, 2)) narrow = refine_root(sf, narrow, Rat(1, 2));
  mpz_class lo_f, hi_c;
  mpz_class lo_num = narrow.lo.get_num(), lo_den = narrow.lo.get_den();
  mpz_class hi_num = narrow.hi.get_num(), hi_den = narrow.hi.get_den();
  mpz_fdiv_q(lo_f.get_mpz_t(), lo_num.get_mpz_t(), lo_den.get_mpz_t());
  mpz_cdiv_q(hi_c.get_mpz_t(), hi_num.get_mpz_t(), hi_den.get_mpz_t());
  for (mpz_class k = lo_f; k <= hi_c; ++k) {
    Rat cand(k);
    if (sf.sign_at(cand) == 0 && narrow.lo < cand && cand <= narrow.hi) return cand;
  }
  return std::nullopt;
}

}  // namespace subshift
