#include "subshift/constructions.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace subshift {

namespace {

constexpr mpfr_prec_t kPrec = 768;

struct MpfrReal {
  mpfr_t x;
  MpfrReal() { mpfr_init2(x, kPrec); }
  MpfrReal(const MpfrReal& o) {
    mpfr_init2(x, kPrec);
    mpfr_set(x, o.x, MPFR_RNDN);
  }
  MpfrReal& operator=(const MpfrReal& o) {
    mpfr_set(x, o.x, MPFR_RNDN);
    return *this;
  }
  ~MpfrReal() { mpfr_clear(x); }
};

// log2(3) to working precision.
const MpfrReal& log2_of_3() {
  static MpfrReal c = [] {
    MpfrReal r;
    mpfr_t three;
    mpfr_init2(three, kPrec);
    mpfr_set_ui(three, 3, MPFR_RNDN);
    mpfr_log2(r.x, three, MPFR_RNDN);
    mpfr_clear(three);
    return r;
  }();
  return c;
}

// {q * log2(3)} as a double (the values of interest are >= 1e-30, far above
// the 768-bit noise floor for every q this library can meet).
double frac_q_log23(const mpz_class& q) {
  MpfrReal t;
  mpfr_mul_z(t.x, log2_of_3().x, q.get_mpz_t(), MPFR_RNDN);
  mpfr_frac(t.x, t.x, MPFR_RNDN);
  return mpfr_get_d(t.x, MPFR_RNDN);
}

mpz_class floor_q_log23(const mpz_class& q) {
  MpfrReal t;
  mpfr_mul_z(t.x, log2_of_3().x, q.get_mpz_t(), MPFR_RNDN);
  mpfr_floor(t.x, t.x);
  mpz_class m;
  mpfr_get_z(m.get_mpz_t(), t.x, MPFR_RNDN);
  return m;
}

struct Record {
  mpz_class q;
  double frac;  // {q log2 3}, strictly decreasing along the table
};

// One-sided best approximations of log2(3): the minimal q achieving each new
// minimum of {q log2 3}.  A first-hit scan over increasing q lands exactly on
// this table, so walking it preserves the deterministic search order.
const std::vector<Record>& record_table() {
  static std::vector<Record> table = [] {
    // continued fraction terms of log2(3)
    MpfrReal x;
    mpfr_set(x.x, log2_of_3().x, MPFR_RNDN);
    std::vector<mpz_class> cf;
    for (int i = 0; i < 64; ++i) {
      MpfrReal fl;
      mpfr_floor(fl.x, x.x);
      mpz_class a;
      mpfr_get_z(a.get_mpz_t(), fl.x, MPFR_RNDN);
      cf.push_back(a);
      mpfr_sub(x.x, x.x, fl.x, MPFR_RNDN);
      if (mpfr_zero_p(x.x)) break;
      mpfr_ui_div(x.x, 1, x.x, MPFR_RNDN);
      // convergent denominators beyond ~1e40 are far past anything reachable
    }
    // denominators q_k aligned with the terms: q_0 = 1, q_k = a_k q_{k-1} + q_{k-2}
    std::vector<mpz_class> qs{1};
    const mpz_class cap("1000000000000000000000000000000000000000");
    for (size_t i = 1; i < cf.size(); ++i) {
      mpz_class qnext = cf[i] * qs.back() + (qs.size() >= 2 ? qs[qs.size() - 2] : mpz_class(0));
      qs.push_back(qnext);
      if (qnext > cap) break;
    }
    // candidates: convergents plus semiconvergents q_{k-2} + j q_{k-1}, j <= a_k
    std::vector<mpz_class> cands(qs.begin(), qs.end());
    for (size_t k = 2; k < qs.size() && k < cf.size(); ++k)
      for (mpz_class j = 1; j <= cf[k]; ++j) cands.push_back(qs[k - 2] + j * qs[k - 1]);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Record> recs;
    double best = 2.0;
    for (const auto& q : cands) {
      if (q < 1) continue;
      double f = frac_q_log23(q);
      if (f < best) {
        best = f;
        recs.push_back({q, f});
      }
    }
    return recs;
  }();
  return table;
}

mpz_class pow_ui_mpz(unsigned long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

std::vector<mpz_class> build_epsilon_schedule(int d, int levels) {
  if (d < 1 || levels < 1) fail(errc::parse_error, "schedule needs d >= 1 and levels >= 1");
  std::vector<mpz_class> out;
  out.reserve(static_cast<size_t>(levels));
  for (int n = 1; n <= levels; ++n) {
    // (a): ell > d / (2^(2^-n) - 1), strict
    MpfrReal t;
    mpfr_set_ui(t.x, 1, MPFR_RNDN);
    mpfr_div_2exp(t.x, t.x, static_cast<unsigned long>(n), MPFR_RNDN);  // 2^-n
    mpfr_exp2(t.x, t.x, MPFR_RNDN);                                    // 2^(2^-n)
    mpfr_sub_ui(t.x, t.x, 1, MPFR_RNDN);
    MpfrReal bound;
    mpfr_ui_div(bound.x, static_cast<unsigned long>(d), t.x, MPFR_RNDN);
    mpfr_floor(bound.x, bound.x);
    mpz_class la;
    mpfr_get_z(la.get_mpz_t(), bound.x, MPFR_RNDN);
    la += 1;  // smallest integer strictly above the bound
    // (b): ell > 2^(n+1), strict
    mpz_class lb = pow_ui_mpz(2, static_cast<unsigned long>(n + 1)) + 1;
    out.push_back(std::max(la, lb));
  }
  return out;
}

DirectiveSequence build_construction_a(int d, int levels) {
  return DirectiveSequence::construction_a(d, build_epsilon_schedule(d, levels));
}

Pow23 approx_rational_23(const Rat& eps) {
  if (eps <= 0) fail(errc::parse_error, "approx_rational_23 needs eps > 0");
  // threshold: {q log2 3} <= -log2(1 - eps/2); eps >= 2 accepts every q
  double delta;
  {
    Rat half = eps / 2;
    if (half >= 1)
      delta = 1.0;
    else
      delta = -std::log2(1.0 - half.get_d());
  }
  const auto& recs = record_table();
  for (const auto& rec : recs) {
    if (rec.frac > delta) continue;
    Pow23 out;
    out.q = rec.q;
    out.m = floor_q_log23(rec.q);
    out.ratio = std::exp2(rec.frac) - 1.0;  // 3^q / 2^m - 1 = h / 2^m
    if (out.q.fits_ulong_p() && out.q.get_ui() <= 20000) {
      mpz_class p3 = pow_ui_mpz(3, out.q.get_ui());
      mpz_class p2 = pow_ui_mpz(2, out.m.get_ui());
      // exact post-condition check: 2^(m+1) den >= 3^q (2 den - num)
      mpz_class lhs = 2 * p2 * eps.get_den();
      mpz_class rhs = p3 * (2 * eps.get_den() - eps.get_num());
      if (p2 > p3 || (eps < 2 && lhs < rhs))
        fail(errc::non_convergence, "pow23 search produced an invalid pair");
      out.h = p3 - p2;
      out.ratio = Rat(*out.h, p2).get_d();
    }
    return out;
  }
  fail(errc::non_convergence, "eps below the reach of the approximation table");
}

DirectiveSequence build_construction_b(int d, int levels) {
  if (d < 2) fail(errc::parse_error, "construction B needs d >= 2");
  auto ell = build_epsilon_schedule(d, levels);
  std::vector<DirectiveSequence::Pow23Level> lv;
  lv.reserve(static_cast<size_t>(levels));
  for (int n = 0; n < levels; ++n) {
    Pow23 p = approx_rational_23(Rat(1, ell[static_cast<size_t>(n)]));
    DirectiveSequence::Pow23Level l;
    l.q = p.q;
    l.m = p.m;
    l.h = p.h;
    l.ratio = p.ratio;
    l.j = n % d;
    lv.push_back(std::move(l));
  }
  return DirectiveSequence::construction_b(d, std::move(lv));
}

namespace {

Alphabet letters_alphabet(int d) {
  std::vector<std::string> symbols;
  for (int i = 0; i < d; ++i) symbols.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(symbols));
}

}  // namespace

Substitution generator_rho1(int d) {
  Alphabet a = letters_alphabet(d);
  std::vector<Word> imgs;
  for (int k = 0; k < d; ++k) imgs.push_back(k == 0 ? Word({0, 0, 0}) : Word::single(k));
  return Substitution::endo(std::move(a), std::move(imgs));
}

Substitution generator_theta1(int d) {
  Alphabet a = letters_alphabet(d);
  std::vector<Word> imgs;
  for (int k = 0; k < d; ++k) imgs.push_back(k == 0 ? Word({0, 0}) : Word::single(k));
  return Substitution::endo(std::move(a), std::move(imgs));
}

Substitution generator_tau1(int d) {
  Alphabet a = letters_alphabet(d);
  std::vector<Word> imgs;
  for (int k = 0; k < d; ++k) {
    if (k == 0) {
      Word w;
      for (int i = 0; i < d; ++i) w.push_back(i);
      imgs.push_back(std::move(w));
    } else {
      imgs.push_back(Word::single(k));
    }
  }
  return Substitution::endo(std::move(a), std::move(imgs));
}

Substitution generator_pi(int d) {
  Alphabet a = letters_alphabet(d);
  std::vector<Word> imgs;
  for (int k = 0; k < d; ++k) imgs.push_back(Word::single((k + 1) % d));
  return Substitution::endo(std::move(a), std::move(imgs));
}

std::vector<GeneratorPower> construction_b_factorization(int d, const Pow23& mqh, int j) {
  if (!mqh.h) fail(errc::budget_exceeded, "factorization of a symbolic level");
  // sigma'_{eps,j} = pi^j rho1^q tau1^h [pi^(d-1) (theta1^m pi^(d-1))^(d-1)] pi^(d-j)
  // with all pi powers mod d.  The bracket is theta'_1^m written over the
  // generator set.
  std::vector<GeneratorPower> out;
  auto push = [&out](GeneratorPower::G g, mpz_class p) {
    if (p == 0) return;
    out.push_back({g, std::move(p)});
  };
  push(GeneratorPower::G::pi, mpz_class(j % d));
  push(GeneratorPower::G::rho1, mqh.q);
  push(GeneratorPower::G::tau1, *mqh.h);
  push(GeneratorPower::G::pi, mpz_class(d - 1));
  for (int i = 0; i < d - 1; ++i) {
    push(GeneratorPower::G::theta1, mqh.m);
    push(GeneratorPower::G::pi, mpz_class(d - 1));
  }
  push(GeneratorPower::G::pi, mpz_class((d - j) % d));
  return out;
}

Substitution compose_generator_powers(int d, const std::vector<GeneratorPower>& factors,
                                      int64_t budget) {
  Substitution acc = Substitution::identity(letters_alphabet(d));
  for (const auto& f : factors) {
    Substitution g = [&] {
      switch (f.g) {
        case GeneratorPower::G::rho1: return generator_rho1(d);
        case GeneratorPower::G::theta1: return generator_theta1(d);
        case GeneratorPower::G::tau1: return generator_tau1(d);
        case GeneratorPower::G::pi: return generator_pi(d);
      }
      fail(errc::parse_error, "unreachable");
    }();
    if (!f.power.fits_ulong_p()) fail(errc::budget_exceeded, "generator power too large");
    acc = compose(acc, power(g, f.power.get_ui()));
    mpz_class total = 0;
    for (int a = 0; a < d; ++a) total += static_cast<long>(acc.image(a).size());
    if (total > budget) fail(errc::budget_exceeded, "generator composition exceeds the budget");
  }
  return acc;
}

Substitution construction_b_term(int d, const Pow23& mqh, int j, int64_t budget) {
  std::vector<DirectiveSequence::Pow23Level> lv(1);
  lv[0].q = mqh.q;
  lv[0].m = mqh.m;
  lv[0].h = mqh.h;
  lv[0].ratio = mqh.ratio;
  lv[0].j = j;
  (void)budget;
  return DirectiveSequence::construction_b(d, std::move(lv)).term(0);
}

bool inclusion_check(const Rat& eps, int j, int d, double tol) {
  if (eps <= 0 || eps > 1) fail(errc::parse_error, "inclusion check needs 0 < eps <= 1");
  if (j < 0 || j >= d) fail(errc::invalid_letter, "column index outside the alphabet");
  Pow23 p = approx_rational_23(eps);
  // Columns of M'_{eps,j}, L1-normalized.  Dividing column j by 2^m leaves
  // diag 3^q/2^m = 1 + ratio and off-diagonal h/2^m = ratio, so the huge
  // powers never need materializing.
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    if (k == j) {
      for (int i = 0; i < d; ++i) u(i, k) = (i == j) ? 1.0 + p.ratio : p.ratio;
    } else {
      u(k, k) = 1.0;
    }
    u.col(k) /= u.col(k).lpNorm<1>();
  }
  const double e = eps.get_d();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(u);
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd target = Eigen::VectorXd::Constant(d, e);
    target(k) += 1.0;
    target /= target.lpNorm<1>();
    Eigen::VectorXd x = lu.solve(target);
    if (x.minCoeff() < -tol) return false;
  }
  return true;
}

}  // namespace subshift
