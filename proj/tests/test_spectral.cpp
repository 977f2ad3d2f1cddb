#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "subshift/augmented.hpp"
#include "subshift/cone.hpp"
#include "subshift/eigenpair.hpp"
#include "subshift/measure.hpp"

using namespace subshift;
using namespace subshift::testing;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("characteristic polynomials and largest roots") {
  IntMatrix fib = fibonacci().incidence();
  Poly p = Poly::char_poly(fib);  // x^2 - x - 1
  CHECK(p.degree() == 2);
  CHECK(p.coeffs()[0] == -1);
  CHECK(p.coeffs()[1] == -1);
  CHECK(p.coeffs()[2] == 1);
  auto iv = isolate_largest_root(p);
  auto refined = refine_root(p.square_free(), iv, Rat(1, 1000000));
  double phi_est = refined.mid().get_d();
  CHECK(std::abs(phi_est - kPhi) < 1e-5);
  CHECK(!rational_largest_root(p, iv));

  IntMatrix tm = thue_morse().incidence();
  Poly q = Poly::char_poly(tm);  // x^2 - 2x
  auto ivq = isolate_largest_root(q);
  auto r = rational_largest_root(q, ivq);
  REQUIRE(r.has_value());
  CHECK(*r == 2);

  CHECK(compare_largest_root_to(q, ivq, Rat(1)) == 1);
  CHECK(compare_largest_root_to(q, ivq, Rat(2)) == 0);
  CHECK(compare_largest_root_to(q, ivq, Rat(3)) == -1);

  // phi^2 vs 2: strict; identical blocks: exact tie
  IntMatrix top = from_rows({{2, 1}, {1, 1}});
  Poly pt = Poly::char_poly(top);
  auto ivt = isolate_largest_root(pt);
  auto cmp = compare_largest_roots(pt, ivt, q, ivq);
  REQUIRE(cmp.has_value());
  CHECK(*cmp == 1);
  auto tie = compare_largest_roots(pt, ivt, pt, ivt);
  REQUIRE(tie.has_value());
  CHECK(*tie == 0);
  // phi^3 appears as largest root of both [[3,2],[2,1]] and M_tau^3
  IntMatrix a3 = from_rows({{3, 2}, {2, 1}});
  Poly p3 = Poly::char_poly(a3);
  auto iv3 = isolate_largest_root(p3);
  auto tie2 = compare_largest_roots(p3, iv3, p3, iv3);
  CHECK(tie2 == 0);
}

TEST_CASE("augmented matrices match the worked 6x6 examples") {
  AugmentedMatrix atm = AugmentedMatrix::of(thue_morse());
  // order (a, b, aa, ab, ba, bb)
  long tm_expect[6][6] = {
      {1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 1}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(atm.matrix().at(i, j) == tm_expect[i][j]);

  AugmentedMatrix afib = AugmentedMatrix::of(fibonacci());
  long fib_expect[6][6] = {
      {1, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1},
      {1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(afib.matrix().at(i, j) == fib_expect[i][j]);

  // Kronecker lower-right block, as an independent identity
  IntMatrix k = kronecker(fibonacci().suffix_matrix(), fibonacci().prefix_matrix());
  long k_expect[4][4] = {{0, 0, 1, 1}, {0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k.at(i, j) == k_expect[i][j]);
  CHECK(afib.pair_pair_block() == k);
  CHECK(atm.pair_pair_block() ==
        kronecker(thue_morse().suffix_matrix(), thue_morse().prefix_matrix()));
  CHECK(kronecker(IntMatrix::identity(3), IntMatrix::identity(3)) == IntMatrix::identity(9));
}

TEST_CASE("augmented matrix of the periodic-leaf example (12x12)") {
  AugmentedMatrix aug = AugmentedMatrix::of(ex_periodic_leaf());
  long expect[12][12] = {
      {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
  REQUIRE(aug.dim() == 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) CHECK(aug.matrix().at(i, j) == expect[i][j]);
}

TEST_CASE("augmented construction is a homomorphism") {
  std::mt19937_64 rng(90210);
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> dsize(1, 4);
    const int d = dsize(rng);
    auto mk = [&] {
      std::vector<Word> images;
      std::uniform_int_distribution<int> dlen(1, 5), dletter(0, d - 1);
      for (int a = 0; a < d; ++a) {
        Word w;
        for (int i = 0, n = dlen(rng); i < n; ++i) w.push_back(dletter(rng));
        images.push_back(std::move(w));
      }
      std::string letters;
      for (int i = 0; i < d; ++i) letters += static_cast<char>('a' + i);
      return Substitution::endo(Alphabet::from_chars(letters), std::move(images));
    };
    Substitution s = mk(), t = mk();
    CHECK(AugmentedMatrix::of(compose(s, t)).matrix() ==
          AugmentedMatrix::of(s).matrix() * AugmentedMatrix::of(t).matrix());
  }
  // and hence powers
  AugmentedMatrix atm = AugmentedMatrix::of(thue_morse());
  CHECK(AugmentedMatrix::of(power(thue_morse(), 3)).matrix() == atm.matrix().pow(3));
}

TEST_CASE("pair-pair block has column sums 1 and bounded powers") {
  for (const Substitution& s :
       {thue_morse(), fibonacci(), ex_periodic_leaf(), ex_three_measures()}) {
    IntMatrix pp = AugmentedMatrix::of(s).pair_pair_block();
    for (int j = 0; j < pp.cols(); ++j) {
      mpz_class colsum = 0;
      for (int i = 0; i < pp.rows(); ++i) colsum += pp.at(i, j);
      CHECK(colsum == 1);
    }
    // spectral radius <= 1: column sums 1 make the L1 norm non-increasing
    Eigen::MatrixXd m = pp.to_double();
    Eigen::VectorXd x = Eigen::VectorXd::Ones(m.cols());
    const double initial = x.lpNorm<1>();
    for (int n = 0; n < 50; ++n) {
      x = m * x;
      CHECK(x.lpNorm<1>() <= initial + 1e-9);
    }
  }
}

TEST_CASE("strata of the worked examples") {
  Strata s61 = analyze_strata(ex_periodic_leaf().incidence());
  REQUIRE(s61.count() == 2);
  CHECK(s61.components[0].letters == std::vector<int>{0, 1});
  CHECK(s61.components[1].letters == std::vector<int>{2});
  CHECK(s61.components[0].primitive);
  CHECK(s61.components[1].primitive);
  CHECK(s61.components[0].lambda == doctest::Approx(1 + kPhi).epsilon(1e-12));
  CHECK(s61.components[1].lambda == doctest::Approx(2.0));
  CHECK(s61.accesses[0][1]);
  CHECK(!s61.accesses[1][0]);

  Strata s62 = analyze_strata(ex_three_measures().incidence());
  REQUIRE(s62.count() == 3);
  CHECK(s62.components[0].letters == std::vector<int>{0});
  CHECK(s62.components[0].lambda == doctest::Approx(3.0));
  // two Thue-Morse blocks with eigenvalue 2
  CHECK(s62.components[1].lambda == doctest::Approx(2.0));
  CHECK(s62.components[2].lambda == doctest::Approx(2.0));
  CHECK(s62.accesses[0][1]);
  CHECK(s62.accesses[0][2]);
  CHECK(!s62.accesses[1][2]);

  Strata sp = analyze_strata(thue_morse().incidence());
  CHECK(sp.count() == 1);
}

TEST_CASE("pf eigenpairs of the worked blocks") {
  auto [lf, vf] = pf_eigenpair(fibonacci().incidence());
  CHECK(lf == doctest::Approx(kPhi).epsilon(1e-12));
  CHECK(vf(0) / vf(1) == doctest::Approx(kPhi).epsilon(1e-9));

  auto [lt, vt] = pf_eigenpair(thue_morse().incidence());
  CHECK(lt == doctest::Approx(2.0));
  CHECK(vt(0) == doctest::Approx(0.5));

  IntMatrix b(2, 2);
  b.at(0, 0) = 2;
  b.at(0, 1) = 1;
  b.at(1, 0) = 1;
  b.at(1, 1) = 1;
  auto [lb, vb] = pf_eigenpair(b);
  CHECK(lb == doctest::Approx(1 + kPhi).epsilon(1e-12));

  // periodic irreducible block converges thanks to the shift
  Substitution swap2 = from_rules("ab", {"bb", "aa"});
  auto [ls, vs] = pf_eigenpair(swap2.incidence());
  CHECK(ls == doctest::Approx(2.0));
  CHECK(vs(0) == doctest::Approx(0.5));
}

TEST_CASE("distinguished eigenvectors of the worked examples") {
  // periodic-leaf example: two vectors
  auto dv61 = distinguished_eigenvectors(ex_periodic_leaf().incidence());
  REQUIRE(dv61.size() == 2);
  // order follows strata (top first)
  const auto& full = dv61[0];
  const auto& atom = dv61[1];
  CHECK(full.lambda == doctest::Approx(1 + kPhi).epsilon(1e-12));
  CHECK(atom.lambda == doctest::Approx(2.0));
  CHECK(full.support == std::vector<int>{0, 1, 2});
  CHECK(atom.support == std::vector<int>{2});
  CHECK(full.v(0) == doctest::Approx((kPhi - 1) / 3).epsilon(1e-9));
  CHECK(full.v(1) == doctest::Approx((2 - kPhi) / 3).epsilon(1e-9));
  CHECK(full.v(2) == doctest::Approx(2.0 / 3).epsilon(1e-9));
  REQUIRE(atom.lambda_exact.has_value());
  CHECK(*atom.lambda_exact == 2);
  REQUIRE(atom.v_exact.has_value());
  CHECK((*atom.v_exact)[2] == 1);

  // three-measures example: lambda = 3 vector proportional to (12,8,4,8,4)
  auto dv62 = distinguished_eigenvectors(ex_three_measures().incidence());
  REQUIRE(dv62.size() == 3);
  const auto& top = dv62[0];
  REQUIRE(top.lambda_exact.has_value());
  CHECK(*top.lambda_exact == 3);
  REQUIRE(top.v_exact.has_value());
  // (12, 8, 4, 8, 4) / 36
  CHECK((*top.v_exact)[0] == Rat(1, 3));
  CHECK((*top.v_exact)[1] == Rat(2, 9));
  CHECK((*top.v_exact)[2] == Rat(1, 9));
  CHECK((*top.v_exact)[3] == Rat(2, 9));
  CHECK((*top.v_exact)[4] == Rat(1, 9));

  // primitive: exactly one vector, the PF one
  auto dvp = distinguished_eigenvectors(thue_morse().incidence());
  REQUIRE(dvp.size() == 1);
  CHECK(dvp[0].support == std::vector<int>{0, 1});

  // family: exact tie at k = 3 excludes the top stratum
  CHECK(distinguished_eigenvectors(ex_family(1).incidence()).size() == 2);
  CHECK(distinguished_eigenvectors(ex_family(2).incidence()).size() == 2);
  CHECK(distinguished_eigenvectors(ex_family(3).incidence()).size() == 1);
  CHECK(distinguished_eigenvectors(ex_family(4).incidence()).size() == 1);
}

TEST_CASE("eigen residuals are tight") {
  for (const Substitution& s :
       {thue_morse(), fibonacci(), ex_periodic_leaf(), ex_three_measures(), ex_family(1)}) {
    Eigen::MatrixXd m = s.incidence().to_double();
    Eigen::MatrixXd aug = AugmentedMatrix::of(s).matrix().to_double();
    for (const auto& mu : ergodic_measures(s)) {
      CHECK((m * mu.letters - mu.lambda * mu.letters).lpNorm<Eigen::Infinity>() <=
            1e-10 * mu.letters.lpNorm<Eigen::Infinity>());
      CHECK((aug * mu.augmented - mu.lambda * mu.augmented).lpNorm<Eigen::Infinity>() <=
            1e-10 * mu.augmented.lpNorm<Eigen::Infinity>());
    }
  }
}

TEST_CASE("distinguished vectors are eigenvectors of the d! power") {
  for (const Substitution& s : {ex_periodic_leaf(), ex_three_measures()}) {
    const int d = s.domain().size();
    uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= static_cast<uint64_t>(i);
    Eigen::MatrixXd m = s.incidence().to_double();
    for (const auto& dv : distinguished_eigenvectors(s.incidence())) {
      Eigen::VectorXd w = dv.v;
      for (uint64_t k = 0; k < fact; ++k) w = (m * w) / dv.lambda;
      CHECK((w - dv.v).lpNorm<Eigen::Infinity>() <= 1e-8);
    }
  }
}

TEST_CASE("augmented extensions match the worked vectors") {
  Substitution tm = thue_morse();
  auto mus = ergodic_measures(tm);
  REQUIRE(mus.size() == 1);
  const auto& mu = mus[0];
  REQUIRE(mu.has_exact());
  // (1/2)(1, 1, 1/3, 2/3, 2/3, 1/3)
  const RatVector& v = *mu.augmented_exact;
  CHECK(v[0] == Rat(1, 2));
  CHECK(v[1] == Rat(1, 2));
  CHECK(v[2] == Rat(1, 6));
  CHECK(v[3] == Rat(1, 3));
  CHECK(v[4] == Rat(1, 3));
  CHECK(v[5] == Rat(1, 6));

  Substitution fib = fibonacci();
  auto musf = ergodic_measures(fib);
  REQUIRE(musf.size() == 1);
  const auto& f = musf[0].augmented;
  // (1/phi, 1/phi^2, 1/phi^3, 1/phi^2, 1/phi^2, 0)
  CHECK(f(0) == doctest::Approx(1 / kPhi).epsilon(1e-10));
  CHECK(f(1) == doctest::Approx(1 / (kPhi * kPhi)).epsilon(1e-10));
  CHECK(f(2) == doctest::Approx(1 / (kPhi * kPhi * kPhi)).epsilon(1e-10));
  CHECK(f(3) == doctest::Approx(1 / (kPhi * kPhi)).epsilon(1e-10));
  CHECK(f(4) == doctest::Approx(1 / (kPhi * kPhi)).epsilon(1e-10));
  CHECK(f(5) == doctest::Approx(0.0));
}

TEST_CASE("cone intersection agrees with the distinguished eigenvectors") {
  // primitive: a single ray
  Cone ctm = cone_intersection(thue_morse().incidence(), 30);
  REQUIRE(ctm.rays.size() == 1);
  CHECK(ctm.rays[0](0) == doctest::Approx(0.5).epsilon(1e-9));

  for (const Substitution& s : {ex_periodic_leaf(), ex_three_measures(), fibonacci()}) {
    auto dvs = distinguished_eigenvectors(s.incidence());
    Cone cone = cone_intersection(s.incidence(), 60);
    REQUIRE(cone.rays.size() == dvs.size());
    for (const auto& dv : dvs) {
      double best = 1e9;
      for (const auto& ray : cone.rays) best = std::min(best, (ray - dv.v).lpNorm<1>());
      CHECK(best <= 1e-6);
    }
  }
}

TEST_CASE("degenerate near-ties between distinct algebraic eigenvalues are ordered exactly") {
  // blocks with close but distinct PF roots: x^2-3x+1 largest ~2.618 and 21/8 = 2.625
  IntMatrix m(3, 3);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;  // block {0,1}: 1+phi
  m.at(2, 2) = 3;  // block {2}: 3
  m.at(2, 0) = 1;  // {0,1} accesses {2}
  auto dv = distinguished_eigenvectors(m);
  // top stratum has 1+phi < 3: not distinguished; only {2} qualifies
  REQUIRE(dv.size() == 1);
  CHECK(dv[0].support == std::vector<int>{2});
}
