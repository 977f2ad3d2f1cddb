#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "subshift/measure.hpp"
#include "subshift/oracle.hpp"

using namespace subshift;
using namespace subshift::testing;

TEST_CASE("letter frequencies approach the known values") {
  Substitution tm = thue_morse();
  auto fe = letter_frequency(tm, 0, parse(tm, "ab"), 18);
  CHECK(std::abs(fe.estimate - 1.0 / 3) <= 2e-3);
  CHECK(fe.positions >= 1);
  CHECK(fe.estimate >= 0.0);
  CHECK(fe.estimate <= 1.0);

  // seeding inside the bottom stratum of the periodic-leaf example: the
  // subshift there is the single periodic orbit, so cc has frequency ~1
  Substitution s = ex_periodic_leaf();
  auto fcc = letter_frequency(s, 2, parse(s, "cc"), 12);
  CHECK(fcc.estimate >= 1.0 - 1e-3);

  auto fz = letter_frequency(tm, 0, parse(tm, "bbb"), 12);
  CHECK(fz.estimate == 0.0);
}

TEST_CASE("estimates tighten as the iterate deepens") {
  Substitution tm = thue_morse();
  Word w = parse(tm, "ab");
  const double target = 1.0 / 3;
  double prev_err = -1;
  for (uint64_t n : {12, 14, 16, 18}) {
    auto fe = letter_frequency(tm, 0, w, n);
    double err = std::abs(fe.estimate - target);
    if (prev_err >= 0) CHECK(err <= 2 * prev_err + 1e-9);  // slack factor 2
    prev_err = err;
  }
}

TEST_CASE("frequency oracle vs cylinder formula: primitive fixtures") {
  Substitution tm = thue_morse();
  auto mus = ergodic_measures(tm);
  std::vector<std::pair<Word, double>> vals;
  for (const auto& row : cylinder_table(tm, 3, mus))
    vals.push_back({row.word, row.values[0].value});
  auto rep = oracle_vs_formula(tm, 0, vals, 18, 5e-3);
  CHECK(rep.ok);

  Substitution fib = fibonacci();
  auto musf = ergodic_measures(fib);
  auto v = cylinder_measure(fib, parse(fib, "baabab"), musf, MeasureCombination::single(0, 1));
  auto repf = oracle_vs_formula(fib, 0, {{parse(fib, "baabab"), v.value}}, 25, 5e-3);
  CHECK(repf.ok);
  CHECK(std::abs(v.value - std::pow(kPhi, -4.0)) <= 1e-9);
}

TEST_CASE("frequency oracle vs formula: reducible fixtures") {
  // seeding at the dominating stratum targets the full-support measure
  Substitution s62 = ex_three_measures();
  auto mus = ergodic_measures(s62);
  std::vector<std::pair<Word, double>> vals;
  for (const auto& row : cylinder_table(s62, 2, mus))
    vals.push_back({row.word, row.values[0].value});
  auto rep = oracle_vs_formula(s62, 0, vals, 11, 1e-2);
  CHECK(rep.ok);

  // the two contested length-3 cylinders: the oracle rules on the formula
  auto combo = MeasureCombination::single(0, 3);
  double edb = cylinder_measure(s62, parse(s62, "edb"), mus, combo).value;
  double cba = cylinder_measure(s62, parse(s62, "cba"), mus, combo).value;
  auto rep3 = oracle_vs_formula(
      s62, 0, {{parse(s62, "edb"), edb}, {parse(s62, "cba"), cba}}, 12, 2e-3);
  CHECK(rep3.ok);
  CHECK(edb == doctest::Approx(1.0 / 108).epsilon(1e-9));
  CHECK(cba == doctest::Approx(1.0 / 27).epsilon(1e-9));

  // periodic-leaf example, seeded at the top stratum: slower convergence
  // (eigenvalue ratio 2/phi^2), so a looser tolerance at this depth
  Substitution s61 = ex_periodic_leaf();
  auto mus61 = ergodic_measures(s61);
  double bcacc =
      cylinder_measure(s61, parse(s61, "bcacc"), mus61, MeasureCombination::single(0, 2)).value;
  auto rep61 = oracle_vs_formula(s61, 0, {{parse(s61, "bcacc"), bcacc}}, 14, 2e-2);
  CHECK(rep61.ok);
  CHECK(bcacc == doctest::Approx((3 - kPhi) / (3 * std::pow(kPhi, 4))).epsilon(1e-9));
}

TEST_CASE("consistency suite flags broken tables") {
  Substitution tm = thue_morse();
  auto mus = ergodic_measures(tm);
  std::map<Word, std::vector<double>> table;
  for (const auto& row : cylinder_table(tm, 3, mus)) table[row.word] = {row.values[0].value};
  auto good = consistency_suite(tm, table, 3, 1e-9);
  CHECK(good.ok);
  table[parse(tm, "ab")][0] += 0.01;  // inject a fault
  auto bad = consistency_suite(tm, table, 3, 1e-9);
  CHECK(!bad.ok);
  CHECK(bad.max_violation >= 0.009);
}
