// Command-line front end: substitution analysis, invariant measures,
// cylinder values, directive-sequence reports, and the self-check suite.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "subshift/constructions.hpp"
#include "subshift/io.hpp"
#include "subshift/measure.hpp"
#include "subshift/oracle.hpp"

using namespace subshift;
using nlohmann::json;

namespace {

int exit_code_for(errc kind) {
  switch (kind) {
    case errc::budget_exceeded:
    case errc::non_convergence:
    case errc::degenerate_spectrum:
    case errc::singular_system:
      return 3;
    default:
      return 2;
  }
}

struct Options {
  std::string input;
  std::string format = "table";
  int precision = 10;
  bool exact = false;
  double tolerance = 1e-9;
  int64_t depth = -1;
};

std::string fmt(double x, int precision) { return format_double(x, precision); }

std::vector<size_t> select_measures(const std::string& selector,
                                    const std::vector<ErgodicMeasure>& mus, const Alphabet& a) {
  if (selector.empty()) {
    std::vector<size_t> all(mus.size());
    for (size_t i = 0; i < mus.size(); ++i) all[i] = i;
    return all;
  }
  if (selector == "full") {
    for (size_t i = 0; i < mus.size(); ++i)
      if (static_cast<int>(mus[i].support.size()) == a.size()) return {i};
    fail(errc::parse_error, "no measure has full support");
  }
  if (!selector.empty() && std::isdigit(static_cast<unsigned char>(selector[0]))) {
    size_t idx = static_cast<size_t>(std::stoul(selector));
    if (idx < 1 || idx > mus.size()) fail(errc::parse_error, "measure index out of range");
    return {idx - 1};
  }
  for (size_t i = 0; i < mus.size(); ++i) {
    std::string sup;
    for (int letter : mus[i].support) sup += a.symbol(letter);
    if (sup == selector) return {i};
  }
  fail(errc::parse_error, "unknown measure selector '" + selector + "'");
}

std::string support_string(const ErgodicMeasure& mu, const Alphabet& a) {
  std::string out;
  for (int letter : mu.support) out += a.symbol(letter);
  return out;
}

int cmd_info(const Options& opt) {
  Substitution s = load_substitution(opt.input);
  const bool growing = is_everywhere_growing(s);
  const bool primitive = is_primitive(s.incidence());
  json j;
  j["alphabet"] = s.codomain().symbols();
  j["rules"] = substitution_to_json(s)["rules"];
  j["everywhere_growing"] = growing;
  j["primitive"] = primitive;
  json strata = json::array();
  Strata st = analyze_strata(s.incidence());
  for (const auto& c : st.components) {
    json sc;
    std::string letters;
    for (int l : c.letters) letters += s.domain().symbol(l);
    sc["letters"] = letters;
    sc["lambda"] = c.lambda;
    sc["primitive"] = c.primitive;
    if (c.lambda_rational) sc["lambda_exact"] = c.lambda_rational->get_str();
    strata.push_back(sc);
  }
  j["strata"] = strata;
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "alphabet:";
  for (const auto& sym : s.codomain().symbols()) std::cout << " " << sym;
  std::cout << "\nrules:\n";
  for (int a = 0; a < s.domain().size(); ++a)
    std::cout << "  " << s.domain().symbol(a) << " -> " << s.image(a).to_string(s.codomain())
              << "\n";
  std::cout << "everywhere growing: " << (growing ? "yes" : "no") << "\n";
  std::cout << "primitive: " << (primitive ? "yes" : "no") << "\n";
  std::cout << "strata (" << st.count() << "):\n";
  for (const auto& c : st.components) {
    std::string letters;
    for (int l : c.letters) letters += s.domain().symbol(l);
    std::cout << "  {" << letters << "}  lambda=" << fmt(c.lambda, opt.precision)
              << (c.primitive ? "  primitive" : "  non-primitive") << "\n";
  }
  return 0;
}

int cmd_matrix(const Options& opt, bool augmented) {
  Substitution s = load_substitution(opt.input);
  IntMatrix m;
  std::vector<std::string> labels;
  if (augmented) {
    AugmentedMatrix aug = AugmentedMatrix::of(s);
    m = aug.matrix();
    labels = aug.row_indexing().labels(s.codomain());
  } else {
    m = s.incidence();
    labels = s.codomain().symbols();
  }
  if (opt.format == "json")
    std::cout << matrix_to_json(m, labels).dump(2) << "\n";
  else
    std::cout << matrix_to_table(m, labels);
  return 0;
}

int cmd_measures(const Options& opt) {
  Substitution s = load_substitution(opt.input);
  auto mus = ergodic_measures(s);
  if (opt.format == "json") {
    json out = json::array();
    for (const auto& mu : mus) {
      json jm;
      jm["name"] = mu.name;
      jm["lambda"] = mu.lambda;
      if (mu.lambda_exact) jm["lambda_exact"] = mu.lambda_exact->get_str();
      jm["support"] = support_string(mu, s.domain());
      json letters = json::object();
      for (int a = 0; a < s.domain().size(); ++a) {
        CylinderValue v{mu.letters(a), std::nullopt};
        if (mu.has_exact()) v.exact = (*mu.letters_exact)[static_cast<size_t>(a)];
        letters[s.domain().symbol(a)] = format_value(v, opt.precision, opt.exact);
      }
      jm["letters"] = letters;
      out.push_back(jm);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& mu : mus) {
    std::cout << mu.name << ": lambda=" << fmt(mu.lambda, opt.precision) << "  support={"
              << support_string(mu, s.domain()) << "}\n";
    for (int a = 0; a < s.domain().size(); ++a) {
      CylinderValue v{mu.letters(a), std::nullopt};
      if (mu.has_exact()) v.exact = (*mu.letters_exact)[static_cast<size_t>(a)];
      std::cout << "  mu([" << s.domain().symbol(a)
                << "]) = " << format_value(v, opt.precision, opt.exact) << "\n";
    }
  }
  return 0;
}

int cmd_cylinder(const Options& opt, const std::string& word_text, const std::string& selector,
                 const std::string& coeffs_text, int table_len, int64_t level) {
  Substitution s = load_substitution(opt.input);
  auto mus = ergodic_measures(s);

  if (table_len > 0) {
    auto rows = cylinder_table(s, table_len, mus);
    if (opt.format == "json") {
      json out = json::array();
      for (const auto& row : rows) {
        json jr;
        jr["word"] = row.word.to_string(s.domain());
        json vals = json::object();
        for (size_t i = 0; i < mus.size(); ++i)
          vals[mus[i].name] = format_value(row.values[i], opt.precision, opt.exact);
        jr["values"] = vals;
        out.push_back(jr);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "word";
    for (const auto& mu : mus) std::cout << "\t" << mu.name;
    std::cout << "\n";
    for (const auto& row : rows) {
      std::cout << row.word.to_string(s.domain());
      for (size_t i = 0; i < mus.size(); ++i)
        std::cout << "\t" << format_value(row.values[i], opt.precision, opt.exact);
      std::cout << "\n";
    }
    return 0;
  }

  Word w = parse_word(word_text, s.domain());
  std::optional<int64_t> n;
  if (level >= 0) n = level;

  if (!coeffs_text.empty()) {
    MeasureCombination combo;
    combo.coeffs.assign(mus.size(), 0.0);
    std::stringstream ss(coeffs_text);
    std::string tok;
    size_t i = 0;
    double sum = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= mus.size()) fail(errc::parse_error, "more coefficients than measures");
      combo.coeffs[i] = std::stod(tok);
      if (combo.coeffs[i] < 0) fail(errc::parse_error, "coefficients must be non-negative");
      sum += combo.coeffs[i];
      ++i;
    }
    if (i != mus.size()) fail(errc::parse_error, "one coefficient per measure required");
    if (std::abs(sum - 1.0) > 1e-9)
      fail(errc::parse_error, "coefficients must sum to 1 for a probability measure");
    auto v = cylinder_measure(s, w, mus, combo, n);
    std::cout << format_value(v, opt.precision, opt.exact) << "\n";
    return 0;
  }

  auto cols = select_measures(selector, mus, s.domain());
  if (opt.format == "json") {
    json out = json::object();
    out["word"] = word_text;
    json vals = json::object();
    for (size_t i : cols) {
      auto v = cylinder_measure(s, w, mus, MeasureCombination::single(i, mus.size()), n);
      vals[mus[i].name] = format_value(v, opt.precision, opt.exact);
    }
    out["values"] = vals;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (size_t i : cols) {
    auto v = cylinder_measure(s, w, mus, MeasureCombination::single(i, mus.size()), n);
    if (cols.size() > 1) std::cout << mus[i].name << ": ";
    std::cout << format_value(v, opt.precision, opt.exact) << "\n";
  }
  return 0;
}

int cmd_sadic_demo(int dim, int levels, const std::string& construction) {
  DirectiveSequence seq = construction == "B" ? build_construction_b(dim, levels)
                                              : build_construction_a(dim, levels);
  auto res = cone_sequence_dim(seq, levels);
  int64_t window = construction == "B" ? dim : 2;
  auto wp = is_weakly_primitive(seq, window, levels);
  std::cout << "construction " << construction << "  d=" << dim << "  levels=" << levels << "\n";
  std::cout << "cone dimension: " << res.dimension << "\n";
  std::cout << "extremal rays: " << res.cone.rays.size() << "\n";
  std::cout << "ray movement at final depth: " << fmt(res.cone.convergence_diameter, 3) << "\n";
  std::cout << "weakly primitive (window " << window << "): " << (wp.ok ? "yes" : "no") << "\n";
  return wp.ok && res.dimension == dim ? 0 : 1;
}

int cmd_sadic_dim(const Options& opt) {
  DirectiveSequence seq = load_directive_sequence(opt.input);
  int64_t depth = opt.depth >= 0 ? opt.depth : std::min<int64_t>(seq.horizon(), 30);
  auto res = cone_sequence_dim(seq, depth);
  std::cout << "depth: " << depth << "\n";
  std::cout << "cone dimension: " << res.dimension << "\n";
  for (const auto& ray : res.cone.rays) {
    std::cout << "ray:";
    for (Eigen::Index i = 0; i < ray.size(); ++i) std::cout << " " << fmt(ray(i), opt.precision);
    std::cout << "\n";
  }
  return 0;
}

int cmd_sadic_weights(const Options& opt, int64_t level, int64_t depth) {
  DirectiveSequence seq = load_directive_sequence(opt.input);
  VectorTowerPrefix tower = [&] {
    if (seq.kind() == DirectiveSequence::Kind::stationary) {
      auto mus = ergodic_measures(seq.term(0));
      return VectorTowerPrefix::eigen_decay(mus[0].letters, mus[0].lambda, seq.horizon());
    }
    return backpropagated_tower(seq, std::min<int64_t>(seq.horizon(), depth + 8));
  }();
  WeightTable wt = local_weights(seq, tower, level, depth);
  const Alphabet& a = seq.level_alphabet(level);
  std::cout << "level " << level << ", truncation depth " << depth << ", last increment "
            << fmt(wt.max_increment(), 3) << "\n";
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      std::cout << "omega[" << a.symbol(x) << a.symbol(y)
                << "] = " << fmt(wt.omega(x, y), opt.precision) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check: the oracle runs first; golden values and structural invariants only
// count if the frequency oracle endorses the formulas.

struct Checker {
  int failures = 0;
  double worst_delta = 0.0;
  void check(bool ok, const std::string& name, double delta = 0.0) {
    worst_delta = std::max(worst_delta, delta);
    std::cout << (ok ? "  ok   " : "  FAIL ") << name;
    if (delta > 0) std::cout << "  (delta " << format_double(delta, 3) << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  void close(const std::string& name, double got, double expect, double tol) {
    double delta = std::abs(got - expect);
    check(delta <= tol, name, delta);
  }
};

int cmd_check(const std::string& fixtures_dir, double tol) {
  Checker ck;
  auto fx = [&](const std::string& name) { return fixtures_dir + "/" + name; };
  const double phi = (1 + std::sqrt(5.0)) / 2;

  Substitution tm = load_substitution(fx("tm.json"));
  Substitution fib = load_substitution(fx("fib.json"));
  Substitution e61 = load_substitution(fx("ex61.json"));
  Substitution e62 = load_substitution(fx("ex62.json"));
  Substitution e63k1 = load_substitution(fx("ex63_k1.json"));
  Substitution e63k2 = load_substitution(fx("ex63_k2.json"));
  Substitution e63k3 = load_substitution(fx("ex63_k3.json"));

  std::cout << "[oracle] sliding-window frequencies vs formula values\n";
  auto mus_tm = ergodic_measures(tm);
  {
    std::vector<std::pair<Word, double>> vals;
    for (const auto& row : cylinder_table(tm, 3, mus_tm))
      vals.push_back({row.word, row.values[0].value});
    auto rep = oracle_vs_formula(tm, 0, vals, 18, 5e-3);
    ck.check(rep.ok, "thue-morse |w|<=3 at N=18", rep.max_delta);
  }
  auto mus_fib = ergodic_measures(fib);
  {
    Word w = parse_word("baabab", fib.domain());
    double v = cylinder_measure(fib, w, mus_fib, MeasureCombination::single(0, 1)).value;
    auto rep = oracle_vs_formula(fib, 0, {{w, v}}, 25, 5e-3);
    ck.check(rep.ok, "fibonacci baabab at N=25", rep.max_delta);
  }
  auto mus_62 = ergodic_measures(e62);
  {
    std::vector<std::pair<Word, double>> vals;
    for (const auto& row : cylinder_table(e62, 2, mus_62))
      vals.push_back({row.word, row.values[0].value});
    auto rep = oracle_vs_formula(e62, 0, vals, 11, 1e-2);
    ck.check(rep.ok, "three-measure example pairs at N=11", rep.max_delta);
  }

  std::cout << "[golden] letter and pair tables\n";
  {
    auto v = cylinder_measure(tm, parse_word("baabab", tm.domain()), mus_tm,
                              MeasureCombination::single(0, 1));
    ck.check(v.exact && *v.exact == Rat(1, 12), "mu_tm([baabab]) = 1/12 exactly");
    auto rows = cylinder_table(tm, 2, mus_tm);
    const Rat expect[6] = {Rat(1, 2), Rat(1, 2), Rat(1, 6), Rat(1, 3), Rat(1, 3), Rat(1, 6)};
    bool ok = true;
    for (int i = 0; i < 6; ++i)
      ok = ok && rows[static_cast<size_t>(i)].values[0].exact &&
           *rows[static_cast<size_t>(i)].values[0].exact == expect[i];
    ck.check(ok, "thue-morse length<=2 table exact");
  }
  {
    const double exp[6] = {1 / phi,         1 / (phi * phi), std::pow(phi, -3.0),
                           1 / (phi * phi), 1 / (phi * phi), 0.0};
    auto rows = cylinder_table(fib, 2, mus_fib);
    double delta = 0;
    for (int i = 0; i < 6; ++i)
      delta = std::max(delta, std::abs(rows[static_cast<size_t>(i)].values[0].value - exp[i]));
    ck.check(delta <= 1e-9, "fibonacci length<=2 table", delta);
    double v = cylinder_measure(fib, parse_word("baabab", fib.domain()), mus_fib,
                                MeasureCombination::single(0, 1))
                   .value;
    ck.close("mu_fib([baabab]) = phi^-4", v, std::pow(phi, -4.0), 1e-9);
  }
  {
    auto mus = ergodic_measures(e61);
    ck.check(mus.size() == 2, "periodic-leaf example has 2 ergodic measures");
    double delta = std::abs(mus[0].letters(0) - (phi - 1) / 3);
    delta = std::max(delta, std::abs(mus[0].letters(1) - (2 - phi) / 3));
    delta = std::max(delta, std::abs(mus[0].letters(2) - 2.0 / 3));
    ck.check(delta <= 1e-9, "full-support letter masses", delta);
    PairIndexing idx(3);
    bool atomic = mus[1].has_exact();
    for (int i = 0; atomic && i < idx.size(); ++i) {
      Rat expect = (i == idx.letter(2) || i == idx.pair(2, 2)) ? 1 : 0;
      atomic = (*mus[1].augmented_exact)[static_cast<size_t>(i)] == expect;
    }
    ck.check(atomic, "bottom measure is atomic on ...ccc...");
    double v = cylinder_measure(e61, parse_word("bcacc", e61.domain()), mus,
                                MeasureCombination::single(0, 2))
                   .value;
    ck.close("mu1([bcacc]) = (3-phi)/(3 phi^4)", v, (3 - phi) / (3 * std::pow(phi, 4.0)), 1e-9);
  }
  {
    ck.check(mus_62.size() == 3, "three-measure example has 3 ergodic measures");
    const auto& full = mus_62[0];
    bool exact = full.has_exact();
    const Rat letters[5] = {Rat(1, 3), Rat(2, 9), Rat(1, 9), Rat(2, 9), Rat(1, 9)};
    for (int a = 0; exact && a < 5; ++a)
      exact = (*full.letters_exact)[static_cast<size_t>(a)] == letters[a];
    ck.check(exact, "full-support letter masses exact");
    auto edb = cylinder_measure(e62, parse_word("edb", e62.domain()), mus_62,
                                MeasureCombination::single(0, 3));
    auto cba = cylinder_measure(e62, parse_word("cba", e62.domain()), mus_62,
                                MeasureCombination::single(0, 3));
    ck.check(edb.exact && *edb.exact == Rat(1, 108), "mu_full([edb]) = 1/108 exactly");
    ck.check(cba.exact && *cba.exact == Rat(1, 27), "mu_full([cba]) = 1/27 exactly");
  }
  {
    auto m1 = ergodic_measures(e63k1);
    auto m2 = ergodic_measures(e63k2);
    auto m3 = ergodic_measures(e63k3);
    ck.check(m1.size() == 2 && m2.size() == 2 && m3.size() == 1, "family measure counts (2,2,1)");
    ck.close("k=1 normalization constant 11 phi + 8", 1.0 / m1[0].letters(3), 11 * phi + 8, 1e-6);
    ck.close("k=2 normalization constant 10 phi + 7", phi / m2[0].letters(3), 10 * phi + 7, 1e-6);
    double delta = std::abs(m3[0].letters(2) - 1 / phi);
    delta = std::max(delta, std::abs(m3[0].letters(3) - 1 / (phi * phi)));
    ck.check(delta <= 1e-9, "k=3 restricts to the fibonacci letter masses", delta);
  }

  std::cout << "[invariants] structural identities\n";
  for (const auto& [name, s] : std::vector<std::pair<std::string, Substitution>>{
           {"tm", tm},
           {"fib", fib},
           {"ex61", e61},
           {"ex62", e62},
           {"ex63_k1", e63k1},
           {"ex63_k3", e63k3}}) {
    auto mus = ergodic_measures(s);
    auto rows = cylinder_table(s, 4, mus);
    std::map<Word, std::vector<double>> table;
    for (const auto& r : rows) {
      std::vector<double> vals;
      for (const auto& v : r.values) vals.push_back(v.value);
      table[r.word] = vals;
    }
    auto rep = consistency_suite(s, table, 4, tol);
    ck.check(rep.ok, "kolmogorov consistency (" + name + ")", rep.max_violation);

    AugmentedMatrix aug = AugmentedMatrix::of(s);
    ck.check(aug.pair_pair_block() == kronecker(s.suffix_matrix(), s.prefix_matrix()),
             "kronecker block structure (" + name + ")");
    ck.check(AugmentedMatrix::of(compose(s, s)).matrix() == aug.matrix() * aug.matrix(),
             "augmented homomorphism (" + name + ")");

    auto dvs = distinguished_eigenvectors(s.incidence());
    Cone cone = cone_intersection(s.incidence(), 60);
    double cdelta = 0;
    for (const auto& dv : dvs) {
      double best = 2.0;
      for (const auto& ray : cone.rays) best = std::min(best, (ray - dv.v).lpNorm<1>());
      cdelta = std::max(cdelta, best);
    }
    if (name == "ex63_k3") {
      // Equal stratum eigenvalues make the cone iteration converge like 1/n,
      // so at depth 60 a residual ray is still visible; assert the one-sided
      // containment plus decay of the residual instead of ray-set equality.
      bool contained = cdelta <= 1e-6 && cone.rays.size() >= dvs.size();
      double r60 = 0, r240 = 0;
      for (const auto& ray : cone.rays) {
        double best = 2.0;
        for (const auto& dv : dvs) best = std::min(best, (ray - dv.v).lpNorm<1>());
        r60 = std::max(r60, best);
      }
      for (const auto& ray : cone_intersection(s.incidence(), 240).rays) {
        double best = 2.0;
        for (const auto& dv : dvs) best = std::min(best, (ray - dv.v).lpNorm<1>());
        r240 = std::max(r240, best);
      }
      ck.check(contained && r240 <= r60 / 2, "eigenvector rays extremal in the cone, residual decays (" + name + ")",
               r240);
    } else {
      bool agree = cone.rays.size() == dvs.size() && cdelta <= 1e-6;
      ck.check(agree, "eigenvector/cone two-route agreement (" + name + ")", cdelta);
    }
  }

  if (ck.failures == 0)
    std::cout << "all checks passed  (worst delta " << format_double(ck.worst_delta, 3) << ")\n";
  else
    std::cout << ck.failures << " check(s) FAILED  (worst delta "
              << format_double(ck.worst_delta, 3) << ")\n";
  return ck.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"substitution subshift measures toolkit"};
  app.require_subcommand(1);
  Options opt;

  std::string word_text, selector, coeffs;
  int table_len = 0;
  int64_t level = -1;
  int demo_dim = 3, demo_levels = 12;
  std::string construction = "A";
  int64_t weights_level = 0, weights_depth = 25;
  std::string fixtures_dir = "fixtures";

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", opt.input, "substitution or sequence file")->required();
    cmd->add_option("--precision", opt.precision, "output digits")->check(CLI::Range(1, 50));
    cmd->add_option("--tolerance", opt.tolerance, "check tolerance");
    cmd->add_option("--format", opt.format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cmd->add_flag("--exact", opt.exact, "print exact fractions where available");
    cmd->add_option("--depth", opt.depth, "depth/horizon budget");
  };

  auto* info = app.add_subcommand("info", "alphabet, growth, primitivity, strata");
  add_common(info, true);

  auto* matrix = app.add_subcommand("matrix", "incidence or augmented incidence matrix");
  bool augmented = false;
  matrix->add_flag("--augmented", augmented, "emit the augmented matrix");
  add_common(matrix, true);

  auto* measures = app.add_subcommand("measures", "ergodic probability measures");
  add_common(measures, true);

  auto* cylinder = app.add_subcommand("cylinder", "measure of a cylinder [w]");
  cylinder->add_option("word", word_text, "cylinder word");
  cylinder->add_option("--measure", selector, "measure selector: index, 'full', or support letters");
  cylinder->add_option("--coeffs", coeffs, "comma-separated convex combination");
  cylinder->add_option("--length", table_len, "emit the full table for |w| <= L");
  cylinder->add_option("--level", level, "evaluation level n (default: minimal admissible)");
  add_common(cylinder, true);

  auto* sadic = app.add_subcommand("sadic", "directive-sequence reports");
  sadic->require_subcommand(1);
  auto* demo = sadic->add_subcommand("demo", "built-in constructions");
  demo->add_option("--dim", demo_dim, "alphabet size d")->check(CLI::Range(1, 8));
  demo->add_option("--levels", demo_levels, "sequence depth");
  demo->add_option("--construction", construction, "A|B")->check(CLI::IsMember({"A", "B"}));
  auto* dim = sadic->add_subcommand("dim", "cone dimension of a sequence");
  add_common(dim, true);
  auto* weights = sadic->add_subcommand("weights", "pair weight table");
  weights->add_option("--level", weights_level, "weight level n");
  add_common(weights, true);
  weights->add_option("--wdepth", weights_depth, "truncation depth (alias of --depth)");

  auto* check = app.add_subcommand("check", "oracle-first invariant and golden-value suite");
  check->add_option("--fixtures", fixtures_dir, "fixture directory");
  check->add_option("--tolerance", opt.tolerance, "consistency tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(info)) return cmd_info(opt);
    if (app.got_subcommand(matrix)) return cmd_matrix(opt, augmented);
    if (app.got_subcommand(measures)) return cmd_measures(opt);
    if (app.got_subcommand(cylinder)) {
      if (word_text.empty() && table_len <= 0)
        fail(errc::parse_error, "cylinder needs a word or --length");
      return cmd_cylinder(opt, word_text, selector, coeffs, table_len, level);
    }
    if (app.got_subcommand(sadic)) {
      if (sadic->got_subcommand(demo)) return cmd_sadic_demo(demo_dim, demo_levels, construction);
      if (sadic->got_subcommand(dim)) return cmd_sadic_dim(opt);
      if (sadic->got_subcommand(weights)) {
        int64_t d = opt.depth >= 0 ? opt.depth : weights_depth;
        return cmd_sadic_weights(opt, weights_level, d);
      }
    }
    if (app.got_subcommand(check)) return cmd_check(fixtures_dir, opt.tolerance);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
