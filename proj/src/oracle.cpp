#include "subshift/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

FrequencyEstimate letter_frequency(const Substitution& s, int seed_letter, const Word& w,
                                   uint64_t n, int64_t budget) {
  if (w.empty()) fail(errc::empty_pattern, "frequency of the empty word");
  Word text = iterated_image(s, seed_letter, n, budget);
  if (text.size() < w.size())
    fail(errc::level_too_small, "iterated image shorter than the pattern");
  FrequencyEstimate fe;
  fe.w = w;
  fe.seed_letter = seed_letter;
  fe.iterations = n;
  fe.count = count_occurrences(text, w);
  fe.positions = static_cast<int64_t>(text.size() - w.size() + 1);
  fe.estimate = static_cast<double>(fe.count) / static_cast<double>(fe.positions);
  return fe;
}

ConsistencyReport consistency_suite(const Substitution& s,
                                    const std::map<Word, std::vector<double>>& tables,
                                    int max_len, double tol) {
  ConsistencyReport rep;
  const int d = s.domain().size();
  if (tables.empty()) {
    rep.failures.push_back("empty table");
    return rep;
  }
  const size_t nmeasures = tables.begin()->second.size();

  auto value = [&](const Word& w, size_t i) -> double {
    auto it = tables.find(w);
    if (it == tables.end())
      fail(errc::parse_error, "consistency table is missing a word");
    return it->second.at(i);
  };

  for (size_t i = 0; i < nmeasures; ++i) {
    double letter_sum = 0.0;
    for (int a = 0; a < d; ++a) letter_sum += value(Word::single(a), i);
    rep.probability_defect = std::max(rep.probability_defect, std::abs(letter_sum - 1.0));

    // Kolmogorov: both one-letter extensions of w resum to mu([w]).
    std::vector<Word> stack;
    for (const auto& [w, vals] : tables) {
      if (static_cast<int>(w.size()) > max_len - 1) continue;
      double right = 0.0, left = 0.0;
      for (int x = 0; x < d; ++x) {
        Word wx = w;
        wx.push_back(x);
        right += value(wx, i);
        Word xw = Word::single(x);
        xw.append(w);
        left += value(xw, i);
      }
      double base = value(w, i);
      double viol = std::max(std::abs(right - base), std::abs(left - base));
      if (viol > rep.max_violation) rep.max_violation = viol;
      if (viol > tol)
        rep.failures.push_back("kolmogorov violation " + std::to_string(viol) + " at measure " +
                               std::to_string(i + 1));
    }
  }
  if (rep.probability_defect > 1e-12)
    rep.failures.push_back("letter masses do not sum to 1");
  rep.ok = rep.failures.empty();
  return rep;
}

OracleReport oracle_vs_formula(const Substitution& s, int seed_letter,
                               const std::vector<std::pair<Word, double>>& formula_values,
                               uint64_t n, double tol, int64_t budget) {
  OracleReport rep;
  Word text = iterated_image(s, seed_letter, n, budget);
  for (const auto& [w, formula] : formula_values) {
    if (text.size() < w.size()) fail(errc::level_too_small, "image shorter than a test word");
    OracleRow row;
    row.w = w;
    row.formula = formula;
    row.iterations = n;
    int64_t cnt = count_occurrences(text, w);
    row.estimate =
        static_cast<double>(cnt) / static_cast<double>(text.size() - w.size() + 1);
    row.delta = std::abs(row.estimate - row.formula);
    rep.max_delta = std::max(rep.max_delta, row.delta);
    rep.rows.push_back(row);
  }
  rep.ok = rep.max_delta <= tol;
  return rep;
}

}  // namespace subshift
