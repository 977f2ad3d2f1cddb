#include "subshift/measure.hpp"

#include <algorithm>

namespace subshift {

namespace {

bool support_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<ErgodicMeasure> ergodic_measures(const Substitution& s, double tol) {
  if (!s.is_endo())
    fail(errc::alphabet_mismatch, "ergodic measures need an endomorphism");
  if (!is_everywhere_growing(s))
    fail(errc::everywhere_growing_required, "ergodic_measures");
  AugmentedMatrix aug = AugmentedMatrix::of(s);
  auto dvs = distinguished_eigenvectors(s.incidence(), tol);

  std::vector<ErgodicMeasure> out;
  out.reserve(dvs.size());
  for (const auto& dv : dvs) {
    ErgodicMeasure m;
    m.lambda = dv.lambda;
    m.lambda_exact = dv.lambda_exact;
    m.letters = dv.v;
    m.support = dv.support;
    m.augmented = extend_to_augmented(aug, dv.lambda, dv.v, tol);
    if (dv.lambda_exact && dv.v_exact) {
      m.letters_exact = dv.v_exact;
      m.augmented_exact = extend_to_augmented_exact(aug, *dv.lambda_exact, *dv.v_exact);
      for (int i = 0; i < m.augmented.size(); ++i)
        m.augmented(i) = (*m.augmented_exact)[static_cast<size_t>(i)].get_d();
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const ErgodicMeasure& a, const ErgodicMeasure& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return support_less(a.support, b.support);
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].name = "mu" + std::to_string(i + 1);
  return out;
}

int64_t sigma_w_large(const Substitution& s, const Word& w) {
  if (!s.is_endo()) fail(errc::alphabet_mismatch, "sigma_w_large needs an endomorphism");
  const int64_t need = static_cast<int64_t>(w.size()) - 1;
  if (need <= 1) return 0;  // |w| <= 2: level 0 is always large enough
  if (!is_everywhere_growing(s)) fail(errc::everywhere_growing_required, "sigma_w_large");
  const int d = s.domain().size();
  std::vector<mpz_class> len(static_cast<size_t>(d), 1);
  for (int64_t n = 0;; ++n) {
    bool ok = true;
    for (const auto& l : len)
      if (l < need) {
        ok = false;
        break;
      }
    if (ok) return n;
    if (n > 100000) fail(errc::non_convergence, "sigma_w_large did not stabilize");
    std::vector<mpz_class> next(static_cast<size_t>(d), 0);
    for (int a = 0; a < d; ++a)
      for (int32_t b : s.image(a).letters()) next[static_cast<size_t>(a)] += len[static_cast<size_t>(b)];
    len = std::move(next);
  }
}

OccurrenceVector occurrence_vector(const Substitution& s, const Word& w, int64_t n, int64_t budget) {
  if (w.empty()) fail(errc::empty_pattern, "occurrence vector of the empty word");
  if (n < sigma_w_large(s, w))
    fail(errc::level_too_small, "level " + std::to_string(n) + " is not (s,w)-large");
  const int d = s.domain().size();
  PairIndexing idx(d);
  auto imgs = iterated_images(s, static_cast<uint64_t>(n), budget);

  OccurrenceVector out;
  out.w = w;
  out.level = n;
  out.coeffs.assign(static_cast<size_t>(idx.size()), 0);
  for (int a = 0; a < d; ++a)
    out.coeffs[static_cast<size_t>(a)] = count_occurrences(imgs[static_cast<size_t>(a)], w);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      out.coeffs[static_cast<size_t>(idx.pair(x, y))] =
          count_straddling(imgs[static_cast<size_t>(x)], imgs[static_cast<size_t>(y)], w);
  return out;
}

bool occurrence_recursion_check(const Substitution& s, const Word& w, int64_t m, int64_t n,
                                int64_t budget) {
  if (n < m) fail(errc::level_too_small, "recursion check needs n >= m");
  OccurrenceVector vm = occurrence_vector(s, w, m, budget);
  OccurrenceVector vn = occurrence_vector(s, w, n, budget);
  IntMatrix ap = AugmentedMatrix::of(s).matrix().pow(static_cast<uint64_t>(n - m));
  const int size = ap.rows();
  for (int j = 0; j < size; ++j) {
    mpz_class acc = 0;
    for (int i = 0; i < size; ++i)
      if (vm.coeffs[static_cast<size_t>(i)] != 0)
        acc += mpz_class(static_cast<long>(vm.coeffs[static_cast<size_t>(i)])) * ap.at(i, j);
    if (acc != vn.coeffs[static_cast<size_t>(j)]) return false;
  }
  return true;
}

namespace {

CylinderValue combine(const OccurrenceVector& ov, const std::vector<ErgodicMeasure>& measures,
                      const MeasureCombination& combo) {
  if (combo.coeffs.size() != measures.size())
    fail(errc::alphabet_mismatch, "combination length must match the measure list");
  CylinderValue out;
  double acc = 0.0;
  for (size_t i = 0; i < measures.size(); ++i) {
    if (combo.coeffs[i] == 0.0) continue;
    const auto& mu = measures[i];
    double dot = 0.0;
    for (size_t k = 0; k < ov.coeffs.size(); ++k)
      if (ov.coeffs[k] != 0) dot += static_cast<double>(ov.coeffs[k]) * mu.augmented(static_cast<Eigen::Index>(k));
    acc += combo.coeffs[i] * dot / std::pow(mu.lambda, static_cast<double>(ov.level));
  }
  out.value = acc;

  bool exact_ok = true;
  for (size_t i = 0; i < measures.size(); ++i)
    if (combo.coeffs[i] != 0.0 && !measures[i].has_exact()) exact_ok = false;
  if (exact_ok) {
    Rat accx(0);
    for (size_t i = 0; i < measures.size(); ++i) {
      if (combo.coeffs[i] == 0.0) continue;
      const auto& mu = measures[i];
      Rat dot(0);
      for (size_t k = 0; k < ov.coeffs.size(); ++k)
        if (ov.coeffs[k] != 0)
          dot += Rat(static_cast<long>(ov.coeffs[k])) * (*mu.augmented_exact)[k];
      Rat weight(combo.coeffs[i]);
      weight.canonicalize();
      accx += weight * dot / pow_rat(*mu.lambda_exact, static_cast<uint64_t>(ov.level));
    }
    out.exact = accx;
    out.value = accx.get_d();
  }
  return out;
}

}  // namespace

CylinderValue cylinder_measure(const Substitution& s, const Word& w,
                               const std::vector<ErgodicMeasure>& measures,
                               const MeasureCombination& combo, std::optional<int64_t> n,
                               int64_t budget) {
  int64_t level = n ? *n : sigma_w_large(s, w);
  OccurrenceVector ov = occurrence_vector(s, w, level, budget);
  return combine(ov, measures, combo);
}

CylinderValue cylinder_measure_short(const Word& w, const ErgodicMeasure& measure) {
  const int d = static_cast<int>(measure.letters.size());
  PairIndexing idx(d);
  CylinderValue out;
  if (w.size() != 1 && w.size() != 2)
    fail(errc::word_too_long, "short cylinder lookup handles |w| in {1,2}");
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0 || w[i] >= d) fail(errc::invalid_letter, "letter outside alphabet");
  const int coord = w.size() == 1 ? idx.letter(w[0]) : idx.pair(w[0], w[1]);
  out.value = measure.augmented(coord);
  if (measure.has_exact()) out.exact = (*measure.augmented_exact)[static_cast<size_t>(coord)];
  return out;
}

std::vector<CylinderTableRow> cylinder_table(const Substitution& s, int max_len,
                                             const std::vector<ErgodicMeasure>& measures,
                                             int64_t budget) {
  if (max_len < 1) fail(errc::empty_pattern, "table needs max_len >= 1");
  const int d = s.domain().size();
  PairIndexing idx(d);
  std::vector<CylinderTableRow> rows;

  for (int len = 1; len <= max_len; ++len) {
    // One shared materialization per word length.
    Word probe;
    for (int i = 0; i < len; ++i) probe.push_back(0);
    const int64_t level = sigma_w_large(s, probe);
    auto imgs = iterated_images(s, static_cast<uint64_t>(level), budget);

    int64_t nwords = 1;
    for (int i = 0; i < len; ++i) nwords *= d;
    std::vector<CylinderTableRow> batch(static_cast<size_t>(nwords));

#pragma omp parallel for schedule(dynamic)
    for (int64_t code = 0; code < nwords; ++code) {
      Word w;
      int64_t c = code;
      for (int i = 0; i < len; ++i) {
        w.letters().insert(w.letters().begin(), static_cast<int32_t>(c % d));
        c /= d;
      }
      OccurrenceVector ov;
      ov.w = w;
      ov.level = level;
      ov.coeffs.assign(static_cast<size_t>(idx.size()), 0);
      for (int a = 0; a < d; ++a)
        ov.coeffs[static_cast<size_t>(a)] = count_occurrences_serial(imgs[static_cast<size_t>(a)].span(), w.span());
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          ov.coeffs[static_cast<size_t>(idx.pair(x, y))] =
              count_straddling(imgs[static_cast<size_t>(x)], imgs[static_cast<size_t>(y)], w);
      CylinderTableRow row;
      row.word = w;
      row.values.reserve(measures.size());
      for (size_t i = 0; i < measures.size(); ++i)
        row.values.push_back(combine(ov, measures, MeasureCombination::single(i, measures.size())));
      batch[static_cast<size_t>(code)] = std::move(row);
    }
    for (auto& row : batch) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace subshift
