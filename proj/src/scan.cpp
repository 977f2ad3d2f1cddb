#include "subshift/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subshift {

namespace {
inline bool match_at(std::span<const int32_t> text, size_t p, std::span<const int32_t> pat) {
  for (size_t i = 0; i < pat.size(); ++i)
    if (text[p + i] != pat[i]) return false;
  return true;
}
}  // namespace

int64_t count_occurrences_serial(std::span<const int32_t> text, std::span<const int32_t> pattern) {
  if (pattern.empty()) fail(errc::empty_pattern, "pattern must be non-empty");
  if (text.size() < pattern.size()) return 0;
  const size_t starts = text.size() - pattern.size() + 1;
  const int32_t head = pattern[0];
  int64_t count = 0;
  for (size_t p = 0; p < starts; ++p) {
    if (text[p] != head) continue;
    if (match_at(text, p, pattern)) ++count;
  }
  return count;
}

int64_t count_occurrences_parallel(std::span<const int32_t> text, std::span<const int32_t> pattern) {
  if (pattern.empty()) fail(errc::empty_pattern, "pattern must be non-empty");
  if (text.size() < pattern.size()) return 0;
  const int64_t starts = static_cast<int64_t>(text.size() - pattern.size() + 1);
  const int32_t head = pattern[0];
  int64_t count = 0;
  // Start positions are partitioned across threads; each window read may
  // overlap the next chunk by |pattern|-1, which is safe on read-only data.
  // Integer addition commutes, so the reduction is schedule-independent.
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (int64_t p = 0; p < starts; ++p) {
    if (text[static_cast<size_t>(p)] != head) continue;
    if (match_at(text, static_cast<size_t>(p), pattern)) ++count;
  }
  return count;
}

int64_t count_occurrences_fast(std::span<const int32_t> text, std::span<const int32_t> pattern) {
  constexpr size_t kParallelThreshold = 1 << 16;
  if (text.size() >= kParallelThreshold) return count_occurrences_parallel(text, pattern);
  return count_occurrences_serial(text, pattern);
}

std::vector<mpz_class> iterated_lengths(const Substitution& s, uint64_t n) {
  if (!s.is_endo()) fail(errc::alphabet_mismatch, "iterated lengths need an endomorphism");
  const int d = s.domain().size();
  std::vector<mpz_class> len(static_cast<size_t>(d), 1);
  for (uint64_t k = 0; k < n; ++k) {
    std::vector<mpz_class> next(static_cast<size_t>(d), 0);
    for (int a = 0; a < d; ++a)
      for (int32_t b : s.image(a).letters()) next[static_cast<size_t>(a)] += len[static_cast<size_t>(b)];
    len = std::move(next);
  }
  return len;
}

namespace {
Word materialize(const Substitution& s, int letter, uint64_t n, size_t final_len) {
  if (n == 0) return Word::single(letter);
  Word cur = Word::single(letter);
  for (uint64_t k = 0; k < n; ++k) cur = s.apply(cur);
  (void)final_len;
  return cur;
}
}  // namespace

Word iterated_image(const Substitution& s, int letter, uint64_t n, int64_t budget) {
  if (letter < 0 || letter >= s.domain().size())
    fail(errc::invalid_letter, "seed letter outside alphabet");
  auto len = iterated_lengths(s, n);
  const mpz_class& L = len[static_cast<size_t>(letter)];
  if (L > budget)
    fail(errc::budget_exceeded, "iterated image has " + L.get_str() + " letters, budget " +
                                    std::to_string(budget));
  return materialize(s, letter, n, L.get_ui());
}

std::vector<Word> iterated_images(const Substitution& s, uint64_t n, int64_t budget) {
  auto len = iterated_lengths(s, n);
  mpz_class total = 0;
  for (const auto& l : len) total += l;
  if (total > budget)
    fail(errc::budget_exceeded, "iterated images total " + total.get_str() + " letters, budget " +
                                    std::to_string(budget));
  std::vector<Word> out;
  out.reserve(len.size());
  for (int a = 0; a < s.domain().size(); ++a)
    out.push_back(materialize(s, a, n, len[static_cast<size_t>(a)].get_ui()));
  return out;
}

}  // namespace subshift
