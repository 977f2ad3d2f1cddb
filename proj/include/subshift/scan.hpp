#pragma once

#include <cstdint>
#include <span>

#include "subshift/substitution.hpp"

namespace subshift {

// Default ceiling on the total number of letters any single operation may
// materialize.  Exceeding it raises budget_exceeded instead of truncating.
inline constexpr int64_t kDefaultBudget = 10'000'000;

// Occurrence-count kernels over large buffers.  The parallel kernel chunks
// the start-position range across threads (chunks overlap by |pattern|-1
// positions implicitly since each thread scans its own start range); counts
// are integers, so the result is independent of scheduling.
int64_t count_occurrences_serial(std::span<const int32_t> text, std::span<const int32_t> pattern);
int64_t count_occurrences_parallel(std::span<const int32_t> text, std::span<const int32_t> pattern);
// Dispatches to the parallel kernel for large texts.
int64_t count_occurrences_fast(std::span<const int32_t> text, std::span<const int32_t> pattern);

// Exact lengths |s^n(a)| for all letters, as big integers.
std::vector<mpz_class> iterated_lengths(const Substitution& s, uint64_t n);

// Materialize s^n(a).  Checks the exact final length against the budget
// before allocating.
Word iterated_image(const Substitution& s, int letter, uint64_t n, int64_t budget = kDefaultBudget);

// Materialize s^n(a) for every letter (shared budget).
std::vector<Word> iterated_images(const Substitution& s, uint64_t n, int64_t budget = kDefaultBudget);

}  // namespace subshift
