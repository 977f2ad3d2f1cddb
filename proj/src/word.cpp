#include "subshift/word.hpp"

#include "subshift/scan.hpp"

namespace subshift {

std::string Word::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (int32_t a : letters_) {
    if (a < 0 || a >= alphabet.size()) fail(errc::invalid_letter, "letter index out of range");
    out += alphabet.symbol(a);
  }
  return out;
}

int64_t count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) fail(errc::empty_pattern, "pattern must be non-empty");
  return count_occurrences_fast(text.span(), pattern.span());
}

int64_t count_straddling(const Word& left, const Word& right, const Word& pattern) {
  if (pattern.empty()) fail(errc::empty_pattern, "pattern must be non-empty");
  const size_t m = pattern.size();
  if (m < 2) return 0;  // length-1 patterns cannot straddle the seam
  // Occurrences in suffix(left, m-1) + prefix(right, m-1) are exactly the
  // straddling ones: both sides are too short to contain the pattern alone.
  const size_t ltake = std::min(left.size(), m - 1);
  const size_t rtake = std::min(right.size(), m - 1);
  std::vector<int32_t> seam;
  seam.reserve(ltake + rtake);
  seam.insert(seam.end(), left.letters().end() - static_cast<ptrdiff_t>(ltake), left.letters().end());
  seam.insert(seam.end(), right.letters().begin(), right.letters().begin() + static_cast<ptrdiff_t>(rtake));
  return count_occurrences_serial(seam, pattern.span());
}

}  // namespace subshift
