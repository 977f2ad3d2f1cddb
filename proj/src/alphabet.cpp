#include "subshift/alphabet.hpp"

namespace subshift {

const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_letter: return "InvalidLetter";
    case errc::alphabet_mismatch: return "AlphabetMismatch";
    case errc::empty_pattern: return "EmptyPattern";
    case errc::empty_image: return "EmptyImage";
    case errc::everywhere_growing_required: return "EverywhereGrowingRequired";
    case errc::degenerate_spectrum: return "DegenerateSpectrum";
    case errc::singular_system: return "SingularSystem";
    case errc::level_too_small: return "LevelTooSmall";
    case errc::horizon_exceeded: return "HorizonExceeded";
    case errc::compatibility_violation: return "CompatibilityViolation";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::non_convergence: return "NonConvergence";
    case errc::word_too_long: return "WordTooLong";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) fail(errc::parse_error, "alphabet must be non-empty");
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    if (symbols_[i].empty()) fail(errc::parse_error, "empty alphabet symbol");
    auto [it, inserted] = index_.emplace(symbols_[i], i);
    if (!inserted) fail(errc::parse_error, "duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

Alphabet Alphabet::from_chars(std::string_view letters) {
  std::vector<std::string> symbols;
  symbols.reserve(letters.size());
  for (char c : letters) symbols.emplace_back(1, c);
  return Alphabet(std::move(symbols));
}

std::optional<int> Alphabet::index_of(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace subshift
