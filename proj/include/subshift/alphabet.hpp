#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

// Finite ordered set of letters.  The declaration order is the canonical
// order used for every matrix and vector index in the library.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  // Convenience: one single-char symbol per character of `letters`.
  static Alphabet from_chars(std::string_view letters);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int i) const { return symbols_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<int> index_of(std::string_view symbol) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace subshift
