#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

// A finite sequence of letter indices.  Words do not own their alphabet;
// index validity is enforced wherever a word meets an Alphabet (parsing,
// substitution application).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int32_t> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int32_t> letters) : letters_(letters) {}

  static Word single(int32_t a) { return Word({a}); }
  static Word pair(int32_t a, int32_t b) { return Word({a, b}); }

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int32_t operator[](size_t i) const { return letters_[i]; }
  const std::vector<int32_t>& letters() const { return letters_; }
  std::vector<int32_t>& letters() { return letters_; }
  std::span<const int32_t> span() const { return letters_; }

  void append(const Word& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }
  void push_back(int32_t a) { letters_.push_back(a); }
  Word concat(const Word& w) const {
    Word r = *this;
    r.append(w);
    return r;
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  // Canonical enumeration order: by length, then lexicographic.
  bool operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<int32_t> letters_;
};

// Number of (possibly overlapping) start positions p with text[p..p+|pattern|) = pattern.
// |pattern| >= 1 is required.
int64_t count_occurrences(const Word& text, const Word& pattern);

// Occurrences of `pattern` in the concatenation left.right that straddle the
// seam, i.e. start in `left` and end in `right`.  Equals
// count(left.right) - count(left) - count(right).
int64_t count_straddling(const Word& left, const Word& right, const Word& pattern);

}  // namespace subshift
