#pragma once

#include <random>

#include "subshift/substitution.hpp"

namespace subshift::testing {

inline Substitution from_rules(const std::string& letters,
                               const std::vector<std::string>& rules) {
  Alphabet a = Alphabet::from_chars(letters);
  std::vector<Word> images;
  for (const auto& r : rules) {
    Word w;
    for (char c : r) {
      auto idx = a.index_of(std::string(1, c));
      if (!idx) fail(errc::parse_error, "fixture rule uses unknown letter");
      w.push_back(*idx);
    }
    images.push_back(std::move(w));
  }
  return Substitution::endo(std::move(a), std::move(images));
}

inline Substitution thue_morse() { return from_rules("ab", {"ab", "ba"}); }
inline Substitution fibonacci() { return from_rules("ab", {"ab", "a"}); }

// a -> acbca, b -> ba, c -> cc: reducible, everywhere growing, with an
// atomic measure on the periodic ...ccc... orbit.
inline Substitution ex_periodic_leaf() { return from_rules("abc", {"acbca", "ba", "cc"}); }

// a -> baaad, b -> bc, c -> cb, d -> de, e -> ed: three strata, three
// ergodic measures.
inline Substitution ex_three_measures() {
  return from_rules("abcde", {"baaad", "bc", "cb", "de", "ed"});
}

// a -> bacaab, b -> aba, c -> tau^k(c), d -> tau^k(d) over tau: c->cd, d->c.
inline Substitution ex_family(int k) {
  Substitution tau = from_rules("cd", {"cd", "c"});
  Substitution tk = power(tau, static_cast<uint64_t>(k));
  Alphabet a = Alphabet::from_chars("abcd");
  auto lift = [](const Word& w) {  // {c,d} indices 0,1 -> 2,3
    Word out;
    for (int32_t x : w.letters()) out.push_back(x + 2);
    return out;
  };
  std::vector<Word> images;
  images.push_back(Word({1, 0, 2, 0, 0, 1}));  // bacaab
  images.push_back(Word({0, 1, 0}));           // aba
  images.push_back(lift(tk.image(0)));
  images.push_back(lift(tk.image(1)));
  return Substitution::endo(std::move(a), std::move(images));
}

inline Word parse(const Substitution& s, const std::string& text) {
  Word w;
  for (char c : text) {
    auto idx = s.domain().index_of(std::string(1, c));
    if (!idx) fail(errc::parse_error, "unknown letter in test word");
    w.push_back(*idx);
  }
  return w;
}

// Deterministic random endomorphisms for property tests.
inline Substitution random_endo(std::mt19937_64& rng, int max_letters, int max_image_len) {
  std::uniform_int_distribution<int> dsize(1, max_letters);
  const int d = dsize(rng);
  std::uniform_int_distribution<int> dlen(1, max_image_len);
  std::uniform_int_distribution<int> dletter(0, d - 1);
  std::vector<Word> images;
  for (int a = 0; a < d; ++a) {
    Word w;
    const int len = dlen(rng);
    for (int i = 0; i < len; ++i) w.push_back(dletter(rng));
    images.push_back(std::move(w));
  }
  std::string letters;
  for (int i = 0; i < d; ++i) letters += static_cast<char>('a' + i);
  return Substitution::endo(Alphabet::from_chars(letters), std::move(images));
}

inline Word random_word(std::mt19937_64& rng, int alphabet_size, int max_len, int min_len = 1) {
  std::uniform_int_distribution<int> dlen(min_len, max_len);
  std::uniform_int_distribution<int> dletter(0, alphabet_size - 1);
  Word w;
  const int len = dlen(rng);
  for (int i = 0; i < len; ++i) w.push_back(dletter(rng));
  return w;
}

inline constexpr double kPhi = 1.6180339887498948482;

}  // namespace subshift::testing
