#include "subshift/substitution.hpp"

#include <algorithm>
#include <queue>

#include "subshift/scan.hpp"

namespace subshift {

Substitution::Substitution(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.size())
    fail(errc::parse_error, "one image per domain letter required");
  for (const Word& img : images_) {
    if (img.empty()) fail(errc::empty_image, "substitution images must be non-empty");
    for (int32_t a : img.letters())
      if (a < 0 || a >= codomain_.size())
        fail(errc::invalid_letter, "image letter outside codomain alphabet");
  }
}

Substitution Substitution::endo(Alphabet alphabet, std::vector<Word> images) {
  Alphabet copy = alphabet;
  return Substitution(std::move(alphabet), std::move(copy), std::move(images));
}

Substitution Substitution::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(alphabet.size()));
  for (int a = 0; a < alphabet.size(); ++a) images.push_back(Word::single(a));
  return Substitution(alphabet, alphabet, std::move(images));
}

const Word& Substitution::image(int letter) const {
  if (letter < 0 || letter >= domain_.size())
    fail(errc::invalid_letter, "letter index outside domain alphabet");
  return images_[static_cast<size_t>(letter)];
}

Word Substitution::apply(const Word& w) const {
  size_t total = 0;
  for (int32_t a : w.letters()) {
    if (a < 0 || a >= domain_.size()) fail(errc::invalid_letter, "letter outside domain alphabet");
    total += images_[static_cast<size_t>(a)].size();
  }
  Word out;
  out.letters().reserve(total);
  for (int32_t a : w.letters()) out.append(images_[static_cast<size_t>(a)]);
  return out;
}

IntMatrix Substitution::incidence() const {
  IntMatrix m(codomain_.size(), domain_.size());
  for (int a = 0; a < domain_.size(); ++a)
    for (int32_t b : images_[static_cast<size_t>(a)].letters()) m.at(b, a) += 1;
  return m;
}

IntMatrix Substitution::prefix_matrix() const {
  IntMatrix m(codomain_.size(), domain_.size());
  for (int a = 0; a < domain_.size(); ++a) m.at(first_letter(a), a) = 1;
  return m;
}

IntMatrix Substitution::suffix_matrix() const {
  IntMatrix m(codomain_.size(), domain_.size());
  for (int a = 0; a < domain_.size(); ++a) m.at(last_letter(a), a) = 1;
  return m;
}

Substitution compose(const Substitution& s, const Substitution& t) {
  if (t.codomain() != s.domain())
    fail(errc::alphabet_mismatch, "compose: inner codomain must equal outer domain");
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(t.domain().size()));
  for (int a = 0; a < t.domain().size(); ++a) images.push_back(s.apply(t.image(a)));
  return Substitution(t.domain(), s.codomain(), std::move(images));
}

Substitution power(const Substitution& s, uint64_t n) {
  if (!s.is_endo()) fail(errc::alphabet_mismatch, "power needs equal domain and codomain");
  Substitution result = Substitution::identity(s.domain());
  Substitution base = s;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

std::vector<bool> growing_letters(const Substitution& s) {
  if (!s.is_endo()) fail(errc::alphabet_mismatch, "growth analysis needs an endomorphism");
  const int d = s.domain().size();
  // adjacency: a -> letters occurring in s(a)
  std::vector<std::vector<int>> adj(static_cast<size_t>(d));
  for (int a = 0; a < d; ++a) {
    std::vector<bool> seen(static_cast<size_t>(d), false);
    for (int32_t b : s.image(a).letters())
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        adj[static_cast<size_t>(a)].push_back(b);
      }
  }
  // reach[a][b]: b reachable from a in >= 1 step
  std::vector<std::vector<bool>> reach(static_cast<size_t>(d),
                                       std::vector<bool>(static_cast<size_t>(d), false));
  for (int a = 0; a < d; ++a) {
    std::queue<int> q;
    for (int b : adj[static_cast<size_t>(a)])
      if (!reach[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        reach[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
        q.push(b);
      }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)])
        if (!reach[static_cast<size_t>(a)][static_cast<size_t>(v)]) {
          reach[static_cast<size_t>(a)][static_cast<size_t>(v)] = true;
          q.push(v);
        }
    }
  }
  // a letter u lies on a cycle iff u reaches u; a grows iff it reaches a
  // cycle vertex whose image has length >= 2 (the cycle pumps the long image
  // back into itself).
  std::vector<bool> growing(static_cast<size_t>(d), false);
  for (int a = 0; a < d; ++a) {
    for (int u = 0; u < d; ++u) {
      bool reaches_u = (u == a) || reach[static_cast<size_t>(a)][static_cast<size_t>(u)];
      if (reaches_u && reach[static_cast<size_t>(u)][static_cast<size_t>(u)] &&
          s.image(u).size() >= 2) {
        growing[static_cast<size_t>(a)] = true;
        break;
      }
    }
  }
  return growing;
}

bool is_everywhere_growing(const Substitution& s) {
  auto g = growing_letters(s);
  return std::all_of(g.begin(), g.end(), [](bool b) { return b; });
}

bool is_primitive(const IntMatrix& m) {
  if (!m.is_square()) fail(errc::alphabet_mismatch, "primitivity needs a square matrix");
  const int d = m.rows();
  BoolMatrix p = BoolMatrix::of(m);
  BoolMatrix acc = p;
  const int bound = (d - 1) * (d - 1) + 1;  // Wielandt
  for (int k = 1; k <= bound; ++k) {
    if (acc.all_true()) return true;
    if (k < bound) acc = acc * p;
  }
  return false;
}

std::set<Word> language_factors(const Substitution& s, int length, int depth, int64_t budget) {
  if (length < 1) fail(errc::empty_pattern, "factor length must be positive");
  if (!is_everywhere_growing(s)) fail(errc::everywhere_growing_required, "language_factors");
  std::set<Word> out;
  auto imgs = iterated_images(s, static_cast<uint64_t>(depth), budget);
  for (const Word& img : imgs) {
    if (img.size() < static_cast<size_t>(length)) continue;
    for (size_t p = 0; p + static_cast<size_t>(length) <= img.size(); ++p) {
      Word f(std::vector<int32_t>(img.letters().begin() + static_cast<ptrdiff_t>(p),
                                  img.letters().begin() + static_cast<ptrdiff_t>(p + length)));
      out.insert(std::move(f));
    }
  }
  return out;
}

std::vector<int64_t> count_vector(const Word& w, int alphabet_size) {
  std::vector<int64_t> v(static_cast<size_t>(alphabet_size), 0);
  for (int32_t a : w.letters()) v.at(static_cast<size_t>(a)) += 1;
  return v;
}

}  // namespace subshift
