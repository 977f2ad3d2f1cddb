#include "subshift/augmented.hpp"

namespace subshift {

std::vector<std::string> PairIndexing::labels(const Alphabet& alphabet) const {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(size()));
  for (int a = 0; a < d; ++a) out.push_back(alphabet.symbol(a));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) out.push_back(alphabet.symbol(x) + alphabet.symbol(y));
  return out;
}

AugmentedMatrix AugmentedMatrix::of(const Substitution& s) {
  const int d = s.domain().size();
  const int dc = s.codomain().size();
  PairIndexing cidx(d), ridx(dc);
  IntMatrix full(ridx.size(), cidx.size());

  IntMatrix m = s.incidence();
  for (int i = 0; i < dc; ++i)
    for (int j = 0; j < d; ++j) full.at(i, j) = m.at(i, j);

  IntMatrix sp = kronecker(s.suffix_matrix(), s.prefix_matrix());
  for (int i = 0; i < dc * dc; ++i)
    for (int j = 0; j < d * d; ++j) full.at(dc + i, d + j) = sp.at(i, j);

  // Letter columns, pair rows: occurrences of the pair inside one image.
  for (int y = 0; y < d; ++y) {
    const Word& img = s.image(y);
    for (size_t p = 0; p + 1 < img.size(); ++p)
      full.at(ridx.pair(img[p], img[p + 1]), y) += 1;
  }
  return AugmentedMatrix(s, std::move(full), ridx, cidx);
}

IntMatrix AugmentedMatrix::letter_block() const {
  const int dr = row_idx_.d, dc = col_idx_.d;
  IntMatrix out(dr, dc);
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < dc; ++j) out.at(i, j) = full_.at(i, j);
  return out;
}

IntMatrix AugmentedMatrix::pair_pair_block() const {
  const int dr = row_idx_.d, dc = col_idx_.d;
  IntMatrix out(dr * dr, dc * dc);
  for (int i = 0; i < dr * dr; ++i)
    for (int j = 0; j < dc * dc; ++j) out.at(i, j) = full_.at(dr + i, dc + j);
  return out;
}

IntMatrix AugmentedMatrix::pair_letter_block() const {
  const int dr = row_idx_.d, dc = col_idx_.d;
  IntMatrix out(dr * dr, dc);
  for (int i = 0; i < dr * dr; ++i)
    for (int j = 0; j < dc; ++j) out.at(i, j) = full_.at(dr + i, j);
  return out;
}

}  // namespace subshift
