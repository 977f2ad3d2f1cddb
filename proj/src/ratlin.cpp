#include "subshift/ratlin.hpp"

namespace subshift {

RatMatrix RatMatrix::of(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(errc::alphabet_mismatch, "rational matvec mismatch");
  RatVector out(static_cast<size_t>(rows_), Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::optional<RatVector> solve_linear(RatMatrix a, RatVector b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    fail(errc::alphabet_mismatch, "solve_linear needs a square system");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
    }
    const Rat inv = 1 / a.at(col, col);
    for (int c = col; c < n; ++c) a.at(col, c) *= inv;
    b[static_cast<size_t>(col)] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rat f = a.at(r, col);
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
    }
  }
  return b;
}

std::optional<RatVector> kernel_1d(RatMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) fail(errc::alphabet_mismatch, "kernel_1d needs a square matrix");
  // reduced row echelon form
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(row, c));
    const Rat inv = 1 / a.at(row, col);
    for (int c = 0; c < n; ++c) a.at(row, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Rat f = a.at(r, col);
      for (int c = 0; c < n; ++c) a.at(r, c) -= f * a.at(row, c);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  if (row != n - 1) return std::nullopt;  // kernel dimension != 1
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) {
      free_col = c;
      break;
    }
  RatVector v(static_cast<size_t>(n), Rat(0));
  v[static_cast<size_t>(free_col)] = 1;
  for (int r = 0; r < row; ++r)
    v[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] = -a.at(r, free_col);
  return v;
}

Rat pow_rat(const Rat& x, uint64_t n) {
  Rat result = 1, base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

}  // namespace subshift
