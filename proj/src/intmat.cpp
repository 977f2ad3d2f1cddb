#include "subshift/intmat.hpp"

#include <sstream>

namespace subshift {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::alphabet_mismatch, "matrix dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  mpz_class acc, term;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const mpz_class& bkj = rhs.at(k, j);
        if (bkj == 0) continue;
        term = aik * bkj;
        out.at(i, j) += term;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(errc::alphabet_mismatch, "matrix dimension mismatch in sum");
  IntMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

IntMatrix IntMatrix::pow(uint64_t n) const {
  if (!is_square()) fail(errc::alphabet_mismatch, "matrix power needs a square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::all_positive() const {
  for (const auto& x : a_)
    if (x <= 0) return false;
  return true;
}

bool IntMatrix::all_nonnegative() const {
  for (const auto& x : a_)
    if (x < 0) return false;
  return true;
}

mpz_class IntMatrix::max_abs() const {
  mpz_class m = 0;
  for (const auto& x : a_) {
    mpz_class ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

Eigen::MatrixXd IntMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).get_d();
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix kronecker(const IntMatrix& s, const IntMatrix& p) {
  IntMatrix out(s.rows() * p.rows(), s.cols() * p.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) {
      if (s.at(i, j) == 0) continue;
      for (int k = 0; k < p.rows(); ++k)
        for (int l = 0; l < p.cols(); ++l)
          if (p.at(k, l) != 0) out.at(i * p.rows() + k, j * p.cols() + l) = s.at(i, j) * p.at(k, l);
    }
  return out;
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::of(const IntMatrix& m) {
  BoolMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out.set(i, j);
  return out;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::alphabet_mismatch, "pattern dimension mismatch in product");
  BoolMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (get(i, k))
        for (int j = 0; j < rhs.cols_; ++j)
          if (rhs.get(k, j)) out.set(i, j);
  return out;
}

bool BoolMatrix::all_true() const {
  for (bool b : a_)
    if (!b) return false;
  return true;
}

}  // namespace subshift
