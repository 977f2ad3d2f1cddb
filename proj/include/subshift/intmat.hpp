#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

// Dense matrix with exact arbitrary-precision integer entries.  All
// combinatorial data (incidence matrices, occurrence counts) lives here;
// floating point enters only for spectral computations.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  IntMatrix pow(uint64_t n) const;
  IntMatrix transpose() const;

  bool is_square() const { return rows_ == cols_; }
  bool all_positive() const;
  bool all_nonnegative() const;
  mpz_class max_abs() const;

  Eigen::MatrixXd to_double() const;
  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Standard Kronecker product; row/column index (i,k) maps to i*P.rows()+k,
// matching the lexicographic order on letter pairs.
IntMatrix kronecker(const IntMatrix& s, const IntMatrix& p);

// 0/1 support pattern, used where only positivity of (products of) huge
// matrices matters.
class BoolMatrix {
 public:
  BoolMatrix() : rows_(0), cols_(0) {}
  BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, false) {}
  static BoolMatrix identity(int n);
  static BoolMatrix of(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // std::vector<bool> proxies cannot bind to bool&; use setters/getters.
  void set(int r, int c, bool v = true) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
  bool get(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  BoolMatrix operator*(const BoolMatrix& rhs) const;
  bool all_true() const;

 private:
  int rows_, cols_;
  std::vector<bool> a_;
};

}  // namespace subshift
