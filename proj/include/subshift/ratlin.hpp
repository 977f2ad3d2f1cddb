#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "subshift/intmat.hpp"

namespace subshift {

using Rat = mpq_class;
using RatVector = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static RatMatrix of(const IntMatrix& m);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatVector apply(const RatVector& v) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Exact Gaussian elimination.  Returns nullopt when the system is singular.
std::optional<RatVector> solve_linear(RatMatrix a, RatVector b);

// One-dimensional kernel of a (expected for simple eigenvalues); nullopt when
// the kernel dimension differs from 1.
std::optional<RatVector> kernel_1d(RatMatrix a);

Rat pow_rat(const Rat& x, uint64_t n);

}  // namespace subshift
