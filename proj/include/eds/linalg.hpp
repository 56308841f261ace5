#pragma once

#include <optional>
#include <vector>

#include "eds/rational.hpp"

namespace eds {

/// Dense matrix of exact rationals.  Rank uses fraction-free (Bareiss)
/// elimination on the denominator-cleared integer matrix; reduced echelon
/// form and kernels use rational Gauss-Jordan.  Pivot choice is always
/// leftmost column first, lowest row index first, so results are
/// deterministic and bit-identical across runs.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);

  int rank() const;

  /// Reduced row echelon form; pivot column indices reported through `pivots`.
  RationalMatrix rref(std::vector<int>* pivots = nullptr) const;

  /// Canonical kernel basis: one vector per free column, with entry 1 at the
  /// free column, in increasing free-column order.
  std::vector<std::vector<Rational>> nullspace() const;

  /// One solution of A x = rhs with all free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

  std::optional<RationalMatrix> inverse() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

}  // namespace eds
