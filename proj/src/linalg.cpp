#include "eds/linalg.hpp"

#include <utility>

namespace eds {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (static_cast<int>(row.size()) != cols_) throw error("append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

int RationalMatrix::rank() const {
  // Clear denominators per row, then run Bareiss on the integer matrix.
  std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
  for (int r = 0; r < rows_; ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < cols_; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < cols_; ++c) {
      const Rational& q = at(r, c);
      m[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows_; ++r) {
      for (int c = col + 1; c < cols_; ++c) {
        mpz_class t = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
        mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::rref(std::vector<int>* pivots) const {
  RationalMatrix m = *this;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r)
      if (!is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Rational inv = 1 / m.at(row, col);
    for (int c = col; c < cols_; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      const Rational f = m.at(r, col);
      for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  std::vector<int> pivots;
  RationalMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw error("solve: rhs size mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = rhs[r];
  }
  std::vector<int> pivots;
  RationalMatrix red = aug.rref(&pivots);
  for (int p : pivots)
    if (p == cols_) return std::nullopt;  // pivot in the augmented column
  std::vector<Rational> x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red.at(static_cast<int>(k), cols_);
  return x;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw error("inverse: matrix not square");
  RationalMatrix aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::vector<int> pivots;
  RationalMatrix red = aug.rref(&pivots);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != cols_ - 1) return std::nullopt;
  RationalMatrix inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
  return inv;
}

}  // namespace eds
