#include "eds/curvature.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>

#include "eds/prng.hpp"

namespace eds {

RiemannTensor::RiemannTensor(int m) : m_(m) {
  if (m_ < 1) throw error("curvature tensor dimension must be positive");
  comp_.assign(static_cast<std::size_t>(m_) * m_ * m_ * m_, Rational(0));
}

std::size_t RiemannTensor::offset(int i, int j, int k, int l) const {
  for (int idx : {i, j, k, l})
    if (idx < 1 || idx > m_) throw error("curvature tensor index out of range");
  return (((static_cast<std::size_t>(i - 1) * m_ + (j - 1)) * m_ + (k - 1)) * m_ + (l - 1));
}

void RiemannTensor::set_symmetric(int i, int j, int k, int l, const Rational& value) {
  // Orbit under pair exchange and both pair antisymmetries.
  const std::array<std::array<int, 4>, 8> images = {{{i, j, k, l},
                                                     {j, i, k, l},
                                                     {i, j, l, k},
                                                     {j, i, l, k},
                                                     {k, l, i, j},
                                                     {l, k, i, j},
                                                     {k, l, j, i},
                                                     {l, k, j, i}}};
  const std::array<int, 8> signs = {1, -1, -1, 1, 1, -1, -1, 1};
  for (std::size_t t = 0; t < images.size(); ++t) {
    const auto& [a, b, c, d] = images[t];
    Rational v = signs[t] > 0 ? value : Rational(-value);
    Rational& slot = comp_[offset(a, b, c, d)];
    if (!is_zero(slot) && slot != v)
      throw error("conflicting curvature components for the symmetry orbit of R_" + std::to_string(i) +
                  std::to_string(j) + std::to_string(k) + std::to_string(l));
    slot = std::move(v);
  }
}

Rational RiemannTensor::max_abs() const {
  Rational best(0);
  for (const Rational& q : comp_) {
    Rational a = abs(q);
    if (a > best) best = a;
  }
  return best;
}

bool validate(const RiemannTensor& r) {
  const int m = r.m();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          if (r.at(i, j, k, l) != r.at(k, l, i, j)) return false;
          if (r.at(i, j, k, l) != -r.at(j, i, k, l)) return false;
          if (!is_zero(r.at(i, j, k, l) + r.at(k, i, j, l) + r.at(j, k, i, l))) return false;
        }
  return true;
}

long long dim_Km(int m) {
  if (m < 2) throw error("dim_Km requires m >= 2");
  return static_cast<long long>(m) * m * (static_cast<long long>(m) * m - 1) / 12;
}

namespace {

/// Union-find over the m^4 component ids with a sign relative to the parent;
/// two-term relations R_x = s R_y merge classes, and an inconsistent cycle
/// (R_x = -R_x) forces the class to zero.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(int n) : parent_(n), sign_(n, 1), zero_(n, false) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<int, int> find(int x) {  // (root, sign of x relative to root)
    if (parent_[x] == x) return {x, 1};
    auto [root, s] = find(parent_[x]);
    parent_[x] = root;
    sign_[x] *= s;
    return {root, sign_[x]};
  }

  void relate(int x, int y, int rel_sign) {  // R_x = rel_sign * R_y
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) {
      if (sx != rel_sign * sy) zero_[rx] = true;
      return;
    }
    parent_[ry] = rx;
    sign_[ry] = sx * rel_sign * sy;
    if (zero_[ry]) zero_[rx] = true;
  }

  bool forced_zero(int x) {
    auto [root, s] = find(x);
    (void)s;
    return zero_[root];
  }

  int root_of(int x) { return find(x).first; }
  int sign_of(int x) { return find(x).second; }

 private:
  std::vector<int> parent_;
  std::vector<int> sign_;
  std::vector<bool> zero_;
};

}  // namespace

long long dim_Km_by_rank(int m) {
  if (m < 2) throw error("dim_Km_by_rank requires m >= 2");
  const int n4 = m * m * m * m;
  const auto id = [m](int i, int j, int k, int l) { return ((i * m + j) * m + k) * m + l; };  // 0-based

  // Two-term symmetry relations handled as a signed union-find; the rank of
  // that subsystem is n4 minus the number of surviving classes.
  SignedUnionFind uf(n4);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          uf.relate(id(i, j, k, l), id(k, l, i, j), 1);
          uf.relate(id(i, j, k, l), id(j, i, k, l), -1);
        }
  std::vector<int> rep_col(n4, -1);
  int classes = 0;
  for (int x = 0; x < n4; ++x) {
    if (uf.forced_zero(x)) continue;
    const int root = uf.root_of(x);
    if (rep_col[root] < 0) rep_col[root] = classes++;
  }

  // Cyclic identity rows rewritten to class representatives.
  RationalMatrix rows(0, classes);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          std::vector<Rational> row(classes);
          bool nonzero = false;
          for (const auto& term : {id(i, j, k, l), id(k, i, j, l), id(j, k, i, l)}) {
            if (uf.forced_zero(term)) continue;
            row[rep_col[uf.root_of(term)]] += uf.sign_of(term);
          }
          for (const Rational& q : row)
            if (!is_zero(q)) {
              nonzero = true;
              break;
            }
          if (nonzero) rows.append_row(row);
        }
  const long long dim = classes - rows.rank();
  return dim;
}

SecondFundamentalForm::SecondFundamentalForm(int m, int N) : m_(m), N_(N) {
  if (m_ < 1 || N_ <= m_) throw error("second fundamental form requires N > m >= 1");
  comp_.assign(static_cast<std::size_t>(N_ - m_) * m_ * (m_ + 1) / 2, Rational(0));
}

std::size_t SecondFundamentalForm::offset(int a, int i, int j) const {
  if (a <= m_ || a > N_ || i < 1 || i > m_ || j < 1 || j > m_) throw error("second fundamental form index out of range");
  if (i > j) std::swap(i, j);
  // Position of (i, j), i <= j, in row-major upper-triangular order.
  const std::size_t pair = static_cast<std::size_t>(i - 1) * m_ - static_cast<std::size_t>(i - 1) * i / 2 + (j - 1);
  return static_cast<std::size_t>(a - m_ - 1) * (static_cast<std::size_t>(m_) * (m_ + 1) / 2) + pair;
}

void SecondFundamentalForm::set(int a, int i, int j, const Rational& value) { comp_[offset(a, i, j)] = value; }

RiemannTensor gauss_map(const SecondFundamentalForm& h) {
  const int m = h.m();
  RiemannTensor r(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          Rational sum(0);
          for (int a = m + 1; a <= h.N(); ++a) sum += h.at(a, i, k) * h.at(a, j, l) - h.at(a, i, l) * h.at(a, j, k);
          r.set(i, j, k, l, std::move(sum));
        }
  return r;
}

bool in_H(const SecondFundamentalForm& h) {
  const int m = h.m();
  const int w = h.N() - m;
  const int pairs = m * (m - 1) / 2;
  if (w < pairs) return false;
  RationalMatrix rows(0, w);
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i; j <= m - 1; ++j) {
      std::vector<Rational> row(w);
      for (int a = m + 1; a <= h.N(); ++a) row[a - m - 1] = h.at(a, i, j);
      rows.append_row(row);
    }
  return rows.rank() == rows.rows();
}

namespace {

int sym_pair_index(int i, int j, int m) {  // (i <= j) -> 0-based position
  if (i > j) std::swap(i, j);
  return (i - 1) * m - (i - 1) * i / 2 + (j - 1);
}

}  // namespace

long long gauss_jacobian_rank(const SecondFundamentalForm& h) {
  const int m = h.m();
  const int w = h.N() - m;
  const int pairs = m * (m + 1) / 2;
  const int cols = w * pairs;
  RationalMatrix rows(0, cols);
  const auto col = [&](int a, int i, int j) { return (a - m - 1) * pairs + sym_pair_index(i, j, m); };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          std::vector<Rational> row(cols);
          for (int a = m + 1; a <= h.N(); ++a) {
            row[col(a, i, k)] += h.at(a, j, l);
            row[col(a, j, l)] += h.at(a, i, k);
            row[col(a, i, l)] -= h.at(a, j, k);
            row[col(a, j, k)] -= h.at(a, i, l);
          }
          rows.append_row(row);
        }
  return rows.rank();
}

SecondFundamentalForm random_h_in_H(int m, int N, std::uint64_t seed) {
  if (N - m < m * (m - 1) / 2)
    throw error("random_h_in_H: need N - m >= m(m-1)/2, got N - m = " + std::to_string(N - m));
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SecondFundamentalForm h(m, N);
    for (int a = m + 1; a <= N; ++a)
      for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) h.set(a, i, j, Rational(rng.range_int(-4, 4)));
    if (in_H(h)) return h;
  }
  throw error("random_h_in_H: rejection sampling failed");
}

SecondFundamentalForm preimage_newton(const RiemannTensor& r, const SecondFundamentalForm& h0, int max_iters,
                                      double tol) {
  const int m = h0.m();
  const int N = h0.N();
  if (r.m() != m) throw error("preimage: dimension mismatch");
  if (!in_H(h0)) throw error("preimage: the starting point must lie in H");
  if (tol <= 0) throw error("preimage: tolerance must be positive");
  if (!validate(r)) throw error("preimage: target tensor fails the curvature symmetries");

  const auto exact_residual_ok = [&](const SecondFundamentalForm& h) {
    const RiemannTensor g = gauss_map(h);
    Rational worst(0);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
          for (int l = 1; l <= m; ++l) {
            Rational d = abs(g.at(i, j, k, l) - r.at(i, j, k, l));
            if (d > worst) worst = d;
          }
    return worst <= Rational(tol);
  };

  if (m == 2 && N == 3) {
    // Exact branch: h_311 = R_1212, h_322 = 1, h_312 = 0.
    SecondFundamentalForm h(2, 3);
    h.set(3, 1, 1, r.at(1, 2, 1, 2));
    h.set(3, 2, 2, Rational(1));
    return h;
  }

  const int w = N - m;
  const int pairs = m * (m + 1) / 2;
  const int nh = w * pairs;
  const int n4 = m * m * m * m;
  const auto col = [&](int a, int i, int j) { return (a - m - 1) * pairs + sym_pair_index(i, j, m); };

  Eigen::VectorXd x(nh);
  for (int a = m + 1; a <= N; ++a)
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j) x(col(a, i, j)) = h0.at(a, i, j).get_d();

  const auto h_at = [&](const Eigen::VectorXd& v, int a, int i, int j) { return v(col(a, i, j)); };
  const auto to_exact = [&](const Eigen::VectorXd& v) {
    SecondFundamentalForm h(m, N);
    for (int a = m + 1; a <= N; ++a)
      for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) h.set(a, i, j, Rational(v(col(a, i, j))));
    return h;
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    Eigen::VectorXd resid(n4);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n4, nh);
    int row = 0;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
          for (int l = 1; l <= m; ++l, ++row) {
            double value = -r.at(i, j, k, l).get_d();
            for (int a = m + 1; a <= N; ++a) {
              value += h_at(x, a, i, k) * h_at(x, a, j, l) - h_at(x, a, i, l) * h_at(x, a, j, k);
              jac(row, col(a, i, k)) += h_at(x, a, j, l);
              jac(row, col(a, j, l)) += h_at(x, a, i, k);
              jac(row, col(a, i, l)) -= h_at(x, a, j, k);
              jac(row, col(a, j, k)) -= h_at(x, a, i, l);
            }
            resid(row) = value;
          }
    if (resid.lpNorm<Eigen::Infinity>() <= tol / 4) {
      SecondFundamentalForm h = to_exact(x);
      if (exact_residual_ok(h)) return h;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    x -= svd.solve(resid);
  }
  SecondFundamentalForm h = to_exact(x);
  if (exact_residual_ok(h)) return h;
  throw error("preimage: Gauss-Newton did not converge within " + std::to_string(max_iters) + " iterations");
}

}  // namespace eds
