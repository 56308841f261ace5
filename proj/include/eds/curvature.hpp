#pragma once

#include <cstdint>
#include <vector>

#include "eds/linalg.hpp"
#include "eds/rational.hpp"

namespace eds {

/// Curvature-type tensor R_ijkl, indices 1..m, exact components.  The
/// symmetry families (pair exchange, first-pair antisymmetry, first-triple
/// cyclic identity) are checked by validate(), not enforced by storage.
class RiemannTensor {
 public:
  explicit RiemannTensor(int m);

  int m() const { return m_; }
  const Rational& at(int i, int j, int k, int l) const { return comp_[offset(i, j, k, l)]; }
  void set(int i, int j, int k, int l, Rational value) { comp_[offset(i, j, k, l)] = std::move(value); }

  /// Fills the whole symmetry orbit of one component; conflicting earlier
  /// assignments are reported.
  void set_symmetric(int i, int j, int k, int l, const Rational& value);

  Rational max_abs() const;
  bool operator==(const RiemannTensor&) const = default;

 private:
  std::size_t offset(int i, int j, int k, int l) const;
  int m_;
  std::vector<Rational> comp_;
};

/// All three symmetry families hold exactly.
bool validate(const RiemannTensor& r);

/// dim K_m by the closed form m^2 (m^2 - 1) / 12.
long long dim_Km(int m);

/// The same dimension computed independently: m^4 minus the rank of the
/// linear symmetry-constraint system on the m^4 components.
long long dim_Km_by_rank(int m);

/// Second fundamental form coefficients h_aij, a = m+1..N, symmetric in
/// (i, j).
class SecondFundamentalForm {
 public:
  SecondFundamentalForm(int m, int N);

  int m() const { return m_; }
  int N() const { return N_; }
  const Rational& at(int a, int i, int j) const { return comp_[offset(a, i, j)]; }
  void set(int a, int i, int j, const Rational& value);

  bool operator==(const SecondFundamentalForm&) const = default;

 private:
  std::size_t offset(int a, int i, int j) const;
  int m_, N_;
  std::vector<Rational> comp_;  // symmetric storage: (a, i <= j)
};

/// Gauss map: R_ijkl = sum_a (h_aik h_ajl - h_ail h_ajk).  The image always
/// satisfies validate().
RiemannTensor gauss_map(const SecondFundamentalForm& h);

/// True iff the normal-space vectors (h_.ij) for 1 <= i <= j <= m-1 are
/// linearly independent; requires N - m >= m(m-1)/2 (false otherwise).
bool in_H(const SecondFundamentalForm& h);

/// Exact rank of the differential of the Gauss map at h, as a linear map
/// from W (x) S^2(R^m) to the m^4 component space; equals dim K_m whenever
/// h lies in H.
long long gauss_jacobian_rank(const SecondFundamentalForm& h);

/// Deterministic pseudo-random h with in_H(h) = true (rejection sampling of
/// small integer entries, SplitMix64 stream).
SecondFundamentalForm random_h_in_H(int m, int N, std::uint64_t seed);

/// Gauss-Newton preimage of R under the Gauss map starting from h0 (which
/// must lie in H).  The single floating-point computation in the workbench:
/// iterates least-squares steps in doubles, converts the result exactly to
/// rationals, and verifies |gauss_map(h) - R|_inf <= tol in exact
/// arithmetic.  For (m, N) = (2, 3) a closed-form branch returns an exact
/// preimage.  Throws on non-convergence.
SecondFundamentalForm preimage_newton(const RiemannTensor& r, const SecondFundamentalForm& h0, int max_iters,
                                      double tol);

}  // namespace eds
