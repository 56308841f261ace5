#include "eds/cartan_lemma.hpp"

namespace eds {

namespace {

RationalMatrix coefficient_rows(const std::vector<Form>& forms, int n) {
  RationalMatrix m(static_cast<int>(forms.size()), n);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (const auto& [mi, coeff] : forms[r].terms()) m.at(static_cast<int>(r), mi.indices()[0] - 1) = coeff;
  return m;
}

Form residual_sum(const std::vector<Form>& theta, const std::vector<Form>& omega, const SpacePtr& space) {
  Form sum(space, 2);
  for (std::size_t i = 0; i < theta.size(); ++i) sum = sum + theta[i].wedge(omega[i]);
  return sum;
}

}  // namespace

RationalMatrix cartan_lemma_solve(const std::vector<Form>& theta, const std::vector<Form>& omega) {
  if (theta.size() != omega.size()) throw error("cartan lemma: theta and omega counts differ");
  const int r = static_cast<int>(omega.size());
  if (r == 0) return RationalMatrix(0, 0);
  const SpacePtr space = omega[0].space();
  const int n = space->dim();
  for (const auto* list : {&theta, &omega})
    for (const Form& f : *list) {
      if (!same_space(f.space(), space)) throw error("cartan lemma: coframe mismatch");
      if (f.degree() != 1) throw error("cartan lemma: all inputs must be 1-forms");
      if (!f.pure_coframe()) throw error("cartan lemma: substitute auxiliary symbols first");
    }
  if (r > n) throw error("cartan lemma: more 1-forms than the coframe dimension");

  const RationalMatrix omega_rows = coefficient_rows(omega, n);
  std::vector<int> pivots;
  omega_rows.rref(&pivots);
  if (static_cast<int>(pivots.size()) != r) throw error("cartan lemma: the omega_i are linearly dependent");

  // Complete the omegas to a basis with coordinate covectors on the
  // non-pivot columns, then express each theta in that basis.
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  RationalMatrix basis(n, n);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < n; ++c) basis.at(i, c) = omega_rows.at(i, c);
  int row = r;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) basis.at(row++, c) = 1;
  const auto inv = basis.inverse();
  if (!inv) throw error("cartan lemma: basis completion failed");

  const RationalMatrix theta_rows = coefficient_rows(theta, n);
  RationalMatrix h(r, r);
  bool clean = true;
  for (int i = 0; i < r && clean; ++i)
    for (int k = 0; k < n; ++k) {
      Rational coord = 0;
      for (int c = 0; c < n; ++c) coord += theta_rows.at(i, c) * inv->at(c, k);
      if (k < r) {
        h.at(i, k) = coord;
      } else if (!is_zero(coord)) {
        clean = false;
        break;
      }
    }
  if (clean)
    for (int i = 0; i < r && clean; ++i)
      for (int j = i + 1; j < r; ++j)
        if (h.at(i, j) != h.at(j, i)) {
          clean = false;
          break;
        }
  if (!clean) {
    Form res = residual_sum(theta, omega, space);
    throw cartan_lemma_residual("cartan lemma: sum theta_i ^ omega_i = " + res.str() + " is not zero", std::move(res));
  }
  return h;
}

}  // namespace eds
