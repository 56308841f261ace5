#include "eds/ideal.hpp"

#include <algorithm>
#include <functional>

namespace eds {

namespace {

RationalMatrix vectors_as_rows(const std::vector<Vector>& vs, int n) {
  RationalMatrix m(static_cast<int>(vs.size()), n);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = vs[r].components()[c];
  return m;
}

/// Enumerates size-k subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

/// The 1-form v -> g(v, e_{T_1}, ..., e_{T_k}) as component row; g must be a
/// pure-coframe (k+1)-form.
std::vector<Rational> polar_constraint_row(const Form& g, const std::vector<Vector>& flag,
                                           const std::vector<int>& subset) {
  // g(v, t_1, ..., t_k) = (-1)^k (i_{t_k} ... i_{t_1} g)(v)
  Form contracted = g;
  for (int t : subset) contracted = contracted.interior(flag[t]);
  const int n = g.space()->dim();
  std::vector<Rational> row(n);
  const bool negate = subset.size() % 2 == 1;
  for (const auto& [mi, coeff] : contracted.terms()) {
    const int idx = mi.indices()[0];
    row[idx - 1] = negate ? -coeff : coeff;
  }
  return row;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Form> generators, StructureDifferential sd)
    : generators_(std::move(generators)), sd_(std::move(sd)) {
  for (const Form& g : generators_) {
    if (!same_space(g.space(), sd_.space())) throw error("generator set: coframe mismatch");
    if (g.degree() < 1) throw error("generator set must not contain 0-forms");
  }
}

GeneratorSet close(const GeneratorSet& gs) {
  std::vector<Form> out = gs.generators();
  for (const Form& g : gs.generators()) {
    Form dg = gs.sd().d(g);
    if (!dg.is_zero()) out.push_back(std::move(dg));
  }
  return GeneratorSet(std::move(out), gs.sd());
}

std::vector<Form> degree_slice(const GeneratorSet& gs, int p) {
  const SpacePtr& space = gs.space();
  const int b = space->basis_size();
  std::vector<Form> candidates;
  for (const Form& g : gs.generators()) {
    const int extra = p - g.degree();
    if (extra < 0) continue;
    for_each_subset(b, extra, [&](const std::vector<int>& subset) {
      std::vector<int> indices(subset.size());
      for (std::size_t i = 0; i < subset.size(); ++i) indices[i] = subset[i] + 1;
      Form w = g.wedge(Form::basis(space, std::move(indices)));
      if (!w.is_zero()) candidates.push_back(std::move(w));
    });
  }
  if (candidates.empty()) return candidates;

  // Deduplicate by span: row-reduce the coefficient matrix over the ordered
  // degree-p monomials and rebuild canonical forms from the nonzero rows.
  std::vector<MultiIndex> monomials;
  for (const Form& f : candidates)
    for (const auto& [mi, coeff] : f.terms()) monomials.push_back(mi);
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  RationalMatrix m(static_cast<int>(candidates.size()), static_cast<int>(monomials.size()));
  for (std::size_t r = 0; r < candidates.size(); ++r)
    for (const auto& [mi, coeff] : candidates[r].terms()) {
      const auto pos = std::lower_bound(monomials.begin(), monomials.end(), mi) - monomials.begin();
      m.at(static_cast<int>(r), static_cast<int>(pos)) = coeff;
    }
  std::vector<int> pivots;
  RationalMatrix red = m.rref(&pivots);
  std::vector<Form> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::map<MultiIndex, Rational> terms;
    for (std::size_t c = 0; c < monomials.size(); ++c)
      if (!is_zero(red.at(static_cast<int>(r), static_cast<int>(c)))) terms.emplace(monomials[c], red.at(static_cast<int>(r), static_cast<int>(c)));
    out.push_back(Form::from_terms(space, p, std::move(terms)));
  }
  return out;
}

IntegralElement::IntegralElement(SpacePtr space, std::vector<Vector> basis)
    : space_(std::move(space)), basis_(std::move(basis)) {
  for (const Vector& v : basis_)
    if (!same_space(v.space(), space_)) throw error("integral element: coframe mismatch");
  if (vectors_as_rows(basis_, space_->dim()).rank() != static_cast<int>(basis_.size()))
    throw error("integral element basis is linearly dependent");
}

bool IntegralElement::contains(const Vector& v) const {
  RationalMatrix m = vectors_as_rows(basis_, space_->dim());
  const int r = m.rank();
  m.append_row(v.components());
  return m.rank() == r;
}

bool is_integral(const IntegralElement& e, const GeneratorSet& gs) {
  const int p = e.dim();
  for (const Form& g : gs.generators()) {
    const int d = g.degree();
    if (d > p) continue;
    const Form pv = gs.sd().point_value(g);
    if (pv.is_zero()) continue;
    bool ok = true;
    for_each_subset(p, d, [&](const std::vector<int>& subset) {
      if (!ok) return;
      std::vector<Vector> args;
      args.reserve(d);
      for (int t : subset) args.push_back(e.basis()[t]);
      if (!is_zero(pv.evaluate(args))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

/// Rows of the polar constraint system of E: one row per generator of degree
/// d <= p+1 and per (d-1)-subset of the basis of E.
RationalMatrix polar_rows(const IntegralElement& e, const GeneratorSet& gs,
                          std::vector<std::pair<int, std::vector<int>>>* provenance = nullptr) {
  const int p = e.dim();
  const int n = e.space()->dim();
  RationalMatrix rows(0, n);
  for (std::size_t gi = 0; gi < gs.generators().size(); ++gi) {
    const Form& g = gs.generators()[gi];
    const int d = g.degree();
    if (d > p + 1) continue;
    const Form pv = gs.sd().point_value(g);
    if (pv.is_zero()) continue;
    for_each_subset(p, d - 1, [&](const std::vector<int>& subset) {
      rows.append_row(polar_constraint_row(pv, e.basis(), subset));
      if (provenance) provenance->emplace_back(static_cast<int>(gi), subset);
    });
  }
  return rows;
}

}  // namespace

std::vector<Vector> polar_space(const IntegralElement& e, const GeneratorSet& gs) {
  if (!is_integral(e, gs)) throw error("polar space: element is not integral");
  const auto kernel = polar_rows(e, gs).nullspace();
  std::vector<Vector> basis;
  basis.reserve(kernel.size());
  for (auto& row : kernel) basis.emplace_back(e.space(), row);
  return basis;
}

int extension_rank(const IntegralElement& e, const GeneratorSet& gs) {
  return static_cast<int>(polar_space(e, gs).size()) - (e.dim() + 1);
}

IntegralElement extend_element(const IntegralElement& e, const GeneratorSet& gs, const Vector& v) {
  if (!is_integral(e, gs)) throw error("extend: element is not integral");
  if (e.contains(v)) throw error("extend: vector already lies in the element");
  std::vector<std::pair<int, std::vector<int>>> provenance;
  RationalMatrix rows = polar_rows(e, gs, &provenance);
  for (int r = 0; r < rows.rows(); ++r) {
    Rational value = 0;
    for (int c = 0; c < rows.cols(); ++c) value += rows.at(r, c) * v.components()[c];
    if (!is_zero(value)) {
      const auto& [gi, subset] = provenance[r];
      std::string at;
      for (int t : subset) at += (at.empty() ? "" : ",") + std::to_string(t + 1);
      throw error("extend: vector violates the polar constraint of generator #" + std::to_string(gi + 1) +
                  " against basis vectors {" + at + "}: value " + rational_str(value));
    }
  }
  std::vector<Vector> basis = e.basis();
  basis.push_back(v);
  return IntegralElement(e.space(), std::move(basis));
}

Flag::Flag(SpacePtr space, std::vector<Vector> vectors) : space_(std::move(space)), vectors_(std::move(vectors)) {
  for (const Vector& v : vectors_)
    if (!same_space(v.space(), space_)) throw error("flag: coframe mismatch");
  if (vectors_as_rows(vectors_, space_->dim()).rank() != static_cast<int>(vectors_.size()))
    throw error("flag vectors are linearly dependent");
}

IntegralElement Flag::element(int p) const {
  if (p < 0 || p > length()) throw error("flag level out of range");
  return IntegralElement(space_, std::vector<Vector>(vectors_.begin(), vectors_.begin() + p));
}

void require_integral_flag(const Flag& flag, const GeneratorSet& gs) {
  for (int p = 1; p <= flag.length(); ++p)
    if (!is_integral(flag.element(p), gs))
      throw error("flag level E_" + std::to_string(p) + " is not an integral element");
}

}  // namespace eds
