#include "eds/cartan.hpp"

#include <algorithm>
#include <functional>

namespace eds {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::ordinary: return "ordinary";
    case Verdict::not_ordinary: return "not_ordinary";
    case Verdict::inconclusive: return "inconclusive";
  }
  throw error("unknown verdict");
}

std::vector<int> polar_codims(const Flag& flag, const GeneratorSet& gs) {
  require_integral_flag(flag, gs);
  const int n = flag.space()->dim();
  std::vector<int> c;
  c.reserve(flag.length());
  for (int k = 0; k < flag.length(); ++k)
    c.push_back(n - static_cast<int>(polar_space(flag.element(k), gs).size()));
  return c;
}

namespace {

void validate_split(const CoframeSplit& split, const SpacePtr& space) {
  const int n = space->dim();
  std::vector<int> seen(n, 0);
  for (const auto* part : {&split.independence, &split.complement})
    for (int i : *part) {
      if (i < 1 || i > n) throw error("split index " + std::to_string(i) + " out of range");
      if (seen[i - 1]++) throw error("split indices must be disjoint");
    }
  if (static_cast<int>(split.independence.size() + split.complement.size()) != n)
    throw error("split must cover every coframe index");
}

/// The flag must consist of vectors annihilated by the complement covectors,
/// lower-triangular against the independence order with nonzero diagonal, so
/// that E_p = {v in E : w_k(v) = 0 for k > p}.
void validate_adapted_flag(const CoframeSplit& split, const Flag& flag) {
  if (flag.length() != static_cast<int>(split.independence.size()))
    throw error("flag length must match the number of independence indices");
  for (int p = 0; p < flag.length(); ++p) {
    const Vector& v = flag.vectors()[p];
    for (int cidx : split.complement)
      if (!is_zero(v.component(cidx)))
        throw error("flag vector " + std::to_string(p + 1) + " is not annihilated by complement covector " +
                    flag.space()->basis_name(cidx));
    for (int k = 0; k < flag.length(); ++k) {
      const Rational& comp = v.component(split.independence[k]);
      if (k > p && !is_zero(comp))
        throw error("flag is not adapted to the split (vector " + std::to_string(p + 1) +
                    " has a component along independence covector " + std::to_string(k + 1) + ")");
      if (k == p && is_zero(comp))
        throw error("flag is not adapted to the split (vanishing diagonal component)");
    }
  }
}

}  // namespace

std::vector<TableauEntry> tableau_entries(const GeneratorSet& gs, const CoframeSplit& split, const Flag& flag) {
  const SpacePtr& space = gs.space();
  validate_split(split, space);
  validate_adapted_flag(split, flag);
  const int n = space->dim();
  std::vector<int> position(n + 1, 0);  // coframe index -> 1-based independence position, 0 = complement
  for (std::size_t k = 0; k < split.independence.size(); ++k) position[split.independence[k]] = static_cast<int>(k) + 1;

  std::vector<TableauEntry> entries;
  for (std::size_t gi = 0; gi < gs.generators().size(); ++gi) {
    const Form pv = gs.sd().point_value(gs.generators()[gi]);
    // Group the complement-linear terms by their independence monomial.
    std::map<std::vector<int>, std::vector<Rational>> by_monomial;
    for (const auto& [mi, coeff] : pv.terms()) {
      const auto& idx = mi.indices();
      int complement_count = 0;
      int complement_at = -1;
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (position[idx[q]] == 0) {
          ++complement_count;
          complement_at = static_cast<int>(q);
        }
      if (complement_count >= 2) continue;  // quadratic or higher in the complement
      if (complement_count == 0)
        throw error("generator #" + std::to_string(gi + 1) +
                    " has a term with no complement factor; the candidate element is not integral");
      std::vector<int> independence_part;
      independence_part.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (static_cast<int>(q) != complement_at) independence_part.push_back(idx[q]);
      auto [it, inserted] = by_monomial.emplace(std::move(independence_part), std::vector<Rational>(n));
      // Move the complement covector to the front of the monomial.
      Rational signed_coeff = (complement_at % 2 == 0) ? coeff : -coeff;
      it->second[idx[complement_at] - 1] += signed_coeff;
    }
    for (auto& [monomial, covector] : by_monomial) {
      int sup = 0;
      for (int i : monomial) sup = std::max(sup, position[i]);
      if (std::any_of(covector.begin(), covector.end(), [](const Rational& q) { return !is_zero(q); }))
        entries.push_back(TableauEntry{static_cast<int>(gi), sup, covector});
    }
  }
  return entries;
}

std::vector<int> tableau_characters(const GeneratorSet& gs, const CoframeSplit& split, const Flag& flag) {
  const auto entries = tableau_entries(gs, split, flag);
  const int n = gs.space()->dim();
  std::vector<int> c;
  c.reserve(flag.length());
  for (int p = 0; p < flag.length(); ++p) {
    RationalMatrix rows(0, n);
    for (const auto& entry : entries)
      if (entry.sup <= p) rows.append_row(entry.covector);
    c.push_back(rows.rank());
  }
  return c;
}

namespace {

std::vector<Vector> complement_basis(const IntegralElement& e, const std::optional<CoframeSplit>& split) {
  const SpacePtr& space = e.space();
  const int n = space->dim();
  std::vector<Vector> f;
  if (split) {
    validate_split(*split, space);
    if (static_cast<int>(split->complement.size()) != n - e.dim())
      throw error("split complement size must equal the codimension of the element");
    for (int c : split->complement) f.push_back(Vector::unit(space, c));
  } else {
    // Deterministic completion: coordinate duals on the non-pivot columns of
    // the row-reduced basis matrix.
    RationalMatrix rows(0, n);
    for (const Vector& v : e.basis()) rows.append_row(v.components());
    std::vector<int> pivots;
    rows.rref(&pivots);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int cidx = 0; cidx < n; ++cidx)
      if (!is_pivot[cidx]) f.push_back(Vector::unit(space, cidx + 1));
  }
  // Transversality: the element plus the complement must span everything.
  RationalMatrix all(0, n);
  for (const Vector& v : e.basis()) all.append_row(v.components());
  for (const Vector& v : f) all.append_row(v.components());
  if (all.rank() != n) throw error("complement basis is not transversal to the element");
  return f;
}

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

}  // namespace

long long tangent_codimension(const IntegralElement& e, const GeneratorSet& gs,
                              const std::optional<CoframeSplit>& split) {
  if (!is_integral(e, gs)) throw error("tangent codimension: element is not integral");
  const int k = e.dim();
  const std::vector<Vector> f = complement_basis(e, split);
  const int s = static_cast<int>(f.size());
  // Unknowns t_{a,i}: column a*k + i.
  RationalMatrix rows(0, s * k);
  for (const Form& g : gs.generators()) {
    const int d = g.degree();
    if (d > k) continue;
    const Form pv = gs.sd().point_value(g);
    if (pv.is_zero()) continue;
    for_each_subset(k, d, [&](const std::vector<int>& subset) {
      std::vector<Rational> row(static_cast<std::size_t>(s) * k);
      std::vector<Vector> args;
      args.reserve(d);
      for (int t : subset) args.push_back(e.basis()[t]);
      for (int slot = 0; slot < d; ++slot) {
        const Vector saved = args[slot];
        for (int a = 0; a < s; ++a) {
          args[slot] = f[a];
          const Rational value = pv.evaluate(args);
          if (!is_zero(value)) row[static_cast<std::size_t>(a) * k + subset[slot]] += value;
        }
        args[slot] = saved;
      }
      rows.append_row(row);
    });
  }
  return rows.rank();
}

CharacterReport cartan_verdict(const Flag& flag, const GeneratorSet& gs, const std::optional<CoframeSplit>& split) {
  for (const Form& g : gs.generators())
    if (g.degree() < 1) throw error("cartan test: 0-form generator present");
  CharacterReport report;
  report.c = polar_codims(flag, gs);
  const int n = flag.space()->dim();
  report.polar_dims.reserve(report.c.size());
  for (int ck : report.c) report.polar_dims.push_back(n - ck);
  report.sum_c = 0;
  for (int ck : report.c) report.sum_c += ck;
  if (split) report.tableau_c = tableau_characters(gs, *split, flag);
  report.tangent_codim = tangent_codimension(flag.element(flag.length()), gs, split);
  report.cartan_excess = report.tangent_codim > report.sum_c;
  if (report.tableau_c && *report.tableau_c != report.c)
    report.verdict = Verdict::inconclusive;
  else if (report.tangent_codim == report.sum_c)
    report.verdict = Verdict::ordinary;
  else
    report.verdict = Verdict::not_ordinary;
  return report;
}

}  // namespace eds
