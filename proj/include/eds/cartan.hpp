#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/ideal.hpp"

namespace eds {

/// Partition of the coframe indices into independence members (the flag
/// directions, in flag order) and complement members.  The candidate
/// integral element must be the common annihilator of the complement
/// covectors, with the flag adapted to the independence order.
struct CoframeSplit {
  std::vector<int> independence;
  std::vector<int> complement;
};

enum class Verdict { ordinary, not_ordinary, inconclusive };
std::string verdict_str(Verdict v);

struct CharacterReport {
  std::vector<int> polar_dims;            // dim H(E_k), k = 0..len-1
  std::vector<int> c;                     // c_k = ambient dim - polar_dims[k]
  std::optional<std::vector<int>> tableau_c;
  long long sum_c = 0;
  long long tangent_codim = 0;
  Verdict verdict = Verdict::inconclusive;
  bool cartan_excess = false;             // tangent_codim exceeded sum_c
};

/// c_k = codim H(E_k) along the flag, k = 0..length-1.
std::vector<int> polar_codims(const Flag& flag, const GeneratorSet& gs);

/// One extracted tableau covector: the complement-linear coefficient of an
/// independence monomial w_J in a generator's expansion, recorded with the
/// generator index and sup J (0 for the degree-1 generators themselves).
struct TableauEntry {
  int generator;
  int sup;
  std::vector<Rational> covector;  // components over the full coframe
};

/// Expansion of every generator relative to the split: terms linear in the
/// complement covectors yield the entries; complement-quadratic terms and
/// terms vanishing at the point are discarded; a surviving pure-independence
/// term means the candidate element is not integral and is rejected.
std::vector<TableauEntry> tableau_entries(const GeneratorSet& gs, const CoframeSplit& split, const Flag& flag);

/// c_p = rank of the tableau covectors with sup <= p (the degree-1
/// generators contribute at every p).
std::vector<int> tableau_characters(const GeneratorSet& gs, const CoframeSplit& split, const Flag& flag);

/// Rank of the first-order perturbation system of the integral-element
/// variety at E: nearby planes are graphs e_i + sum_a t_ai f_a over a
/// complement basis f, every generator is imposed to first order in t, and
/// the rank of the resulting linear system is returned.
long long tangent_codimension(const IntegralElement& e, const GeneratorSet& gs,
                              const std::optional<CoframeSplit>& split = std::nullopt);

/// Characters, optional tableau cross-check, tangent codimension, verdict:
/// ordinary iff the tangent codimension equals sum c_k; any strict
/// inequality is not_ordinary (an excess is additionally flagged);
/// inconclusive is reserved for tableau/polar disagreement, which signals a
/// violated precondition.
CharacterReport cartan_verdict(const Flag& flag, const GeneratorSet& gs,
                               const std::optional<CoframeSplit>& split = std::nullopt);

}  // namespace eds
