#pragma once

#include <vector>

#include "eds/form.hpp"
#include "eds/linalg.hpp"
#include "eds/structure.hpp"

namespace eds {

/// Finite generators of an exterior ideal, all homogeneous of degree >= 1,
/// together with the structure differential used to close the system under d.
class GeneratorSet {
 public:
  GeneratorSet(std::vector<Form> generators, StructureDifferential sd);

  const std::vector<Form>& generators() const { return generators_; }
  const StructureDifferential& sd() const { return sd_; }
  const SpacePtr& space() const { return sd_.space(); }

 private:
  std::vector<Form> generators_;
  StructureDifferential sd_;
};

/// Appends the exterior derivative of every generator (dropping exact
/// zeros).  The result generates the same exterior differential ideal and is
/// closed whenever d of the appended forms already lies in the algebraic
/// ideal.
GeneratorSet close(const GeneratorSet& gs);

/// Spanning set of the degree-p component of the algebraic ideal: all
/// g ^ w_J with deg g + |J| = p, deduplicated by linear span (canonical
/// reduced forms, pivot monomials in lexicographic order).
std::vector<Form> degree_slice(const GeneratorSet& gs, int p);

/// A p-dimensional subspace of the tangent space, p >= 0, given by an
/// independent basis.
class IntegralElement {
 public:
  IntegralElement(SpacePtr space, std::vector<Vector> basis);

  const SpacePtr& space() const { return space_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;

 private:
  SpacePtr space_;
  std::vector<Vector> basis_;
};

/// True iff every generator of degree <= dim E restricts to zero on E.
/// Restriction to a subspace is an algebra map, so vanishing of the
/// generators forces vanishing of the whole ideal.
bool is_integral(const IntegralElement& e, const GeneratorSet& gs);

/// Polar space H(E): all v with psi(v, e_1, ..., e_p) = 0 for every psi in
/// the degree-(p+1) slice of the ideal.  Computed from the generators alone
/// (a vector extends E to an integral element iff every generator vanishes
/// on the extended subspace); the slice formulation is kept as a test
/// oracle.  Returns a canonical kernel basis; always contains E.
std::vector<Vector> polar_space(const IntegralElement& e, const GeneratorSet& gs);

/// r(E) = dim H(E) - (p+1); may be -1.
int extension_rank(const IntegralElement& e, const GeneratorSet& gs);

/// span(E, v) as an integral element; requires v in H(E) \ E and names the
/// violated polar constraint otherwise.
IntegralElement extend_element(const IntegralElement& e, const GeneratorSet& gs, const Vector& v);

/// Ordered basis e_1..e_k of a k-dimensional integral element; E_p is the
/// span of the first p vectors.
class Flag {
 public:
  Flag(SpacePtr space, std::vector<Vector> vectors);

  const SpacePtr& space() const { return space_; }
  int length() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  IntegralElement element(int p) const;  // E_p, 0 <= p <= length

 private:
  SpacePtr space_;
  std::vector<Vector> vectors_;
};

/// Throws unless every E_p of the flag is integral (checking the top element
/// suffices by heredity, but failures are reported at the smallest offending
/// level).
void require_integral_flag(const Flag& flag, const GeneratorSet& gs);

}  // namespace eds
