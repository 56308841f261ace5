#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eds/form.hpp"

namespace eds {

/// Declared auxiliary 1-form: its value at the working point (a coframe
/// 1-form, often zero) and its exterior derivative (a 2-form).  The two are
/// independent pieces of data; a symbol may vanish at the point while its
/// derivative does not.
struct AuxiliaryData {
  Form value;
  Form differential;
};

/// The value of d on every basis 1-form, extended to all forms by linearity
/// and the graded Leibniz rule.  Coefficients are constants, so d is a formal
/// derivation determined entirely by this table.
class StructureDifferential {
 public:
  /// All coframe derivatives zero; auxiliaries undeclared.
  explicit StructureDifferential(SpacePtr space);

  static StructureDifferential flat(SpacePtr space) { return StructureDifferential(std::move(space)); }

  const SpacePtr& space() const { return space_; }

  /// Sets d(w_mu) for a coframe index; the form must be a 2-form.
  void set_basis_d(int mu, Form d);

  /// Declares an auxiliary by name: value (degree-1, pure coframe) and
  /// differential (degree-2).
  void set_auxiliary(const std::string& name, Form value, Form differential);

  const Form& basis_d(int mu) const;
  bool auxiliary_declared(int idx) const;
  const AuxiliaryData& auxiliary(int idx) const;

  /// Exterior derivative of a form over this space.
  Form d(const Form& form) const;

  /// d(d(w_mu)) for every coframe index and d of every declared auxiliary
  /// differential. All zero certifies d^2 = 0 on the whole algebra.
  std::vector<std::pair<int, Form>> d_squared_defects() const;
  bool is_integrable() const;

  /// Substitutes every auxiliary symbol by its declared value; the result is
  /// the form seen at the working point, a plain coframe object.
  Form point_value(const Form& form) const;

 private:
  const Form& derivative_of_index(int idx) const;

  SpacePtr space_;
  std::vector<Form> basis_d_;
  std::vector<std::optional<AuxiliaryData>> aux_;
};

inline Form exterior_derivative(const Form& form, const StructureDifferential& sd) { return sd.d(form); }

}  // namespace eds
