#pragma once

#include <map>
#include <string>
#include <vector>

#include "eds/rational.hpp"
#include "eds/space.hpp"

namespace eds {

/// Tangent vector at the working point, in the frame dual to the coframe.
class Vector {
 public:
  Vector(SpacePtr space, std::vector<Rational> components);

  static Vector zero(SpacePtr space);
  static Vector unit(SpacePtr space, int i);  // dual of coframe member i

  const SpacePtr& space() const { return space_; }
  int dim() const { return static_cast<int>(comp_.size()); }
  /// 1-based coframe component.
  const Rational& component(int i) const { return comp_[i - 1]; }
  const std::vector<Rational>& components() const { return comp_; }

  bool is_zero() const;
  std::string str() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator*(const Rational& c, const Vector& v);
  bool operator==(const Vector&) const = default;

 private:
  SpacePtr space_;
  std::vector<Rational> comp_;
};

/// Constant-coefficient exterior form of a fixed degree, stored sparsely on
/// strictly increasing basis multi-indices.  Never holds a zero coefficient.
class Form {
 public:
  /// Zero form of the given degree.
  Form(SpacePtr space, int degree);

  static Form basis(SpacePtr space, std::vector<int> indices);
  static Form term(SpacePtr space, const Rational& coeff, MultiIndex mi);
  static Form from_terms(SpacePtr space, int degree, std::map<MultiIndex, Rational> terms);

  const SpacePtr& space() const { return space_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  /// True when no auxiliary symbol occurs, i.e. the form is a plain
  /// cotangent object that can be evaluated on vectors directly.
  bool pure_coframe() const;

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Rational& c, const Form& a);

  Form wedge(const Form& other) const;

  /// Contraction in the first slot.  Requires degree >= 1 and a pure-coframe
  /// form (substitute auxiliaries first).
  Form interior(const Vector& v) const;

  /// Full alternating evaluation on degree() vectors.
  Rational evaluate(const std::vector<Vector>& vectors) const;

  /// Canonical rendering, lexicographic term order, coefficients as num/den.
  std::string str() const;

  bool operator==(const Form&) const = default;

 private:
  SpacePtr space_;
  int degree_;
  std::map<MultiIndex, Rational> terms_;
};

Form wedge(const Form& a, const Form& b);
Form add(const Form& a, const Form& b);
Form scale(const Rational& c, const Form& a);
Form interior_product(const Vector& v, const Form& a);
Rational evaluate(const Form& a, const std::vector<Vector>& vectors);

}  // namespace eds
