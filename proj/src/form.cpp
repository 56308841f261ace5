#include "eds/form.hpp"

#include <algorithm>
#include <sstream>

namespace eds {

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(SpacePtr space, std::vector<Rational> components)
    : space_(std::move(space)), comp_(std::move(components)) {
  if (static_cast<int>(comp_.size()) != space_->dim())
    throw error("vector has " + std::to_string(comp_.size()) + " components, coframe dimension is " +
                std::to_string(space_->dim()));
}

Vector Vector::zero(SpacePtr space) {
  const int n = space->dim();
  return Vector(std::move(space), std::vector<Rational>(n));
}

Vector Vector::unit(SpacePtr space, int i) {
  if (i < 1 || i > space->dim()) throw error("unit vector index out of range");
  std::vector<Rational> c(space->dim());
  c[i - 1] = 1;
  return Vector(std::move(space), std::move(c));
}

bool Vector::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const Rational& q) { return eds::is_zero(q); });
}

std::string Vector::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < comp_.size(); ++i) {
    if (i) out << ' ';
    out << rational_str(comp_[i]);
  }
  return out.str();
}

Vector operator+(const Vector& a, const Vector& b) {
  if (!same_space(a.space_, b.space_)) throw error("vector addition: coframe mismatch");
  std::vector<Rational> c(a.comp_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.comp_[i] + b.comp_[i];
  return Vector(a.space_, std::move(c));
}

Vector operator*(const Rational& c, const Vector& v) {
  std::vector<Rational> out(v.comp_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * v.comp_[i];
  return Vector(v.space_, std::move(out));
}

// ---------------------------------------------------------------------------
// Form

Form::Form(SpacePtr space, int degree) : space_(std::move(space)), degree_(degree) {
  if (degree_ < 0) throw error("form degree must be nonnegative");
}

Form Form::basis(SpacePtr space, std::vector<int> indices) {
  return term(std::move(space), Rational(1), MultiIndex(std::move(indices)));
}

Form Form::term(SpacePtr space, const Rational& coeff, MultiIndex mi) {
  Form f(space, mi.degree());
  for (int i : mi.indices())
    if (i > space->basis_size()) throw error("basis index " + std::to_string(i) + " out of range");
  if (!eds::is_zero(coeff)) f.terms_.emplace(std::move(mi), coeff);
  return f;
}

Form Form::from_terms(SpacePtr space, int degree, std::map<MultiIndex, Rational> terms) {
  Form f(std::move(space), degree);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.degree() != degree) throw error("term degree mismatch in form construction");
    for (int i : it->first.indices())
      if (i > f.space_->basis_size()) throw error("basis index out of range in form construction");
    if (eds::is_zero(it->second))
      it = terms.erase(it);
    else
      ++it;
  }
  f.terms_ = std::move(terms);
  return f;
}

bool Form::pure_coframe() const {
  for (const auto& [mi, coeff] : terms_)
    for (int i : mi.indices())
      if (space_->is_auxiliary_index(i)) return false;
  return true;
}

Form Form::operator-() const { return Rational(-1) * *this; }

Form operator+(const Form& a, const Form& b) {
  if (!same_space(a.space_, b.space_)) throw error("form addition: coframe mismatch");
  if (a.degree_ != b.degree_) throw error("form addition: degree mismatch");
  std::map<MultiIndex, Rational> terms = a.terms_;
  for (const auto& [mi, coeff] : b.terms_) {
    auto [it, inserted] = terms.emplace(mi, coeff);
    if (!inserted) {
      it->second += coeff;
      if (eds::is_zero(it->second)) terms.erase(it);
    }
  }
  return Form::from_terms(a.space_, a.degree_, std::move(terms));
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Rational& c, const Form& a) {
  if (is_zero(c)) return Form(a.space_, a.degree_);
  std::map<MultiIndex, Rational> terms;
  for (const auto& [mi, coeff] : a.terms_) terms.emplace(mi, c * coeff);
  return Form::from_terms(a.space_, a.degree_, std::move(terms));
}

namespace {

/// Merges two strictly increasing index tuples; returns false on a common
/// index (the wedge vanishes), otherwise fills `out` and the shuffle sign.
bool merge_indices(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

}  // namespace

Form Form::wedge(const Form& other) const {
  if (!same_space(space_, other.space_)) throw error("wedge: coframe mismatch");
  const int degree = degree_ + other.degree_;
  Form result(space_, degree);
  if (degree > space_->basis_size()) return result;
  std::map<MultiIndex, Rational> terms;
  std::vector<int> merged;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      int sign = 1;
      if (!merge_indices(ma.indices(), mb.indices(), merged, sign)) continue;
      Rational coeff = ca * cb;
      if (sign < 0) coeff = -coeff;
      MultiIndex mi{std::vector<int>(merged)};
      auto [it, inserted] = terms.emplace(std::move(mi), coeff);
      if (!inserted) {
        it->second += coeff;
        if (eds::is_zero(it->second)) terms.erase(it);
      }
    }
  }
  return from_terms(space_, degree, std::move(terms));
}

Form Form::interior(const Vector& v) const {
  if (degree_ < 1) throw error("interior product requires degree >= 1");
  if (!same_space(space_, v.space())) throw error("interior product: coframe mismatch");
  if (!pure_coframe()) throw error("interior product on a form with auxiliary symbols; substitute point values first");
  std::map<MultiIndex, Rational> terms;
  for (const auto& [mi, coeff] : terms_) {
    const auto& idx = mi.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Rational& comp = v.component(idx[k]);
      if (eds::is_zero(comp)) continue;
      Rational c = coeff * comp;
      if (k % 2 == 1) c = -c;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t l = 0; l < idx.size(); ++l)
        if (l != k) rest.push_back(idx[l]);
      MultiIndex mrest{std::move(rest)};
      auto [it, inserted] = terms.emplace(std::move(mrest), c);
      if (!inserted) {
        it->second += c;
        if (eds::is_zero(it->second)) terms.erase(it);
      }
    }
  }
  return from_terms(space_, degree_ - 1, std::move(terms));
}

Rational Form::evaluate(const std::vector<Vector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw error("evaluate: expected " + std::to_string(degree_) + " vectors, got " + std::to_string(vectors.size()));
  if (!pure_coframe()) throw error("evaluate on a form with auxiliary symbols; substitute point values first");
  Form f = *this;
  for (const Vector& v : vectors) f = f.interior(v);
  if (f.terms_.empty()) return Rational(0);
  return f.terms_.begin()->second;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mi, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      first = false;
    } else if (sgn(c) < 0) {
      out << " - ";
      c = -c;
    } else {
      out << " + ";
    }
    out << rational_str(c);
    bool head = true;
    for (int i : mi.indices()) {
      out << (head ? "*" : "^") << space_->basis_name(i);
      head = false;
    }
  }
  return out.str();
}

Form wedge(const Form& a, const Form& b) { return a.wedge(b); }
Form add(const Form& a, const Form& b) { return a + b; }
Form scale(const Rational& c, const Form& a) { return c * a; }
Form interior_product(const Vector& v, const Form& a) { return a.interior(v); }
Rational evaluate(const Form& a, const std::vector<Vector>& vectors) { return a.evaluate(vectors); }

}  // namespace eds
