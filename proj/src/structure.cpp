#include "eds/structure.hpp"

namespace eds {

StructureDifferential::StructureDifferential(SpacePtr space)
    : space_(std::move(space)),
      basis_d_(space_->dim(), Form(space_, 2)),
      aux_(space_->auxiliary_count()) {}

void StructureDifferential::set_basis_d(int mu, Form d) {
  if (!space_->is_coframe_index(mu)) throw error("structure differential: coframe index out of range");
  if (!same_space(d.space(), space_)) throw error("structure differential: coframe mismatch");
  if (d.degree() != 2) throw error("d of a coframe 1-form must be a 2-form");
  basis_d_[mu - 1] = std::move(d);
}

void StructureDifferential::set_auxiliary(const std::string& name, Form value, Form differential) {
  const int idx = space_->index_of(name);
  if (!space_->is_auxiliary_index(idx)) throw error("unknown auxiliary name '" + name + "'");
  if (!same_space(value.space(), space_) || !same_space(differential.space(), space_))
    throw error("auxiliary declaration: coframe mismatch");
  if (value.degree() != 1 || differential.degree() != 2)
    throw error("auxiliary must carry a 1-form value and a 2-form differential");
  if (!value.pure_coframe()) throw error("auxiliary value must not reference auxiliary symbols");
  aux_[idx - space_->dim() - 1] = AuxiliaryData{std::move(value), std::move(differential)};
}

const Form& StructureDifferential::basis_d(int mu) const {
  if (!space_->is_coframe_index(mu)) throw error("structure differential: coframe index out of range");
  return basis_d_[mu - 1];
}

bool StructureDifferential::auxiliary_declared(int idx) const {
  return space_->is_auxiliary_index(idx) && aux_[idx - space_->dim() - 1].has_value();
}

const AuxiliaryData& StructureDifferential::auxiliary(int idx) const {
  if (!auxiliary_declared(idx))
    throw error("undeclared auxiliary '" + space_->basis_name(idx) + "'");
  return *aux_[idx - space_->dim() - 1];
}

const Form& StructureDifferential::derivative_of_index(int idx) const {
  if (space_->is_coframe_index(idx)) return basis_d_[idx - 1];
  return auxiliary(idx).differential;
}

Form StructureDifferential::d(const Form& form) const {
  if (!same_space(form.space(), space_)) throw error("exterior derivative: coframe mismatch");
  Form result(space_, form.degree() + 1);
  for (const auto& [mi, coeff] : form.terms()) {
    const auto& idx = mi.indices();
    // d(w_{j1} ^ ... ^ w_{jp}) = sum_k (-1)^(k-1) w_{j1} ^ .. ^ d(w_{jk}) ^ .. ^ w_{jp}
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Form& dk = derivative_of_index(idx[k]);
      if (dk.is_zero()) continue;
      std::vector<int> prefix(idx.begin(), idx.begin() + k);
      std::vector<int> suffix(idx.begin() + k + 1, idx.end());
      Form piece = Form::term(space_, (k % 2 == 0) ? coeff : -coeff, MultiIndex(std::move(prefix)));
      piece = piece.wedge(dk);
      piece = piece.wedge(Form::basis(space_, std::move(suffix)));
      result = result + piece;
    }
  }
  return result;
}

std::vector<std::pair<int, Form>> StructureDifferential::d_squared_defects() const {
  std::vector<std::pair<int, Form>> defects;
  for (int mu = 1; mu <= space_->dim(); ++mu) defects.emplace_back(mu, d(basis_d_[mu - 1]));
  for (int j = 0; j < space_->auxiliary_count(); ++j)
    if (aux_[j].has_value()) defects.emplace_back(space_->dim() + j + 1, d(aux_[j]->differential));
  return defects;
}

bool StructureDifferential::is_integrable() const {
  for (const auto& [idx, defect] : d_squared_defects())
    if (!defect.is_zero()) return false;
  return true;
}

Form StructureDifferential::point_value(const Form& form) const {
  if (form.pure_coframe()) return form;
  Form result(space_, form.degree());
  for (const auto& [mi, coeff] : form.terms()) {
    Form piece = Form::term(space_, coeff, MultiIndex{});
    for (int i : mi.indices()) {
      Form factor = space_->is_coframe_index(i) ? Form::basis(space_, {i}) : auxiliary(i).value;
      piece = piece.wedge(factor);
      if (piece.is_zero()) break;
    }
    result = result + piece;
  }
  return result;
}

}  // namespace eds
