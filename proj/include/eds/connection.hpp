#pragma once

#include <vector>

#include "eds/form_matrix.hpp"

namespace eds {

/// Coframe 1-forms eta_i together with a connection 1-form matrix omega and
/// the structure differential they live over.  In an orthonormal frame the
/// connection matrix is skew-symmetric.
struct ConnectionData {
  std::vector<Form> eta;
  FormMatrix omega;
  StructureDifferential sd;
};

/// Curvature 2-form: Omega = d(omega) + omega ^ omega.
FormMatrix curvature_form(const ConnectionData& cd);

/// Torsion 2-forms: Theta_i = d(eta_i) + sum_j omega_ij ^ eta_j.
std::vector<Form> torsion_form(const ConnectionData& cd);

/// d(Theta) + omega ^ Theta - Omega ^ eta; identically zero whenever the
/// structure differential satisfies d^2 = 0.  A non-integrable structure
/// differential is rejected rather than reported as a defect.
std::vector<Form> first_bianchi_defect(const ConnectionData& cd);

/// d(Omega) - Omega ^ omega + omega ^ Omega, with the same integrability
/// precondition.
FormMatrix second_bianchi_defect(const ConnectionData& cd);

}  // namespace eds
