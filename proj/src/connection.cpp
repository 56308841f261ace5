#include "eds/connection.hpp"

namespace eds {

namespace {

void require_square(const ConnectionData& cd) {
  if (cd.omega.rows() != cd.omega.cols()) throw error("connection matrix must be square");
  if (cd.omega.degree() != 1) throw error("connection matrix entries must be 1-forms");
}

void require_lengths(const ConnectionData& cd) {
  require_square(cd);
  if (static_cast<int>(cd.eta.size()) != cd.omega.rows())
    throw error("coframe list and connection matrix sizes disagree");
  for (const Form& e : cd.eta)
    if (e.degree() != 1) throw error("coframe entries must be 1-forms");
}

void require_integrable(const ConnectionData& cd) {
  if (!cd.sd.is_integrable())
    throw error("Bianchi identities require an integrable structure differential (d^2 = 0)");
}

}  // namespace

FormMatrix curvature_form(const ConnectionData& cd) {
  require_square(cd);
  return matrix_add(matrix_d(cd.omega, cd.sd), matrix_wedge(cd.omega, cd.omega));
}

std::vector<Form> torsion_form(const ConnectionData& cd) {
  require_lengths(cd);
  const int m = cd.omega.rows();
  std::vector<Form> theta;
  theta.reserve(m);
  for (int i = 0; i < m; ++i) {
    Form t = cd.sd.d(cd.eta[i]);
    for (int j = 0; j < m; ++j) t = t + cd.omega.at(i, j).wedge(cd.eta[j]);
    theta.push_back(std::move(t));
  }
  return theta;
}

std::vector<Form> first_bianchi_defect(const ConnectionData& cd) {
  require_lengths(cd);
  require_integrable(cd);
  const int m = cd.omega.rows();
  const std::vector<Form> theta = torsion_form(cd);
  const FormMatrix omega_big = curvature_form(cd);
  std::vector<Form> defect;
  defect.reserve(m);
  for (int i = 0; i < m; ++i) {
    Form t = cd.sd.d(theta[i]);
    for (int j = 0; j < m; ++j) {
      t = t + cd.omega.at(i, j).wedge(theta[j]);
      t = t - omega_big.at(i, j).wedge(cd.eta[j]);
    }
    defect.push_back(std::move(t));
  }
  return defect;
}

FormMatrix second_bianchi_defect(const ConnectionData& cd) {
  require_square(cd);
  require_integrable(cd);
  const FormMatrix omega_big = curvature_form(cd);
  return matrix_add(matrix_sub(matrix_d(omega_big, cd.sd), matrix_wedge(omega_big, cd.omega)),
                    matrix_wedge(cd.omega, omega_big));
}

}  // namespace eds
