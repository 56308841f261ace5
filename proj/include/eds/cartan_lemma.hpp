#pragma once

#include <optional>
#include <vector>

#include "eds/form.hpp"
#include "eds/linalg.hpp"

namespace eds {

/// Raised when sum_i theta_i ^ omega_i != 0; carries the recomputed residual
/// 2-form.
struct cartan_lemma_residual : error {
  Form residual;
  cartan_lemma_residual(const std::string& msg, Form r) : error(msg), residual(std::move(r)) {}
};

/// Solves theta_i = sum_j h_ij omega_j for the unique symmetric h, given r
/// linearly independent 1-forms omega and 1-forms theta with
/// sum_i theta_i ^ omega_i = 0.  The omegas are completed to a coframe basis
/// and each theta expanded there; the hypothesis forces the complement
/// components to vanish and the omega-block to be symmetric, and both are
/// verified rather than assumed.  Throws `error` on dependent omegas and
/// `cartan_lemma_residual` when the wedge hypothesis fails.
RationalMatrix cartan_lemma_solve(const std::vector<Form>& theta, const std::vector<Form>& omega);

}  // namespace eds
