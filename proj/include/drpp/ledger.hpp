#pragma once

#include "drpp/loss.hpp"
#include "drpp/penalty.hpp"

namespace drpp {

/// Regularity constants shared by the solvers and the theory module.
///
/// mu() is the effective strong-concavity modulus of phi in zeta. The plain
/// 2*lambda_min value assumes a concave-in-zeta loss; losses that are convex
/// in zeta (logistic, quadratic with q > 0) eat into it through l_zeta_zeta,
/// so mu = 2*lambda_min - l_zeta_zeta and every inner solve requires mu > 0.
///
/// gamma() is the effective strong-convexity modulus of phi in theta,
/// gamma_loss - h_lambda * d_xi^2. gamma_paper_readout() reports the
/// alternate L_theta_theta - h_lambda * d_xi^2 form verbatim.
struct RegularityLedger {
  double epsilon_sens = 0.0;
  LossConstants loss;
  PenaltyFunction::Bounds penalty;
  double d_xi = 0.0;

  double mu() const { return 2.0 * penalty.lambda_min - loss.l_zeta_zeta; }
  double gamma() const { return loss.gamma_loss - penalty.h_lambda * d_xi * d_xi; }
  double gamma_paper_readout() const {
    return loss.l_theta_theta - penalty.h_lambda * d_xi * d_xi;
  }

  void require_mu() const {
    if (!(mu() > 0.0))
      throw ConcavityViolation("inner problem not strongly concave: mu = " +
                               std::to_string(mu()) + " <= 0");
  }
  void require_gamma() const {
    if (!(gamma() > 0.0))
      throw StateError("strong convexity not certified: gamma = " +
                       std::to_string(gamma()) + " <= 0");
  }
};

inline RegularityLedger make_ledger(const LossModel& loss, const PenaltyFunction& penalty,
                                    const ParamSpace& theta_space,
                                    const SampleSpace& sample_space, double epsilon_sens) {
  detail::require(epsilon_sens >= 0 && std::isfinite(epsilon_sens),
                  "epsilon_sens must be nonnegative");
  RegularityLedger ledger;
  ledger.epsilon_sens = epsilon_sens;
  ledger.loss = loss.has_constants() ? loss.constants()
                                     : loss.derive_constants(theta_space, sample_space);
  ledger.penalty = penalty.derive_bounds(theta_space);
  ledger.d_xi = sample_space.diameter();
  return ledger;
}

}  // namespace drpp
