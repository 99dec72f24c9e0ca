#pragma once

#include <vector>

#include "drpp/ledger.hpp"

namespace drpp {

/// Bundles the pieces of the robust surrogate
///   phi(theta, xi, zeta) = l(theta, zeta) - lambda(theta) * c(xi, zeta)
/// for one problem instance. Pure functions; cheap to copy.
struct RobustObjective {
  const LossModel* loss = nullptr;
  const PenaltyFunction* penalty = nullptr;
  const SampleSpace* space = nullptr;

  double phi(const Vector& theta, const Sample& sample, const Vector& zeta) const;

  /// Gradient of phi in zeta, restricted to strategic coordinates
  /// (non-strategic slots are fixed and reported as zero).
  Vector grad_zeta_phi(const Vector& theta, const Sample& sample, const Vector& zeta) const;

  /// Gradient of phi in theta at fixed zeta:
  ///   grad_theta l(theta, zeta) - grad lambda(theta) * c(xi, zeta).
  Vector grad_theta_phi(const Vector& theta, const Sample& sample, const Vector& zeta) const;
};

struct InnerSolveConfig {
  double inner_tol = 1e-9;      // target bound on ||z - zeta*||
  int max_ascent_iters = 10000;
  double fixed_step = 0.0;      // 0 selects the Lipschitz rule 1/(L_zetazeta + 2*lambda_max)
  bool record_trace = false;    // keep per-iterate phi values (tests)

  void validate() const {
    detail::require(inner_tol > 0, "inner_tol must be positive");
    detail::require(max_ascent_iters >= 1, "max_ascent_iters must be >= 1");
    detail::require(fixed_step >= 0, "fixed_step must be nonnegative");
  }
};

struct InnerSolution {
  Vector z;
  double phi_value = 0.0;
  double certified_gap = 0.0;  // proven upper bound on ||z - zeta*||
  int ascent_iters_used = 0;
  std::vector<double> phi_trace;  // filled only when record_trace
};

/// epsilon-approximate maximizer of phi(theta, xi, .) over Xi.
///
/// linear-synthetic losses solve in closed form (zeta* is the projection of
/// xi + theta/(2 lambda), exact because the zeta-Hessian is isotropic). All
/// other kinds run projected gradient ascent. The returned certified_gap is
/// min(||grad phi(z)||, 2*||gradient mapping||) / mu; both are valid bounds on
/// ||z - zeta*|| under mu-strong concavity, the first tight when z is
/// interior, the second covering active box constraints.
InnerSolution solve_inner(const Vector& theta, const Sample& sample,
                          const RobustObjective& objective, const InnerSolveConfig& cfg,
                          const RegularityLedger& ledger, const Vector* warm_start = nullptr);

/// f(theta, xi) = sup_zeta phi(theta, xi, zeta), evaluated at the solved z.
double surrogate_f(const Vector& theta, const Sample& sample, const RobustObjective& objective,
                   const InnerSolveConfig& cfg, const RegularityLedger& ledger,
                   const Vector* warm_start = nullptr);

/// Envelope (Danskin) gradient of f in theta, evaluated at the supplied
/// inner solution.
Vector danskin_grad(const Vector& theta, const Sample& sample, const InnerSolution& solution,
                    const RobustObjective& objective);

}  // namespace drpp
