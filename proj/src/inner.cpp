#include "drpp/inner.hpp"

#include <cmath>
#include <limits>

namespace drpp {

double RobustObjective::phi(const Vector& theta, const Sample& sample,
                            const Vector& zeta) const {
  return loss->value(theta, zeta, sample.label) -
         penalty->value(theta) * space->transport_cost(sample.xi, zeta);
}

Vector RobustObjective::grad_zeta_phi(const Vector& theta, const Sample& sample,
                                      const Vector& zeta) const {
  Vector g = loss->grad_zeta(theta, zeta, sample.label);
  const double lam = penalty->value(theta);
  const auto& mask = space->strategic_mask();
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    if (mask[i])
      g[i] -= 2.0 * lam * (zeta[i] - sample.xi[i]);
    else
      g[i] = 0.0;
  }
  return g;
}

Vector RobustObjective::grad_theta_phi(const Vector& theta, const Sample& sample,
                                       const Vector& zeta) const {
  const double c = space->transport_cost(sample.xi, zeta);
  return loss->grad_theta(theta, zeta, sample.label) - penalty->grad(theta) * c;
}

namespace {

InnerSolution closed_form_linear(const Vector& theta, const Sample& sample,
                                 const RobustObjective& objective) {
  const double lam = objective.penalty->value(theta);
  detail::require(lam > 0, "closed-form inner solve requires lambda > 0");
  const Vector z =
      objective.space->project_perturbation(sample.xi, sample.xi + theta / (2.0 * lam));
  InnerSolution sol;
  sol.z = z;
  sol.phi_value = objective.phi(theta, sample, z);
  sol.certified_gap = 0.0;
  sol.ascent_iters_used = 0;
  return sol;
}

}  // namespace

InnerSolution solve_inner(const Vector& theta, const Sample& sample,
                          const RobustObjective& objective, const InnerSolveConfig& cfg,
                          const RegularityLedger& ledger, const Vector* warm_start) {
  cfg.validate();
  ledger.require_mu();
  detail::require_finite(theta, "theta");
  detail::require(objective.space->contains(sample.xi, 1e-9), "sample lies outside Xi");

  if (objective.loss->kind() == LossKind::LinearSynthetic)
    return closed_form_linear(theta, sample, objective);

  const double mu = ledger.mu();
  const double lip = ledger.loss.l_zeta_zeta + 2.0 * ledger.penalty.lambda_max;
  const double step = cfg.fixed_step > 0 ? cfg.fixed_step : 1.0 / lip;

  Vector z = objective.space->project_perturbation(sample.xi, sample.xi);
  if (warm_start != nullptr && warm_start->size() == z.size()) {
    Vector w = objective.space->project_perturbation(sample.xi, *warm_start);
    // Keep the f >= l(theta, xi) contract: never start below the xi value.
    if (objective.phi(theta, sample, w) >= objective.phi(theta, sample, z)) z = std::move(w);
  }

  InnerSolution best;
  best.certified_gap = std::numeric_limits<double>::infinity();

  for (int k = 0; k <= cfg.max_ascent_iters; ++k) {
    const Vector g = objective.grad_zeta_phi(theta, sample, z);
    const Vector p = objective.space->project_perturbation(sample.xi, z + step * g);
    const double grad_map_norm = (z - p).norm() / step;
    const double cert = std::min(g.norm(), 2.0 * grad_map_norm) / mu;

    if (cfg.record_trace) best.phi_trace.push_back(objective.phi(theta, sample, z));
    if (cert < best.certified_gap) {
      best.z = z;
      best.certified_gap = cert;
      best.ascent_iters_used = k;
    }
    if (cert <= cfg.inner_tol) {
      best.z = z;
      best.certified_gap = cert;
      best.ascent_iters_used = k;
      best.phi_value = objective.phi(theta, sample, z);
      return best;
    }
    z = p;
  }

  best.phi_value = objective.phi(theta, sample, best.z);
  throw NonConvergence("inner maximizer exhausted " + std::to_string(cfg.max_ascent_iters) +
                           " ascent iterations (best certified gap " +
                           std::to_string(best.certified_gap) + ")",
                       best.z, best.certified_gap);
}

double surrogate_f(const Vector& theta, const Sample& sample, const RobustObjective& objective,
                   const InnerSolveConfig& cfg, const RegularityLedger& ledger,
                   const Vector* warm_start) {
  return solve_inner(theta, sample, objective, cfg, ledger, warm_start).phi_value;
}

Vector danskin_grad(const Vector& theta, const Sample& sample, const InnerSolution& solution,
                    const RobustObjective& objective) {
  return objective.grad_theta_phi(theta, sample, solution.z);
}

}  // namespace drpp
