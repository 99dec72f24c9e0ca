#include "drpp/penalty.hpp"

#include <cmath>

namespace drpp {

PenaltyFunction PenaltyFunction::constant(double lambda_c) {
  detail::require(lambda_c >= 0 && std::isfinite(lambda_c),
                  "constant penalty requires lambda_c >= 0");
  PenaltyFunction p;
  p.kind_ = PenaltyKind::Constant;
  p.lambda_c_ = lambda_c;
  return p;
}

PenaltyFunction PenaltyFunction::quadratic(double lambda_c, double a) {
  detail::require(lambda_c >= 0 && std::isfinite(lambda_c) && a >= 0 && std::isfinite(a),
                  "quadratic penalty requires lambda_c >= 0 and a >= 0");
  PenaltyFunction p;
  p.kind_ = PenaltyKind::Quadratic;
  p.lambda_c_ = lambda_c;
  p.a_ = a;
  return p;
}

double PenaltyFunction::value(const Vector& theta) const {
  detail::require_finite(theta, "theta");
  if (kind_ == PenaltyKind::Constant) return lambda_c_;
  return lambda_c_ + a_ * theta.squaredNorm();
}

Vector PenaltyFunction::grad(const Vector& theta) const {
  detail::require_finite(theta, "theta");
  if (kind_ == PenaltyKind::Constant) return Vector::Zero(theta.size());
  return 2.0 * a_ * theta;
}

PenaltyFunction::Bounds PenaltyFunction::derive_bounds(const ParamSpace& theta_space) const {
  Bounds b;
  if (kind_ == PenaltyKind::Constant || a_ == 0.0) {
    b.lambda_min = lambda_c_;
    b.lambda_max = lambda_c_;
    b.l_lambda = 0.0;
    b.h_lambda = 0.0;
    return b;
  }
  if (!theta_space.bounded())
    throw UnsupportedError(
        "quadratic penalty bounds require a bounded parameter space");
  const double rmin = theta_space.inf_norm();
  const double rmax = theta_space.sup_norm();
  b.lambda_min = lambda_c_ + a_ * rmin * rmin;
  b.lambda_max = lambda_c_ + a_ * rmax * rmax;
  b.l_lambda = 2.0 * a_ * rmax;
  b.h_lambda = 2.0 * a_;
  return b;
}

}  // namespace drpp
