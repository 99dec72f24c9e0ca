#include "drpp/loss.hpp"

#include <cmath>

namespace drpp {

double log1p_exp(double u) {
  if (u > 0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

double sigmoid(double u) {
  if (u >= 0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

void LossConstants::validate() const {
  const double vals[] = {l_theta_theta, l_theta_zeta, l_zeta_theta,
                         l_zeta,        gamma_loss,   l_zeta_zeta};
  for (double v : vals)
    detail::require(v >= 0.0 && std::isfinite(v),
                    "loss constants must be nonnegative and finite");
}

LossModel LossModel::logistic() {
  LossModel m;
  m.kind_ = LossKind::Logistic;
  return m;
}

LossModel LossModel::ridge_logistic(double ridge) {
  detail::require(ridge >= 0 && std::isfinite(ridge), "ridge must be nonnegative");
  LossModel m;
  m.kind_ = LossKind::RidgeLogistic;
  m.ridge_ = ridge;
  return m;
}

LossModel LossModel::quadratic_synthetic(double zeta_curvature, double ridge) {
  detail::require(std::isfinite(zeta_curvature) && std::isfinite(ridge) && ridge >= 0,
                  "invalid quadratic loss parameters");
  LossModel m;
  m.kind_ = LossKind::QuadraticSynthetic;
  m.q_ = zeta_curvature;
  m.ridge_ = ridge;
  return m;
}

LossModel LossModel::linear_synthetic() {
  LossModel m;
  m.kind_ = LossKind::LinearSynthetic;
  return m;
}

namespace {
int require_label(const std::optional<int>& label) {
  detail::require(label.has_value(), "logistic loss requires a 0/1 label");
  detail::require(*label == 0 || *label == 1, "label must be 0 or 1");
  return *label;
}
}  // namespace

double LossModel::value(const Vector& theta, const Vector& zeta,
                        std::optional<int> label) const {
  detail::require_finite(theta, "theta");
  detail::require_finite(zeta, "zeta");
  detail::require_same_dim(theta, zeta, "loss");
  switch (kind_) {
    case LossKind::Logistic:
    case LossKind::RidgeLogistic: {
      const double y = require_label(label);
      const double u = theta.dot(zeta);
      return -y * u + log1p_exp(u) + 0.5 * ridge_ * theta.squaredNorm();
    }
    case LossKind::QuadraticSynthetic:
      return 0.5 * q_ * (zeta - theta).squaredNorm() + 0.5 * ridge_ * theta.squaredNorm();
    case LossKind::LinearSynthetic:
      return theta.dot(zeta);
  }
  return 0.0;
}

Vector LossModel::grad_theta(const Vector& theta, const Vector& zeta,
                             std::optional<int> label) const {
  detail::require_finite(theta, "theta");
  detail::require_finite(zeta, "zeta");
  detail::require_same_dim(theta, zeta, "loss");
  switch (kind_) {
    case LossKind::Logistic:
    case LossKind::RidgeLogistic: {
      const double y = require_label(label);
      const double s = sigmoid(theta.dot(zeta));
      return (s - y) * zeta + ridge_ * theta;
    }
    case LossKind::QuadraticSynthetic:
      return q_ * (theta - zeta) + ridge_ * theta;
    case LossKind::LinearSynthetic:
      return zeta;
  }
  return Vector::Zero(theta.size());
}

Vector LossModel::grad_zeta(const Vector& theta, const Vector& zeta,
                            std::optional<int> label) const {
  detail::require_finite(theta, "theta");
  detail::require_finite(zeta, "zeta");
  detail::require_same_dim(theta, zeta, "loss");
  switch (kind_) {
    case LossKind::Logistic:
    case LossKind::RidgeLogistic: {
      const double y = require_label(label);
      const double s = sigmoid(theta.dot(zeta));
      return (s - y) * theta;
    }
    case LossKind::QuadraticSynthetic:
      return q_ * (zeta - theta);
    case LossKind::LinearSynthetic:
      return theta;
  }
  return Vector::Zero(theta.size());
}

LossConstants LossModel::derive_constants(const ParamSpace& theta_space,
                                          const SampleSpace& sample_space) const {
  LossConstants c;
  // sup ||x|| over the sample box.
  double mx2 = 0.0;
  for (Eigen::Index i = 0; i < sample_space.dim(); ++i) {
    const double m = std::max(std::abs(sample_space.lo()[i]), std::abs(sample_space.hi()[i]));
    mx2 += m * m;
  }
  const double mx = std::sqrt(mx2);
  switch (kind_) {
    case LossKind::Logistic:
    case LossKind::RidgeLogistic: {
      const double r = theta_space.sup_norm();
      c.l_theta_theta = mx2 / 4.0 + ridge_;
      c.l_theta_zeta = r * mx / 4.0 + 1.0;  // |sigma - y| slack bounded by 1
      c.l_zeta_theta = c.l_theta_zeta;
      c.l_zeta = r;
      c.l_zeta_zeta = r * r / 4.0;
      c.gamma_loss = ridge_;
      break;
    }
    case LossKind::QuadraticSynthetic: {
      const double r = theta_space.sup_norm();
      c.l_theta_theta = std::abs(q_ + ridge_);
      c.l_theta_zeta = std::abs(q_);
      c.l_zeta_theta = std::abs(q_);
      c.l_zeta = std::abs(q_) * (mx + r);
      c.l_zeta_zeta = std::max(q_, 0.0);
      c.gamma_loss = std::max(q_ + ridge_, 0.0);
      break;
    }
    case LossKind::LinearSynthetic: {
      c.l_theta_theta = 0.0;
      c.l_theta_zeta = 1.0;
      c.l_zeta_theta = 1.0;
      c.l_zeta = theta_space.sup_norm();
      c.l_zeta_zeta = 0.0;
      c.gamma_loss = 0.0;
      break;
    }
  }
  c.validate();
  return c;
}

void LossModel::declare_constants(LossConstants c) {
  c.validate();
  constants_ = c;
  has_constants_ = true;
}

const LossConstants& LossModel::constants() const {
  if (!has_constants_) throw StateError("loss constants have not been declared");
  return constants_;
}

}  // namespace drpp
