#pragma once

#include <optional>

#include "drpp/spaces.hpp"

namespace drpp {

enum class LossKind { Logistic, RidgeLogistic, QuadraticSynthetic, LinearSynthetic };

/// User-declared regularity constants of a loss (Lipschitz moduli of the
/// gradients, strong convexity in theta, curvature bound in zeta). All values
/// are conservative upper bounds valid on the declared Theta x Xi.
struct LossConstants {
  double l_theta_theta = 0.0;
  double l_theta_zeta = 0.0;
  double l_zeta_theta = 0.0;
  double l_zeta = 0.0;
  double gamma_loss = 0.0;   // strong convexity modulus in theta
  double l_zeta_zeta = 0.0;  // largest-eigenvalue bound of the zeta-Hessian

  void validate() const;
};

/// Loss l(theta, zeta) with both partial gradients.
///
/// Kinds:
///   logistic            -y*theta'x + log(1 + exp(theta'x))
///   ridge-logistic      logistic + (ridge/2)*||theta||^2
///   quadratic-synthetic (q/2)*||zeta - theta||^2 + (ridge/2)*||theta||^2
///   linear-synthetic    theta' zeta
class LossModel {
 public:
  static LossModel logistic();
  static LossModel ridge_logistic(double ridge);
  static LossModel quadratic_synthetic(double zeta_curvature = 1.0, double ridge = 0.0);
  static LossModel linear_synthetic();

  LossKind kind() const { return kind_; }
  double ridge() const { return ridge_; }
  double zeta_curvature() const { return q_; }
  bool needs_label() const {
    return kind_ == LossKind::Logistic || kind_ == LossKind::RidgeLogistic;
  }

  double value(const Vector& theta, const Vector& zeta, std::optional<int> label) const;
  Vector grad_theta(const Vector& theta, const Vector& zeta, std::optional<int> label) const;
  Vector grad_zeta(const Vector& theta, const Vector& zeta, std::optional<int> label) const;

  /// Conservative analytic constants from the box/ball geometry
  /// (theta_space must be bounded for the logistic and linear kinds).
  LossConstants derive_constants(const ParamSpace& theta_space,
                                 const SampleSpace& sample_space) const;

  void declare_constants(LossConstants c);
  const LossConstants& constants() const;
  bool has_constants() const { return has_constants_; }

 private:
  LossKind kind_ = LossKind::Logistic;
  double ridge_ = 0.0;
  double q_ = 1.0;
  LossConstants constants_{};
  bool has_constants_ = false;
};

/// Numerically stable log(1 + exp(u)) and sigmoid.
double log1p_exp(double u);
double sigmoid(double u);

}  // namespace drpp
