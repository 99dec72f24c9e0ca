#pragma once

#include "drpp/spaces.hpp"

namespace drpp {

enum class PenaltyKind { Constant, Quadratic };

/// Ambiguity penalty lambda(theta): constant lambda_c, or lambda_c + a*||theta||^2.
class PenaltyFunction {
 public:
  struct Bounds {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double l_lambda = 0.0;  // sup ||grad lambda||
    double h_lambda = 0.0;  // Lipschitz modulus of grad lambda
  };

  static PenaltyFunction constant(double lambda_c);
  static PenaltyFunction quadratic(double lambda_c, double a);

  PenaltyKind kind() const { return kind_; }
  double lambda_c() const { return lambda_c_; }
  double coefficient() const { return a_; }

  double value(const Vector& theta) const;
  Vector grad(const Vector& theta) const;

  /// Analytic bounds over the given parameter space. The quadratic kind
  /// requires a bounded space.
  Bounds derive_bounds(const ParamSpace& theta_space) const;

 private:
  PenaltyKind kind_ = PenaltyKind::Constant;
  double lambda_c_ = 0.0;
  double a_ = 0.0;
};

}  // namespace drpp
