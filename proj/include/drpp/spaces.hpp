#pragma once

#include <optional>
#include <vector>

#include "drpp/errors.hpp"

namespace drpp {

enum class SpaceKind { Unconstrained, Ball, Box };

/// Closed convex constraint set for the model parameter theta, with exact
/// Euclidean projection. Value type; immutable after construction.
class ParamSpace {
 public:
  static ParamSpace unconstrained(Eigen::Index dim);
  static ParamSpace ball(Vector center, double radius, double projection_tol = 1e-12);
  static ParamSpace box(Vector lo, Vector hi, double projection_tol = 1e-12);

  SpaceKind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  double radius() const { return radius_; }
  const Vector& center() const { return center_; }
  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }

  Vector project(const Vector& theta) const;
  bool contains(const Vector& theta, double tol = 1e-12) const;

  /// sup_{theta in set} ||theta||_2; throws for unconstrained spaces.
  double sup_norm() const;
  /// inf_{theta in set} ||theta||_2.
  double inf_norm() const;
  bool bounded() const { return kind_ != SpaceKind::Unconstrained; }

 private:
  SpaceKind kind_ = SpaceKind::Unconstrained;
  Eigen::Index dim_ = 0;
  Vector center_, lo_, hi_;
  double radius_ = 0.0;
  double projection_tol_ = 1e-12;
};

/// Compact box Xi holding feature vectors. The label lives outside the vector
/// (see Sample); strategic_mask marks the coordinates that perturbations and
/// strategic responses may move. Non-strategic coordinates (e.g. the intercept
/// slot) pass through projections untouched and carry zero transport cost.
class SampleSpace {
 public:
  SampleSpace(Vector lo, Vector hi, std::vector<bool> strategic_mask, bool binary_labels);

  Eigen::Index dim() const { return lo_.size(); }
  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  const std::vector<bool>& strategic_mask() const { return mask_; }
  bool has_labels() const { return binary_labels_; }
  int strategic_count() const { return strategic_count_; }

  /// ||hi - lo||_2, the stored diameter D_xi.
  double diameter() const { return d_xi_; }

  bool contains(const Vector& xi, double tol = 1e-12) const;

  /// Clamp the strategic coordinates of zeta into the box; non-strategic
  /// coordinates are replaced by the reference sample's values.
  Vector project_perturbation(const Vector& reference_xi, const Vector& zeta) const;

  /// Squared Euclidean distance over strategic coordinates only.
  double transport_cost(const Vector& xi, const Vector& zeta) const;

  /// Extract / scatter the strategic sub-vector.
  Vector strategic_part(const Vector& full) const;

 private:
  Vector lo_, hi_;
  std::vector<bool> mask_;
  bool binary_labels_ = false;
  int strategic_count_ = 0;
  double d_xi_ = 0.0;
};

struct Sample {
  Vector xi;
  std::optional<int> label;  // 0/1 when present
};

}  // namespace drpp
