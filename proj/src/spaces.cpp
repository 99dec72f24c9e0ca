#include "drpp/spaces.hpp"

#include <cmath>

namespace drpp {

ParamSpace ParamSpace::unconstrained(Eigen::Index dim) {
  ParamSpace s;
  s.kind_ = SpaceKind::Unconstrained;
  s.dim_ = dim;
  return s;
}

ParamSpace ParamSpace::ball(Vector center, double radius, double projection_tol) {
  detail::require_finite(center, "ball center");
  detail::require(radius > 0 && std::isfinite(radius), "ball radius must be positive and finite");
  ParamSpace s;
  s.kind_ = SpaceKind::Ball;
  s.dim_ = center.size();
  s.center_ = std::move(center);
  s.radius_ = radius;
  s.projection_tol_ = projection_tol;
  return s;
}

ParamSpace ParamSpace::box(Vector lo, Vector hi, double projection_tol) {
  detail::require_finite(lo, "box lo");
  detail::require_finite(hi, "box hi");
  detail::require_same_dim(lo, hi, "box bounds");
  detail::require((lo.array() <= hi.array()).all(), "box requires lo <= hi coordinate-wise");
  ParamSpace s;
  s.kind_ = SpaceKind::Box;
  s.dim_ = lo.size();
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  s.projection_tol_ = projection_tol;
  return s;
}

Vector ParamSpace::project(const Vector& theta) const {
  detail::require_finite(theta, "projection input");
  detail::require(theta.size() == dim_, "projection input has wrong dimension");
  switch (kind_) {
    case SpaceKind::Unconstrained:
      return theta;
    case SpaceKind::Box:
      return theta.cwiseMax(lo_).cwiseMin(hi_);
    case SpaceKind::Ball: {
      const Vector d = theta - center_;
      const double n = d.norm();
      // The tolerance band makes Proj(Proj(x)) == Proj(x) bit-exact.
      if (n <= radius_ * (1.0 + projection_tol_)) return theta;
      return center_ + d * (radius_ / n);
    }
  }
  return theta;
}

bool ParamSpace::contains(const Vector& theta, double tol) const {
  if (theta.size() != dim_) return false;
  switch (kind_) {
    case SpaceKind::Unconstrained:
      return theta.allFinite();
    case SpaceKind::Box:
      return ((theta - lo_).array() >= -tol).all() && ((hi_ - theta).array() >= -tol).all();
    case SpaceKind::Ball:
      return (theta - center_).norm() <= radius_ + tol;
  }
  return false;
}

double ParamSpace::sup_norm() const {
  switch (kind_) {
    case SpaceKind::Ball:
      return center_.norm() + radius_;
    case SpaceKind::Box: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < dim_; ++i) {
        const double m = std::max(std::abs(lo_[i]), std::abs(hi_[i]));
        s += m * m;
      }
      return std::sqrt(s);
    }
    case SpaceKind::Unconstrained:
      throw UnsupportedError("sup_norm undefined for an unconstrained parameter space");
  }
  return 0.0;
}

double ParamSpace::inf_norm() const {
  switch (kind_) {
    case SpaceKind::Ball:
      return std::max(0.0, center_.norm() - radius_);
    case SpaceKind::Box: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < dim_; ++i) {
        double d = 0.0;
        if (lo_[i] > 0) d = lo_[i];
        if (hi_[i] < 0) d = hi_[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case SpaceKind::Unconstrained:
      return 0.0;
  }
  return 0.0;
}

SampleSpace::SampleSpace(Vector lo, Vector hi, std::vector<bool> strategic_mask,
                         bool binary_labels)
    : lo_(std::move(lo)), hi_(std::move(hi)), mask_(std::move(strategic_mask)),
      binary_labels_(binary_labels) {
  detail::require_finite(lo_, "sample space lo");
  detail::require_finite(hi_, "sample space hi");
  detail::require_same_dim(lo_, hi_, "sample space bounds");
  detail::require((lo_.array() <= hi_.array()).all(), "sample space requires lo <= hi");
  detail::require(static_cast<Eigen::Index>(mask_.size()) == lo_.size(),
                  "strategic mask must match feature dimension");
  for (bool b : mask_) strategic_count_ += b ? 1 : 0;
  d_xi_ = (hi_ - lo_).norm();
}

bool SampleSpace::contains(const Vector& xi, double tol) const {
  if (xi.size() != dim()) return false;
  return ((xi - lo_).array() >= -tol).all() && ((hi_ - xi).array() >= -tol).all();
}

Vector SampleSpace::project_perturbation(const Vector& reference_xi, const Vector& zeta) const {
  detail::require_same_dim(reference_xi, zeta, "project_perturbation");
  detail::require(zeta.size() == dim(), "project_perturbation: wrong dimension");
  detail::require_finite(zeta, "perturbation");
  Vector out(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    out[i] = mask_[i] ? std::min(hi_[i], std::max(lo_[i], zeta[i])) : reference_xi[i];
  }
  return out;
}

double SampleSpace::transport_cost(const Vector& xi, const Vector& zeta) const {
  detail::require_same_dim(xi, zeta, "transport_cost");
  detail::require_finite(xi, "xi");
  detail::require_finite(zeta, "zeta");
  double c = 0.0;
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    if (!mask_[i]) continue;
    const double d = xi[i] - zeta[i];
    c += d * d;
  }
  return c;
}

Vector SampleSpace::strategic_part(const Vector& full) const {
  detail::require(full.size() == dim(), "strategic_part: wrong dimension");
  Vector out(strategic_count_);
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (mask_[i]) out[j++] = full[i];
  return out;
}

}  // namespace drpp
