#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace drpp {

using Vector = Eigen::VectorXd;

// Thrown when the inner problem is not certifiably strongly concave
// (mu = 2*lambda_min - L_zetazeta <= 0).
class ConcavityViolation : public std::runtime_error {
 public:
  explicit ConcavityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Iteration budget exhausted; carries the best iterate and its certified gap.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, Vector best, double gap)
      : std::runtime_error(what), best_iterate(std::move(best)), certified_gap(gap) {}
  Vector best_iterate;
  double certified_gap;
};

class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Dataset ingestion failure with row/column context in the message.
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}
inline void require_finite(const Vector& v, const std::string& name) {
  if (!v.allFinite()) throw std::invalid_argument(name + " contains NaN or Inf");
}
inline void require_same_dim(const Vector& a, const Vector& b, const std::string& ctx) {
  if (a.size() != b.size())
    throw std::invalid_argument(ctx + ": dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
}
}  // namespace detail

}  // namespace drpp
