#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "drpp/spaces.hpp"

namespace drpp {

/// Immutable base dataset D in normalized units, plus the ingestion stats
/// used to produce it.
struct BaseDataset {
  std::vector<Sample> samples;
  std::vector<std::string> feature_names;
  SampleSpace space;
  Vector feature_means;   // normalization stats frozen at ingestion
  Vector feature_scales;

  BaseDataset(std::vector<Sample> s, std::vector<std::string> names, SampleSpace sp,
              Vector means, Vector scales);
};

enum class ShiftKind { Identity, LinearStrategic };

/// Strategic response map theta -> P_hat(theta).
/// linear_strategic shifts strategic features of the base data by
/// -epsilon * theta^S. from_previous compounds shifts across deployments
/// instead of re-shifting the base data; it exists for exploratory runs only
/// and has no sensitivity certificate.
struct ShiftMap {
  ShiftKind kind = ShiftKind::Identity;
  double epsilon_sens = 0.0;
  bool from_previous = false;

  static ShiftMap identity() { return {}; }
  static ShiftMap linear_strategic(double epsilon, bool from_previous = false) {
    detail::require(epsilon >= 0 && std::isfinite(epsilon), "epsilon_sens must be >= 0");
    return {ShiftKind::LinearStrategic, epsilon, from_previous};
  }
};

/// Snapshot of the current empirical distribution P_hat(theta). Deploying a
/// model returns a fresh snapshot; nothing is mutated in place.
struct EnvState {
  std::shared_ptr<const BaseDataset> base;
  std::vector<Sample> current_samples;
  Vector deployed_theta;     // empty until the first deployment
  std::uint64_t rng_seed = 0;
  int epoch = 0;
  long clamped_coordinates = 0;  // diagnostics: clamp count of the last deploy

  static EnvState initial(std::shared_ptr<const BaseDataset> base, std::uint64_t seed);
  const SampleSpace& space() const { return base->space; }
  std::size_t size() const { return current_samples.size(); }
};

/// Apply the strategic response to theta and return the induced state.
EnvState deploy(const EnvState& env, const Vector& theta, const ShiftMap& map);

/// Uniform-with-replacement draw of n samples, keyed by (seed, epoch).
std::vector<Sample> draw_batch(const EnvState& env, std::size_t n, std::uint64_t seed);

/// The whole dataset in stored order.
const std::vector<Sample>& full_batch(const EnvState& env);

/// Wasserstein-1 sensitivity certificate of the map: for linear_strategic,
/// W1(P(theta), P(theta')) = epsilon * ||theta^S - theta'^S|| absent clamping.
double sensitivity_certificate(const ShiftMap& map);

}  // namespace drpp
