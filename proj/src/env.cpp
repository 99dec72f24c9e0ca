#include "drpp/env.hpp"

#include "drpp/rng.hpp"

namespace drpp {

BaseDataset::BaseDataset(std::vector<Sample> s, std::vector<std::string> names, SampleSpace sp,
                         Vector means, Vector scales)
    : samples(std::move(s)), feature_names(std::move(names)), space(std::move(sp)),
      feature_means(std::move(means)), feature_scales(std::move(scales)) {
  detail::require(!samples.empty(), "dataset must contain at least one sample");
  for (const auto& sample : samples) {
    detail::require(sample.xi.size() == space.dim(), "sample dimension mismatch");
    detail::require(space.contains(sample.xi, 1e-9), "sample lies outside Xi");
    if (space.has_labels())
      detail::require(sample.label.has_value(), "labeled space requires labels");
  }
}

EnvState EnvState::initial(std::shared_ptr<const BaseDataset> base, std::uint64_t seed) {
  detail::require(base != nullptr, "null dataset");
  EnvState env;
  env.current_samples = base->samples;
  env.base = std::move(base);
  env.rng_seed = seed;
  env.epoch = 0;
  return env;
}

EnvState deploy(const EnvState& env, const Vector& theta, const ShiftMap& map) {
  const SampleSpace& space = env.space();
  detail::require_finite(theta, "theta");
  detail::require(theta.size() == space.dim(),
                  "deploy: theta dimension must match the feature dimension");

  EnvState next;
  next.base = env.base;
  next.rng_seed = env.rng_seed;
  next.epoch = env.epoch + 1;
  next.deployed_theta = theta;
  next.clamped_coordinates = 0;

  // Canonical mode shifts the immutable base data, so P_hat is a function of
  // theta alone and repeated deployments do not compound.
  const std::vector<Sample>& source =
      (map.from_previous && map.kind == ShiftKind::LinearStrategic) ? env.current_samples
                                                                    : env.base->samples;
  next.current_samples.reserve(source.size());
  const auto& mask = space.strategic_mask();
  for (const Sample& s : source) {
    Sample moved = s;
    if (map.kind == ShiftKind::LinearStrategic && map.epsilon_sens > 0) {
      for (Eigen::Index i = 0; i < moved.xi.size(); ++i) {
        if (!mask[i]) continue;
        double v = moved.xi[i] - map.epsilon_sens * theta[i];
        const double clamped = std::min(space.hi()[i], std::max(space.lo()[i], v));
        if (clamped != v) ++next.clamped_coordinates;
        moved.xi[i] = clamped;
      }
    }
    next.current_samples.push_back(std::move(moved));
  }
  return next;
}

std::vector<Sample> draw_batch(const EnvState& env, std::size_t n, std::uint64_t seed) {
  if (env.current_samples.empty()) throw StateError("draw_batch on an empty environment");
  detail::require(n >= 1, "batch size must be >= 1");
  std::vector<Sample> batch;
  batch.reserve(n);
  const std::uint64_t stream = 0x9e3779b9ULL + static_cast<std::uint64_t>(env.epoch);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t idx = rng::index(seed, stream, j, env.current_samples.size());
    batch.push_back(env.current_samples[idx]);
  }
  return batch;
}

const std::vector<Sample>& full_batch(const EnvState& env) {
  if (env.current_samples.empty()) throw StateError("full_batch on an empty environment");
  return env.current_samples;
}

double sensitivity_certificate(const ShiftMap& map) {
  if (map.from_previous)
    throw UnsupportedError(
        "no sensitivity certificate exists for the compounding shift mode");
  switch (map.kind) {
    case ShiftKind::Identity:
      return 0.0;
    case ShiftKind::LinearStrategic:
      return map.epsilon_sens;
  }
  throw UnsupportedError("unknown shift map kind");
}

}  // namespace drpp
