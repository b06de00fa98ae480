#include "naijavar/sampler.hpp"

#include <algorithm>

#include "naijavar/error.hpp"

namespace naijavar {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ValidationError("Rng::below requires n > 0");
  // Largest multiple of n that fits; values at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> inverse_distance_probabilities(std::span<const double> distances, double epsilon) {
  if (distances.empty()) throw ValidationError("cannot build a distribution over zero candidates");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be > 0");
  std::vector<double> inv;
  inv.reserve(distances.size());
  double z = 0.0;
  for (double d : distances) {
    if (!(d >= 0.0)) throw ValidationError("candidate distances must be >= 0");
    inv.push_back(1.0 / std::max(d, epsilon));
    z += inv.back();
  }
  for (double& v : inv) v /= z;
  return inv;
}

VariantDistribution candidate_probabilities(std::vector<VariantCandidate> candidates, double epsilon) {
  if (candidates.empty()) throw ValidationError("cannot build a distribution over zero candidates");
  std::vector<double> d;
  d.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (!c.distance) throw ValidationError("candidate '" + c.surface + "' has not been scored");
    d.push_back(*c.distance);
  }
  const auto p = inverse_distance_probabilities(d, epsilon);
  VariantDistribution out;
  out.epsilon = epsilon;
  for (double x : d) out.normalizer += 1.0 / std::max(x, epsilon);
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i].probability = p[i];
  out.candidates = std::move(candidates);
  return out;
}

const VariantCandidate& sample_variant(const VariantDistribution& dist, Rng& rng) {
  if (dist.candidates.empty()) throw ValidationError("cannot sample from an empty distribution");
  const double u = rng.uniform();
  double cumulative = 0.0;
  for (const auto& c : dist.candidates) {
    cumulative += c.probability.value_or(0.0);
    if (u < cumulative) return c;
  }
  return dist.candidates.back();
}

}  // namespace naijavar
