#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "naijavar/rules.hpp"

namespace naijavar {

/// Portable seeded generator: std::mt19937_64 (fully specified by the C++
/// standard) with the integer-to-real and bounded-integer conversions done
/// here rather than by the implementation-defined standard distributions, so
/// a seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n) by rejection; n must be > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (seed, stream): independent per-stream seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr double kDefaultEpsilon = 1e-4;

// p_i = (1 / max(d_i, eps)) / sum_j (1 / max(d_j, eps)).
std::vector<double> inverse_distance_probabilities(std::span<const double> distances, double epsilon = kDefaultEpsilon);

struct VariantDistribution {
  std::vector<VariantCandidate> candidates;  // probability filled
  double normalizer = 0.0;                   // sum of inverse distances
  double epsilon = kDefaultEpsilon;
};

// Throws ValidationError for an empty list, a missing or negative distance,
// or a non-positive epsilon.
VariantDistribution candidate_probabilities(std::vector<VariantCandidate> candidates,
                                            double epsilon = kDefaultEpsilon);

// Inverse-CDF draw over candidate order.
const VariantCandidate& sample_variant(const VariantDistribution& dist, Rng& rng);

}  // namespace naijavar
