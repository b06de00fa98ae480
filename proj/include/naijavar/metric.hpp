#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "naijavar/g2p.hpp"
#include "naijavar/phonology.hpp"
#include "naijavar/rules.hpp"

namespace naijavar {

// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Phonologically weighted edit distance: substitution w(a,b), insertion and
// deletion indel_cost, summed (no length normalization). Throws Error when a
// unit is missing from the matrix.
double pwld(std::span<const std::string> a, std::span<const std::string> b, const WeightMatrix& weights);

// Same distance plus the substituted (a != b) symbol index pairs on one
// optimal path.
struct PwldPath {
  double distance = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> substitutions;
};
PwldPath pwld_path(std::span<const std::string> a, std::span<const std::string> b, const WeightMatrix& weights);

struct DistanceReport {
  std::size_t ld = 0;
  double pwld = 0.0;
};

struct CalibrationItem {
  std::string seed;
  std::string variant;
  bool good = false;
};

using CalibrationSet = std::vector<CalibrationItem>;

// `seed<TAB>variant<TAB>good|bad`
CalibrationSet load_calibration(const std::filesystem::path& path);
CalibrationSet parse_calibration(std::string_view contents, const std::filesystem::path& source = "<calibration>");

struct ThresholdFit {
  double threshold = 0.0;
  double accuracy = 0.0;
};

// Threshold maximizing accuracy of [distance <= tau => good]. Candidates are
// midpoints between consecutive distinct distances plus one value below the
// minimum and one above the maximum; the smallest best candidate wins.
ThresholdFit best_threshold(std::span<const double> distances, const std::vector<bool>& good);

struct CalibrationResult {
  WeightMatrix weights;
  double threshold = 0.0;
  double accuracy = 0.0;
  double baseline_threshold = 0.0;
  double baseline_accuracy = 0.0;
  // Multiplier per adjusted symbol pair (a < b by index); 1.0 entries omitted.
  std::map<std::pair<std::size_t, std::size_t>, double> multipliers;
};

struct CalibrationOptions {
  std::vector<double> multiplier_grid{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};
  int max_rounds = 10;
};

/// Coordinate descent over multiplicative adjustments of the substitution
/// pairs used by some item's optimal alignment under the input matrix.
/// Multipliers stay in [0.25, 4], adjusted costs are clamped to [0, 1], and a
/// change is only kept when it strictly improves training accuracy, so the
/// result never scores below the input matrix with its best threshold.
/// Throws ValidationError when the data is empty or single-label.
CalibrationResult calibrate(const WeightMatrix& weights, const CalibrationSet& data, const TranscribeFn& transcribe,
                            const CalibrationOptions& options = {});

// Fills candidate.distance = pwld(seed, candidate.transcription).
void score_candidates(const Transcription& seed, std::span<VariantCandidate> candidates, const WeightMatrix& weights);

}  // namespace naijavar
