#include "naijavar/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const auto x = text::decode_utf8(a);
  const auto y = text::decode_utf8(b);
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

namespace {

std::vector<std::size_t> indices(std::span<const std::string> seq, const WeightMatrix& weights) {
  std::vector<std::size_t> out;
  out.reserve(seq.size());
  for (const auto& s : seq) {
    const auto idx = weights.index_of(s);
    if (!idx) throw Error("phoneme '" + s + "' is not in the weight matrix");
    out.push_back(*idx);
  }
  return out;
}

struct Table {
  std::size_t cols;
  std::vector<double> cells;
  double& operator()(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
};

Table fill(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y, const WeightMatrix& weights) {
  const double indel = weights.indel_cost();
  Table d{y.size() + 1, std::vector<double>((x.size() + 1) * (y.size() + 1))};
  for (std::size_t j = 0; j <= y.size(); ++j) d(0, j) = indel * static_cast<double>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    d(i, 0) = indel * static_cast<double>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      d(i, j) = std::min({d(i - 1, j - 1) + weights.cost(x[i - 1], y[j - 1]), d(i - 1, j) + indel, d(i, j - 1) + indel});
    }
  }
  return d;
}

}  // namespace

double pwld(std::span<const std::string> a, std::span<const std::string> b, const WeightMatrix& weights) {
  const auto x = indices(a, weights);
  const auto y = indices(b, weights);
  auto d = fill(x, y, weights);
  return d(x.size(), y.size());
}

PwldPath pwld_path(std::span<const std::string> a, std::span<const std::string> b, const WeightMatrix& weights) {
  const auto x = indices(a, weights);
  const auto y = indices(b, weights);
  auto d = fill(x, y, weights);
  PwldPath out;
  out.distance = d(x.size(), y.size());
  const double indel = weights.indel_cost();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    const double here = d(i, j);
    const double sub = weights.cost(x[i - 1], y[j - 1]);
    if (here == d(i - 1, j - 1) + sub) {
      if (x[i - 1] != y[j - 1]) out.substitutions.emplace_back(std::min(x[i - 1], y[j - 1]), std::max(x[i - 1], y[j - 1]));
      --i, --j;
    } else if (here == d(i - 1, j) + indel) {
      --i;
    } else {
      --j;
    }
  }
  std::ranges::reverse(out.substitutions);
  return out;
}

CalibrationSet parse_calibration(std::string_view contents, const std::filesystem::path& source) {
  CalibrationSet out;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(source, line.number, msg));
    };
    const auto fields = text::split(line.content, '\t');
    if (fields.size() != 3) fail("expected seed<TAB>variant<TAB>good|bad");
    CalibrationItem item{std::string(text::trim(fields[0])), std::string(text::trim(fields[1])), false};
    const auto label = text::trim(fields[2]);
    if (label == "good") {
      item.good = true;
    } else if (label != "bad") {
      fail("label must be good or bad");
    }
    if (item.seed.empty() || item.variant.empty()) fail("empty seed or variant");
    if (text::to_lower(item.seed) == text::to_lower(item.variant)) fail("variant equals seed");
    out.push_back(std::move(item));
  }
  return out;
}

CalibrationSet load_calibration(const std::filesystem::path& path) {
  return parse_calibration(text::read_file(path), path);
}

ThresholdFit best_threshold(std::span<const double> distances, const std::vector<bool>& good) {
  if (distances.empty() || distances.size() != good.size()) {
    throw ValidationError("threshold fit needs one label per distance");
  }
  std::vector<double> sorted(distances.begin(), distances.end());
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> candidates;
  candidates.push_back(sorted.front() - 1.0);
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) candidates.push_back((sorted[k] + sorted[k + 1]) / 2.0);
  candidates.push_back(sorted.back() + 1.0);

  ThresholdFit best{candidates.front(), -1.0};
  for (double tau : candidates) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < distances.size(); ++i) {
      if ((distances[i] <= tau) == good[i]) ++correct;
    }
    const double acc = static_cast<double>(correct) / static_cast<double>(distances.size());
    if (acc > best.accuracy) best = {tau, acc};
  }
  return best;
}

CalibrationResult calibrate(const WeightMatrix& weights, const CalibrationSet& data, const TranscribeFn& transcribe,
                            const CalibrationOptions& options) {
  if (data.empty()) throw ValidationError("calibration data is empty");
  const bool any_good = std::ranges::any_of(data, &CalibrationItem::good);
  const bool any_bad = std::ranges::any_of(data, [](const CalibrationItem& c) { return !c.good; });
  if (!any_good || !any_bad) throw ValidationError("calibration data needs both good and bad labels");

  std::vector<std::vector<std::string>> seeds, variants;
  std::vector<bool> labels;
  for (const auto& item : data) {
    seeds.push_back(transcribe(item.seed).phonemes);
    variants.push_back(transcribe(item.variant).phonemes);
    labels.push_back(item.good);
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const auto& p : pwld_path(seeds[i], variants[i], weights).substitutions) pairs.insert(p);
  }

  const auto evaluate = [&](const WeightMatrix& m) {
    std::vector<double> d;
    d.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) d.push_back(pwld(seeds[i], variants[i], m));
    return best_threshold(d, labels);
  };

  CalibrationResult result{weights, 0.0, 0.0, 0.0, 0.0, {}};
  const auto baseline = evaluate(weights);
  result.baseline_threshold = baseline.threshold;
  result.baseline_accuracy = baseline.accuracy;
  result.threshold = baseline.threshold;
  result.accuracy = baseline.accuracy;

  std::map<std::pair<std::size_t, std::size_t>, double> current;
  for (const auto& p : pairs) current[p] = 1.0;
  const auto adjusted = [&](const WeightMatrix& m, std::pair<std::size_t, std::size_t> p, double mult) {
    const double cost = std::clamp(weights.cost(p.first, p.second) * mult, 0.0, 1.0);
    return m.with_cost(p.first, p.second, cost);
  };

  for (int round = 0; round < options.max_rounds && result.accuracy < 1.0; ++round) {
    bool improved = false;
    for (const auto& p : pairs) {
      for (double mult : options.multiplier_grid) {
        const double m = std::clamp(mult, 0.25, 4.0);
        if (m == current[p]) continue;
        auto candidate = adjusted(result.weights, p, m);
        const auto fit = evaluate(candidate);
        if (fit.accuracy > result.accuracy) {
          result.weights = std::move(candidate);
          result.accuracy = fit.accuracy;
          result.threshold = fit.threshold;
          current[p] = m;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  for (const auto& [p, m] : current) {
    if (m != 1.0) result.multipliers[p] = m;
  }
  return result;
}

void score_candidates(const Transcription& seed, std::span<VariantCandidate> candidates, const WeightMatrix& weights) {
  for (auto& c : candidates) c.distance = pwld(seed.phonemes, c.transcription, weights);
}

}  // namespace naijavar
