#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "naijavar/align.hpp"
#include "naijavar/config.hpp"
#include "naijavar/g2p.hpp"
#include "naijavar/metric.hpp"
#include "naijavar/phonology.hpp"
#include "naijavar/rules.hpp"
#include "naijavar/sampler.hpp"

namespace naijavar {

struct PipelineOptions {
  double indel_cost = kDefaultIndelCost;
  double epsilon = kDefaultEpsilon;
  std::size_t max_subsets = kDefaultMaxSubsets;
  AlignOptions align;
  std::optional<double> max_pwld;
};

// Aligner training pairs from every lexicon entry.
std::vector<UnitSegmentation> lexicon_training_pairs(const PronunciationLexicon& lexicon, const MergeTable& merges);

/// Loaded, immutable components of the variant generator: transcribe ->
/// merge/align -> applicable rules -> synthesize -> blocklist filter -> PWLD
/// score. Safe to share across threads.
class Pipeline {
 public:
  Pipeline(PhonemeInventory inventory, PronunciationLexicon lexicon, FallbackTable fallback, MergeTable merges,
           AlignmentModel model, std::vector<VariationRule> rules, Blocklist blocklist, PipelineOptions options);

  static Pipeline from_config(const Config& config);

  Transcription transcribe(std::string_view word) const;
  TranscribeFn transcriber() const;
  AlignedWord align_word(const Transcription& seed) const;

  // Scored candidates for one word (case-folded), in synthesis order.
  // `filter` applies the blocklist.
  std::vector<VariantCandidate> candidates(std::string_view word, bool filter = true) const;

  // Empty when no candidate survives.
  std::optional<VariantDistribution> distribution(std::string_view word) const;

  const PhonemeInventory& inventory() const { return inventory_; }
  const WeightMatrix& weights() const { return weights_; }
  const PronunciationLexicon& lexicon() const { return lexicon_; }
  const FallbackTable& fallback() const { return fallback_; }
  const MergeTable& merges() const { return merges_; }
  const AlignmentModel& model() const { return model_; }
  const std::vector<VariationRule>& rules() const { return rules_; }
  const Blocklist& blocklist() const { return blocklist_; }
  const PipelineOptions& options() const { return options_; }

 private:
  PhonemeInventory inventory_;
  WeightMatrix weights_;
  PronunciationLexicon lexicon_;
  FallbackTable fallback_;
  MergeTable merges_;
  AlignmentModel model_;
  std::vector<VariationRule> rules_;
  Blocklist blocklist_;
  PipelineOptions options_;
};

}  // namespace naijavar
