#include "naijavar/pipeline.hpp"

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

std::vector<UnitSegmentation> lexicon_training_pairs(const PronunciationLexicon& lexicon, const MergeTable& merges) {
  std::vector<UnitSegmentation> pairs;
  pairs.reserve(lexicon.size());
  for (const auto& word : lexicon.words()) pairs.push_back(merge_units(word, *lexicon.find(word), merges));
  return pairs;
}

Pipeline::Pipeline(PhonemeInventory inventory, PronunciationLexicon lexicon, FallbackTable fallback, MergeTable merges,
                   AlignmentModel model, std::vector<VariationRule> rules, Blocklist blocklist, PipelineOptions options)
    : inventory_(std::move(inventory)),
      weights_(build_weight_matrix(inventory_, options.indel_cost)),
      lexicon_(std::move(lexicon)),
      fallback_(std::move(fallback)),
      merges_(std::move(merges)),
      model_(std::move(model)),
      rules_(std::move(rules)),
      blocklist_(std::move(blocklist)),
      options_(options) {}

Pipeline Pipeline::from_config(const Config& config) {
  config.validate();
  auto inventory = PhonemeInventory::load(config.inventory);
  if (config.weight_overrides) inventory.load_overrides(*config.weight_overrides);
  auto lexicon = PronunciationLexicon::load(config.lexicon, inventory);
  auto fallback = FallbackTable::load(config.fallback, inventory);
  auto merges = MergeTable::load(config.merge_table);
  auto model = config.model ? AlignmentModel::load(*config.model)
                            : train_aligner(lexicon_training_pairs(lexicon, merges), config.aligner_iterations);
  auto rules = load_rules(config.rules, &inventory);
  auto blocklist = load_blocklist(config.blocklist);
  PipelineOptions options;
  options.indel_cost = config.indel_cost;
  options.epsilon = config.epsilon;
  options.max_subsets = config.max_subsets;
  options.align = {config.skip_cost, config.smoothing_k};
  options.max_pwld = config.max_pwld;
  return Pipeline(std::move(inventory), std::move(lexicon), std::move(fallback), std::move(merges), std::move(model),
                  std::move(rules), std::move(blocklist), options);
}

Transcription Pipeline::transcribe(std::string_view word) const {
  return naijavar::transcribe(word, lexicon_, fallback_);
}

TranscribeFn Pipeline::transcriber() const {
  return [this](std::string_view w) { return transcribe(w); };
}

AlignedWord Pipeline::align_word(const Transcription& seed) const {
  const auto units = merge_units(text::to_lower(seed.word), seed.phonemes, merges_);
  return align(units, model_, options_.align);
}

std::vector<VariantCandidate> Pipeline::candidates(std::string_view word, bool filter) const {
  const auto seed = transcribe(text::to_lower(word));
  const auto aligned = align_word(seed);
  const auto instances = applicable_instances(aligned, rules_);
  auto out = synthesize_variants(aligned, instances, options_.max_subsets, transcriber());
  if (filter) out = filter_real_words(std::move(out), blocklist_);
  score_candidates(seed, out, weights_);
  if (options_.max_pwld) {
    std::erase_if(out, [&](const VariantCandidate& c) { return *c.distance > *options_.max_pwld; });
  }
  return out;
}

std::optional<VariantDistribution> Pipeline::distribution(std::string_view word) const {
  auto c = candidates(word);
  if (c.empty()) return std::nullopt;
  return candidate_probabilities(std::move(c), options_.epsilon);
}

}  // namespace naijavar
