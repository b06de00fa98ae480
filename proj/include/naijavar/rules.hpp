#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "naijavar/align.hpp"
#include "naijavar/g2p.hpp"

namespace naijavar {

class PhonemeInventory;

enum class RuleType { alternation, conversion, transcription, deletion };
enum class RulePosition { initial, medial, final, all };

std::string_view to_string(RuleType t);
std::string_view to_string(RulePosition p);

struct VariationRule {
  RuleType type = RuleType::alternation;
  std::string source;
  std::string target;  // empty for deletion
  RulePosition position = RulePosition::all;
  // Phoneme units the source must be linked to; empty = unconditioned.
  std::vector<std::string> phoneme_condition;

  bool operator==(const VariationRule&) const = default;
};

// "type:source>target@position", target "-" for deletions.
std::string describe(const VariationRule& rule);

/// Rules file: `rule_type<TAB>source<TAB>target<TAB>position[<TAB>condition]`.
/// Deletion targets are written "-" (or left empty). A condition may list
/// alternatives separated by '|'. When an inventory is given, condition units
/// are checked against it.
std::vector<VariationRule> load_rules(const std::filesystem::path& path, const PhonemeInventory* inventory = nullptr);
std::vector<VariationRule> parse_rules(std::string_view contents, const PhonemeInventory* inventory = nullptr,
                                       const std::filesystem::path& source = "<rules>");

struct RuleInstance {
  std::size_t rule_index = 0;
  VariationRule rule;
  std::size_t unit_index = 0;

  bool operator==(const RuleInstance&) const = default;
};

// "type:source>target@unit_index"
std::string describe(const RuleInstance& instance);

struct VariantCandidate {
  std::string surface;
  std::vector<RuleInstance> applied;  // ordered by unit index
  std::vector<std::string> transcription;
  std::optional<double> distance;
  std::optional<double> probability;
};

bool position_matches(RulePosition rule, UnitPosition unit);

// Every (rule, unit) pair whose source, position and phoneme condition match,
// ordered by unit index then rule order.
std::vector<RuleInstance> applicable_instances(const AlignedWord& word, std::span<const VariationRule> rules);

using TranscribeFn = std::function<Transcription(std::string_view)>;

inline constexpr std::size_t kDefaultMaxSubsets = 64;

/// Applies every non-empty subset of `instances` whose unit indices are
/// pairwise distinct, all rewrites at once on the original units. Subsets are
/// visited by increasing size, then lexicographically by instance position,
/// and at most `max_subsets` are visited. Surfaces are deduplicated (first
/// subset wins) and seed-equal ones dropped. Each candidate is transcribed
/// with `transcribe`; candidates it rejects are dropped.
std::vector<VariantCandidate> synthesize_variants(const AlignedWord& word, std::span<const RuleInstance> instances,
                                                  std::size_t max_subsets, const TranscribeFn& transcribe);

// Rewrites the seed's units with the given instances and re-concatenates.
std::string apply_instances(const AlignedWord& word, std::span<const RuleInstance> instances);

using Blocklist = std::unordered_set<std::string>;

// One word per line, lowercased on load.
Blocklist load_blocklist(const std::filesystem::path& path);
Blocklist parse_blocklist(std::string_view contents);

// Drops candidates whose (case-folded) surface is in the blocklist.
std::vector<VariantCandidate> filter_real_words(std::vector<VariantCandidate> candidates, const Blocklist& blocklist);

}  // namespace naijavar
