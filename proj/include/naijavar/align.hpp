#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace naijavar {

/// Multi-symbol units merged before alignment. Grapheme units are letter
/// strings ("th", "ng"); phoneme units are token sequences ("k s"). A
/// grapheme unit written with a `^` prefix or `$` suffix only merges at the
/// start or end of the word.
///
/// File format: a `[graphemes]` section and a `[phonemes]` section, one unit
/// per line; phoneme units are space-separated tokens.
struct MergeTable {
  std::vector<std::string> grapheme_merges;
  std::vector<std::vector<std::string>> phoneme_merges;

  static MergeTable load(const std::filesystem::path& path);
  static MergeTable parse(std::string_view contents, const std::filesystem::path& source = "<merge table>");
  // Throws ValidationError when a unit is shorter than 2 or a unit is a
  // prefix of a longer unit listed after it.
  void validate() const;
};

struct UnitSegmentation {
  std::vector<std::string> graphemes;
  std::vector<std::string> phonemes;  // merged tokens are concatenated
};

// Greedy longest-match segmentation of both sides. `word` must be lowercase.
UnitSegmentation merge_units(std::string_view word, std::span<const std::string> phonemes, const MergeTable& table);

/// Grapheme-unit -> phoneme-unit translation probabilities, each grapheme's
/// distribution normalized to 1.
class AlignmentModel {
 public:
  // Raw trained probability, 0 for unseen pairs.
  double probability(std::string_view grapheme, std::string_view phoneme) const;
  // Add-k smoothed probability over the model's phoneme vocabulary plus one
  // slot for unseen units. Unseen graphemes get a uniform distribution when
  // k > 0 and zero otherwise.
  double smoothed(std::string_view grapheme, std::string_view phoneme, double k) const;

  bool knows_grapheme(std::string_view grapheme) const;
  std::size_t phoneme_vocabulary_size() const { return phoneme_vocab_size_; }
  int iterations_trained() const { return iterations_; }
  // Training-data log-likelihood before each iteration and after the last.
  std::span<const double> log_likelihoods() const { return log_likelihoods_; }
  const std::map<std::string, std::map<std::string, double>>& table() const { return probs_; }

  // `grapheme<TAB>phoneme<TAB>probability`, sorted, 17 significant digits so
  // values round-trip exactly. A leading comment records the iteration count.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static AlignmentModel load(std::istream& in, const std::filesystem::path& source = "<model>");
  static AlignmentModel load(const std::filesystem::path& path);

  bool operator==(const AlignmentModel& other) const { return probs_ == other.probs_; }

 private:
  friend AlignmentModel train_aligner(std::span<const UnitSegmentation>, int);
  void rebuild_vocabulary();

  std::map<std::string, std::map<std::string, double>> probs_;
  std::size_t phoneme_vocab_size_ = 0;
  int iterations_ = 0;
  std::vector<double> log_likelihoods_;
};

// Model-1 style EM over grapheme/phoneme unit pairs, uniform initialization,
// no randomness. Throws ValidationError on an empty training set or a pair
// with an empty side.
AlignmentModel train_aligner(std::span<const UnitSegmentation> pairs, int iterations = 10);

enum class UnitPosition { initial, medial, final };

std::string_view to_string(UnitPosition p);

struct Link {
  std::size_t grapheme;
  std::size_t phoneme;
  bool operator==(const Link&) const = default;
};

struct AlignedWord {
  std::string word;
  std::vector<std::string> grapheme_units;
  std::vector<std::string> phoneme_units;
  std::vector<Link> links;  // monotone non-decreasing in both coordinates
  std::vector<UnitPosition> positions;

  // Phoneme units linked to a grapheme unit, in order. Empty = silent.
  std::vector<std::string> linked_phonemes(std::size_t grapheme) const;
};

struct AlignOptions {
  double skip_cost = 3.0;
  double smoothing_k = 0.01;
};

// Position tags for n units; a single unit is tagged initial.
std::vector<UnitPosition> unit_positions(std::size_t n);

/// Monotone Viterbi decode. Moves:
///   link            grapheme i <-> phoneme j, cost -log p(j|i)
///   grapheme skip   grapheme i silent, cost skip_cost
///   phoneme skip    phoneme j attached to the previous grapheme (the first
///                   grapheme at word start), cost skip_cost - log p(j|g)
/// Every phoneme unit ends up in exactly one link. Equal costs prefer link,
/// then grapheme skip. Throws Error when no finite-cost path exists.
AlignedWord align(const UnitSegmentation& units, const AlignmentModel& model, const AlignOptions& options = {});

}  // namespace naijavar
