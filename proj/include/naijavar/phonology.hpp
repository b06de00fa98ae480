#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace naijavar {

enum class PhonemeKind { consonant, vowel };

struct Phoneme {
  std::string symbol;
  PhonemeKind kind = PhonemeKind::consonant;
  std::map<std::string, std::string> features;
};

// Feature names each kind must define, exactly.
std::span<const std::string_view> consonant_features();
std::span<const std::string_view> vowel_features();

/// Phoneme symbols with their articulatory features, per-feature importance
/// weights, and sparse symmetric substitution overrides.
///
/// Text format, one entry per line, '#' comments:
///
///     symbol<TAB>kind<TAB>feature=value,feature=value,...
///     !weight<TAB>feature<TAB>value
///     !override<TAB>symbolA<TAB>symbolB<TAB>weight
///
/// Overrides may reference symbols defined later in the same file.
class PhonemeInventory {
 public:
  static PhonemeInventory load(const std::filesystem::path& path);
  static PhonemeInventory parse(std::string_view contents, const std::filesystem::path& source = "<inventory>");

  // Applies `!override` lines from a separate file on top of this inventory.
  // Later overrides replace earlier ones.
  void load_overrides(const std::filesystem::path& path);
  void parse_overrides(std::string_view contents, const std::filesystem::path& source = "<overrides>");

  void set_override(std::string_view a, std::string_view b, double weight);

  std::span<const Phoneme> phonemes() const { return phonemes_; }
  std::size_t size() const { return phonemes_.size(); }
  bool contains(std::string_view symbol) const;
  const Phoneme* find(std::string_view symbol) const;
  // Throws ValidationError for an unknown symbol.
  const Phoneme& at(std::string_view symbol) const;

  double feature_weight(std::string_view feature) const;
  std::optional<double> override_for(std::string_view a, std::string_view b) const;
  const std::map<std::pair<std::string, std::string>, double>& overrides() const { return overrides_; }

 private:
  struct PendingOverride {
    std::filesystem::path source;
    std::size_t line;
    std::string a, b;
    double weight;
  };
  void apply_pending(const std::vector<PendingOverride>& pending);
  void validate_weights() const;

  std::vector<Phoneme> phonemes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, double, std::less<>> feature_weights_;
  // Keyed by (min, max) symbol so lookups are symmetric.
  std::map<std::pair<std::string, std::string>, double> overrides_;
};

// Override if present; otherwise weighted fraction of differing features for
// same-kind pairs and 1.0 across kinds.
double feature_distance(const Phoneme& a, const Phoneme& b, const PhonemeInventory& inventory);
double feature_distance(std::string_view a, std::string_view b, const PhonemeInventory& inventory);

inline constexpr double kDefaultIndelCost = 0.6;

/// Dense symmetric substitution costs over an inventory plus one
/// insertion/deletion cost. Immutable once built except through `with_cost`.
class WeightMatrix {
 public:
  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  std::span<const std::string> symbols() const { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view symbol) const;

  double cost(std::size_t a, std::size_t b) const { return cells_[a * symbols_.size() + b]; }
  // Throws Error when either symbol is missing.
  double cost(std::string_view a, std::string_view b) const;
  double indel_cost() const { return indel_cost_; }

  // Copy with the (a,b) and (b,a) cells replaced.
  WeightMatrix with_cost(std::size_t a, std::size_t b, double cost) const;

  bool operator==(const WeightMatrix&) const = default;

 private:
  friend WeightMatrix build_weight_matrix(const PhonemeInventory&, double);
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> cells_;
  double indel_cost_ = kDefaultIndelCost;
};

// Throws ValidationError unless indel_cost is in (0, 1].
WeightMatrix build_weight_matrix(const PhonemeInventory& inventory, double indel_cost = kDefaultIndelCost);

}  // namespace naijavar
