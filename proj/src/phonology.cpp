#include "naijavar/phonology.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

namespace {

constexpr std::array<std::string_view, 3> kConsonantFeatures{"voicing", "place", "manner"};
constexpr std::array<std::string_view, 4> kVowelFeatures{"height", "backness", "roundness", "length"};

std::span<const std::string_view> features_of(PhonemeKind kind) {
  if (kind == PhonemeKind::consonant) return kConsonantFeatures;
  return kVowelFeatures;
}

bool is_known_feature(std::string_view name) {
  return std::ranges::find(kConsonantFeatures, name) != kConsonantFeatures.end() ||
         std::ranges::find(kVowelFeatures, name) != kVowelFeatures.end();
}

std::optional<double> parse_double(std::string_view s) {
  s = text::trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::pair<std::string, std::string> key_of(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

}  // namespace

std::span<const std::string_view> consonant_features() { return kConsonantFeatures; }
std::span<const std::string_view> vowel_features() { return kVowelFeatures; }

PhonemeInventory PhonemeInventory::load(const std::filesystem::path& path) {
  return parse(text::read_file(path), path);
}

PhonemeInventory PhonemeInventory::parse(std::string_view contents, const std::filesystem::path& source) {
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw ValidationError(source.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  PhonemeInventory inv;
  std::vector<PendingOverride> pending;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(source, line.number, msg));
    };
    const auto fields = text::split(line.content, '\t');
    if (fields[0] == "!override") {
      if (fields.size() != 4) fail("malformed override line, expected !override<TAB>a<TAB>b<TAB>weight");
      const auto w = parse_double(fields[3]);
      if (!w) fail("override weight is not a number: " + fields[3]);
      pending.push_back({source, line.number, fields[1], fields[2], *w});
      continue;
    }
    if (fields[0] == "!weight") {
      if (fields.size() != 3) fail("malformed weight line, expected !weight<TAB>feature<TAB>value");
      if (!is_known_feature(fields[1])) fail("unknown feature name '" + fields[1] + "'");
      const auto w = parse_double(fields[2]);
      if (!w || *w < 0.0) fail("feature weight must be a non-negative number: " + fields[2]);
      inv.feature_weights_[fields[1]] = *w;
      continue;
    }
    if (fields.size() != 3) fail("malformed phoneme line, expected symbol<TAB>kind<TAB>features");
    Phoneme ph;
    ph.symbol = std::string(text::trim(fields[0]));
    if (ph.symbol.empty()) fail("empty phoneme symbol");
    if (fields[1] == "consonant") {
      ph.kind = PhonemeKind::consonant;
    } else if (fields[1] == "vowel") {
      ph.kind = PhonemeKind::vowel;
    } else {
      fail("unknown phoneme kind '" + fields[1] + "' (expected consonant or vowel)");
    }
    for (const auto& kv : text::split(fields[2], ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail("malformed feature '" + kv + "', expected name=value");
      std::string name(text::trim(std::string_view(kv).substr(0, eq)));
      std::string value(text::trim(std::string_view(kv).substr(eq + 1)));
      if (!is_known_feature(name)) fail("unknown feature name '" + name + "'");
      const auto expected = features_of(ph.kind);
      if (std::ranges::find(expected, name) == expected.end()) {
        fail("feature '" + name + "' does not apply to " + fields[1] + " '" + ph.symbol + "'");
      }
      if (value.empty()) fail("feature '" + name + "' has an empty value");
      if (!ph.features.emplace(name, value).second) fail("feature '" + name + "' given twice");
    }
    for (auto name : features_of(ph.kind)) {
      if (!ph.features.contains(std::string(name))) {
        fail(fields[1] + " '" + ph.symbol + "' is missing feature '" + std::string(name) + "'");
      }
    }
    if (inv.index_.contains(ph.symbol)) fail("duplicate symbol '" + ph.symbol + "'");
    inv.index_.emplace(ph.symbol, inv.phonemes_.size());
    inv.phonemes_.push_back(std::move(ph));
  }
  inv.apply_pending(pending);
  inv.validate_weights();
  return inv;
}

void PhonemeInventory::apply_pending(const std::vector<PendingOverride>& pending) {
  for (const auto& p : pending) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(p.source, p.line, msg));
    };
    if (!contains(p.a)) fail("override references unknown symbol '" + p.a + "'");
    if (!contains(p.b)) fail("override references unknown symbol '" + p.b + "'");
    if (p.a == p.b) fail("override of '" + p.a + "' with itself");
    if (p.weight < 0.0 || p.weight > 1.0) fail("override weight must lie in [0, 1]");
    overrides_[key_of(p.a, p.b)] = p.weight;
  }
}

void PhonemeInventory::validate_weights() const {
  for (auto kind : {PhonemeKind::consonant, PhonemeKind::vowel}) {
    double total = 0.0;
    for (auto f : features_of(kind)) total += feature_weight(f);
    if (total <= 0.0) throw ValidationError("feature weights of a phoneme kind sum to zero");
  }
}

void PhonemeInventory::load_overrides(const std::filesystem::path& path) {
  parse_overrides(text::read_file(path), path);
}

void PhonemeInventory::parse_overrides(std::string_view contents, const std::filesystem::path& source) {
  std::vector<PendingOverride> pending;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fields = text::split(line.content, '\t');
    const auto w = fields.size() == 4 ? parse_double(fields[3]) : std::nullopt;
    if (fields[0] != "!override" || !w) {
      throw ValidationError(text::located(source, line.number, "expected !override<TAB>a<TAB>b<TAB>weight"));
    }
    pending.push_back({source, line.number, fields[1], fields[2], *w});
  }
  apply_pending(pending);
}

void PhonemeInventory::set_override(std::string_view a, std::string_view b, double weight) {
  apply_pending({{"<api>", 0, std::string(a), std::string(b), weight}});
}

bool PhonemeInventory::contains(std::string_view symbol) const { return find(symbol) != nullptr; }

const Phoneme* PhonemeInventory::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  return it == index_.end() ? nullptr : &phonemes_[it->second];
}

const Phoneme& PhonemeInventory::at(std::string_view symbol) const {
  if (const auto* p = find(symbol)) return *p;
  throw ValidationError("phoneme '" + std::string(symbol) + "' is not in the inventory");
}

double PhonemeInventory::feature_weight(std::string_view feature) const {
  auto it = feature_weights_.find(feature);
  return it == feature_weights_.end() ? 1.0 : it->second;
}

std::optional<double> PhonemeInventory::override_for(std::string_view a, std::string_view b) const {
  auto it = overrides_.find(key_of(a, b));
  if (it == overrides_.end()) return std::nullopt;
  return it->second;
}

double feature_distance(const Phoneme& a, const Phoneme& b, const PhonemeInventory& inventory) {
  if (a.symbol == b.symbol) return 0.0;
  if (auto w = inventory.override_for(a.symbol, b.symbol)) return *w;
  if (a.kind != b.kind) return 1.0;
  double differing = 0.0;
  double total = 0.0;
  for (auto name : features_of(a.kind)) {
    const double w = inventory.feature_weight(name);
    total += w;
    const std::string key(name);
    if (a.features.at(key) != b.features.at(key)) differing += w;
  }
  return differing / total;
}

double feature_distance(std::string_view a, std::string_view b, const PhonemeInventory& inventory) {
  return feature_distance(inventory.at(a), inventory.at(b), inventory);
}

std::optional<std::size_t> WeightMatrix::index_of(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double WeightMatrix::cost(std::string_view a, std::string_view b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia) throw Error("phoneme '" + std::string(a) + "' is not in the weight matrix");
  if (!ib) throw Error("phoneme '" + std::string(b) + "' is not in the weight matrix");
  return cost(*ia, *ib);
}

WeightMatrix WeightMatrix::with_cost(std::size_t a, std::size_t b, double cost) const {
  WeightMatrix m = *this;
  if (a == b) return m;
  const std::size_t n = symbols_.size();
  m.cells_[a * n + b] = cost;
  m.cells_[b * n + a] = cost;
  return m;
}

WeightMatrix build_weight_matrix(const PhonemeInventory& inventory, double indel_cost) {
  if (!(indel_cost > 0.0 && indel_cost <= 1.0)) {
    throw ValidationError("indel_cost must lie in (0, 1]");
  }
  WeightMatrix m;
  m.indel_cost_ = indel_cost;
  const auto phonemes = inventory.phonemes();
  const std::size_t n = phonemes.size();
  m.symbols_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.symbols_.push_back(phonemes[i].symbol);
    m.index_.emplace(phonemes[i].symbol, i);
  }
  m.cells_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = feature_distance(phonemes[i], phonemes[j], inventory);
      m.cells_[i * n + j] = d;
      m.cells_[j * n + i] = d;
    }
  }
  return m;
}

}  // namespace naijavar
