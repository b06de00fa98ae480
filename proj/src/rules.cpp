#include "naijavar/rules.hpp"

#include <algorithm>
#include <set>

#include "naijavar/error.hpp"
#include "naijavar/phonology.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

std::string_view to_string(RuleType t) {
  switch (t) {
    case RuleType::alternation:
      return "alternation";
    case RuleType::conversion:
      return "conversion";
    case RuleType::transcription:
      return "transcription";
    case RuleType::deletion:
      return "deletion";
  }
  return "?";
}

std::string_view to_string(RulePosition p) {
  switch (p) {
    case RulePosition::initial:
      return "initial";
    case RulePosition::medial:
      return "medial";
    case RulePosition::final:
      return "final";
    case RulePosition::all:
      return "all";
  }
  return "?";
}

std::string describe(const VariationRule& rule) {
  return std::string(to_string(rule.type)) + ":" + rule.source + ">" + (rule.target.empty() ? "-" : rule.target) +
         "@" + std::string(to_string(rule.position));
}

std::string describe(const RuleInstance& instance) {
  const auto& r = instance.rule;
  return std::string(to_string(r.type)) + ":" + r.source + ">" + (r.target.empty() ? "-" : r.target) + "@" +
         std::to_string(instance.unit_index);
}

std::vector<VariationRule> load_rules(const std::filesystem::path& path, const PhonemeInventory* inventory) {
  return parse_rules(text::read_file(path), inventory, path);
}

std::vector<VariationRule> parse_rules(std::string_view contents, const PhonemeInventory* inventory,
                                       const std::filesystem::path& source) {
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw ValidationError(source.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  std::vector<VariationRule> rules;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(source, line.number, msg));
    };
    const auto fields = text::split(line.content, '\t');
    if (fields.size() < 4 || fields.size() > 5) {
      fail("expected rule_type<TAB>source<TAB>target<TAB>position[<TAB>phoneme_condition]");
    }
    VariationRule rule;
    const std::string type(text::trim(fields[0]));
    if (type == "alternation") {
      rule.type = RuleType::alternation;
    } else if (type == "conversion") {
      rule.type = RuleType::conversion;
    } else if (type == "transcription") {
      rule.type = RuleType::transcription;
    } else if (type == "deletion") {
      rule.type = RuleType::deletion;
    } else {
      fail("unknown rule type '" + type + "'");
    }
    rule.source = text::to_lower(text::trim(fields[1]));
    if (rule.source.empty()) fail("empty rule source");
    const auto target = text::trim(fields[2]);
    rule.target = target == "-" ? std::string() : text::to_lower(target);
    if (rule.type == RuleType::deletion && !rule.target.empty()) fail("deletion rule with non-empty target");
    if (rule.type != RuleType::deletion && rule.target.empty()) fail("only deletion rules may have an empty target");
    const std::string position(text::trim(fields[3]));
    if (position == "initial") {
      rule.position = RulePosition::initial;
    } else if (position == "medial") {
      rule.position = RulePosition::medial;
    } else if (position == "final") {
      rule.position = RulePosition::final;
    } else if (position == "all") {
      rule.position = RulePosition::all;
    } else {
      fail("unknown position token '" + position + "'");
    }
    if (fields.size() == 5 && !text::trim(fields[4]).empty()) {
      for (const auto& alt : text::split(text::trim(fields[4]), '|')) {
        const std::string unit(text::trim(alt));
        if (unit.empty()) fail("empty phoneme condition alternative");
        if (inventory && !inventory->contains(unit)) fail("phoneme condition '" + unit + "' is not in the inventory");
        rule.phoneme_condition.push_back(unit);
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

bool position_matches(RulePosition rule, UnitPosition unit) {
  switch (rule) {
    case RulePosition::all:
      return true;
    case RulePosition::initial:
      return unit == UnitPosition::initial;
    case RulePosition::medial:
      return unit == UnitPosition::medial;
    case RulePosition::final:
      return unit == UnitPosition::final;
  }
  return false;
}

std::vector<RuleInstance> applicable_instances(const AlignedWord& word, std::span<const VariationRule> rules) {
  std::vector<RuleInstance> out;
  for (std::size_t u = 0; u < word.grapheme_units.size(); ++u) {
    std::vector<std::string> linked;
    bool linked_known = false;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto& rule = rules[r];
      if (rule.source != word.grapheme_units[u]) continue;
      if (!position_matches(rule.position, word.positions[u])) continue;
      if (!rule.phoneme_condition.empty()) {
        if (!linked_known) {
          linked = word.linked_phonemes(u);
          linked_known = true;
        }
        const bool ok = std::ranges::any_of(linked, [&](const std::string& p) {
          return std::ranges::find(rule.phoneme_condition, p) != rule.phoneme_condition.end();
        });
        if (!ok) continue;
      }
      out.push_back({r, rule, u});
    }
  }
  return out;
}

std::string apply_instances(const AlignedWord& word, std::span<const RuleInstance> instances) {
  std::vector<std::string> units = word.grapheme_units;
  for (const auto& inst : instances) units.at(inst.unit_index) = inst.rule.target;
  return text::join(units, "");
}

std::vector<VariantCandidate> synthesize_variants(const AlignedWord& word, std::span<const RuleInstance> instances,
                                                  std::size_t max_subsets, const TranscribeFn& transcribe) {
  if (max_subsets < 1) throw ValidationError("max_subsets must be >= 1");
  std::vector<VariantCandidate> out;
  const std::size_t n = instances.size();
  if (n == 0) return out;

  const std::string seed = text::join(word.grapheme_units, "");
  std::set<std::string> seen{seed};
  std::size_t visited = 0;
  std::vector<std::size_t> combo;

  for (std::size_t size = 1; size <= n && visited < max_subsets; ++size) {
    combo.resize(size);
    for (std::size_t k = 0; k < size; ++k) combo[k] = k;
    while (true) {
      bool distinct = true;
      for (std::size_t a = 0; a < size && distinct; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
          if (instances[combo[a]].unit_index == instances[combo[b]].unit_index) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) {
        ++visited;
        std::vector<RuleInstance> applied;
        applied.reserve(size);
        for (auto idx : combo) applied.push_back(instances[idx]);
        std::ranges::stable_sort(applied, {}, &RuleInstance::unit_index);
        std::string surface = apply_instances(word, applied);
        if (!surface.empty() && seen.insert(surface).second) {
          try {
            auto t = transcribe(surface);
            out.push_back({std::move(surface), std::move(applied), std::move(t.phonemes), std::nullopt, std::nullopt});
          } catch (const ValidationError&) {
            // Not transcribable: cannot be scored, so it is not a candidate.
          }
        }
        if (visited >= max_subsets) break;
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && combo[k - 1] == n - size + (k - 1)) --k;
      if (k == 0) break;
      ++combo[k - 1];
      for (std::size_t m = k; m < size; ++m) combo[m] = combo[m - 1] + 1;
    }
  }
  return out;
}

Blocklist parse_blocklist(std::string_view contents) {
  Blocklist out;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto w = text::trim(line.content);
    if (!w.empty()) out.insert(text::to_lower(w));
  }
  return out;
}

Blocklist load_blocklist(const std::filesystem::path& path) { return parse_blocklist(text::read_file(path)); }

std::vector<VariantCandidate> filter_real_words(std::vector<VariantCandidate> candidates, const Blocklist& blocklist) {
  std::erase_if(candidates, [&](const VariantCandidate& c) { return blocklist.contains(text::to_lower(c.surface)); });
  return candidates;
}

}  // namespace naijavar
