#include "naijavar/g2p.hpp"

#include <algorithm>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

std::string_view to_string(Provenance p) { return p == Provenance::lexicon ? "lexicon" : "fallback"; }

PronunciationLexicon PronunciationLexicon::load(const std::filesystem::path& path, const PhonemeInventory& inventory) {
  return parse(text::read_file(path), inventory, path);
}

PronunciationLexicon PronunciationLexicon::parse(std::string_view contents, const PhonemeInventory& inventory,
                                                 const std::filesystem::path& source) {
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw ValidationError(source.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  PronunciationLexicon lex;
  lex.source_ = source;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(source, line.number, msg));
    };
    const auto fields = text::split(line.content, '\t');
    if (fields.size() != 2) fail("expected word<TAB>phonemes");
    const std::string word = text::to_lower(text::trim(fields[0]));
    if (word.empty()) fail("empty word");
    auto phonemes = text::split_whitespace(fields[1]);
    if (phonemes.empty()) fail("word '" + word + "' has no phonemes");
    for (const auto& ph : phonemes) {
      if (!inventory.contains(ph)) fail("word '" + word + "': unknown phoneme token '" + ph + "'");
    }
    auto [it, inserted] = lex.entries_.emplace(word, phonemes);
    if (!inserted) {
      if (it->second != phonemes) fail("duplicate word '" + word + "' with conflicting pronunciation");
      continue;
    }
    lex.words_.push_back(word);
  }
  return lex;
}

const std::vector<std::string>* PronunciationLexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

FallbackTable FallbackTable::load(const std::filesystem::path& path, const PhonemeInventory& inventory) {
  return parse(text::read_file(path), inventory, path);
}

FallbackTable FallbackTable::parse(std::string_view contents, const PhonemeInventory& inventory,
                                   const std::filesystem::path& source) {
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw ValidationError(source.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  FallbackTable table;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto fail = [&](std::string_view msg) {
      throw ValidationError(text::located(source, line.number, msg));
    };
    const auto fields = text::split(line.content, '\t');
    if (fields.size() > 2) fail("expected grapheme<TAB>phonemes");
    FallbackRule rule;
    std::string_view g = fields[0];
    if (g.size() > 1 && g.front() == '^') {
      rule.at_start = true;
      g.remove_prefix(1);
    }
    if (g.size() > 1 && g.back() == '$') {
      rule.at_end = true;
      g.remove_suffix(1);
    }
    rule.graphemes = text::to_lower(g);
    if (rule.graphemes.empty()) fail("empty grapheme unit");
    if (fields.size() == 2) rule.phonemes = text::split_whitespace(fields[1]);
    for (const auto& ph : rule.phonemes) {
      if (!inventory.contains(ph)) fail("unknown phoneme token '" + ph + "'");
    }
    table.rules_.push_back(std::move(rule));
  }
  return table;
}

std::vector<std::string> FallbackTable::apply(std::string_view word) const {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const FallbackRule* best = nullptr;
    for (const auto& rule : rules_) {
      const auto len = rule.graphemes.size();
      if (best && len <= best->graphemes.size()) continue;
      if (word.compare(pos, len, rule.graphemes) != 0) continue;
      if (rule.at_start && pos != 0) continue;
      if (rule.at_end && pos + len != word.size()) continue;
      best = &rule;
    }
    if (!best) {
      // Report the whole code point, not a stray byte.
      std::size_t len = 1;
      while (pos + len < word.size() && (static_cast<unsigned char>(word[pos + len]) & 0xC0) == 0x80) ++len;
      throw ValidationError("no letter-to-sound rule covers '" + std::string(word.substr(pos, len)) +
                            "' at offset " + std::to_string(pos) + " of '" + std::string(word) + "'");
    }
    out.insert(out.end(), best->phonemes.begin(), best->phonemes.end());
    pos += best->graphemes.size();
  }
  return out;
}

Transcription transcribe(std::string_view word, const PronunciationLexicon& lexicon, const FallbackTable& fallback) {
  const auto trimmed = text::trim(word);
  if (trimmed.empty()) throw ValidationError("empty word");
  const std::string lower = text::to_lower(trimmed);
  const auto cps = text::decode_utf8(lower);
  if (std::ranges::none_of(cps, text::is_letter)) {
    throw ValidationError("word '" + std::string(trimmed) + "' has no transcribable letters");
  }
  Transcription t;
  t.word = std::string(trimmed);
  if (const auto* entry = lexicon.find(lower)) {
    t.phonemes = *entry;
    t.provenance = Provenance::lexicon;
    return t;
  }
  t.phonemes = fallback.apply(lower);
  t.provenance = Provenance::fallback;
  if (t.phonemes.empty()) {
    throw ValidationError("word '" + std::string(trimmed) + "' has no transcribable letters");
  }
  return t;
}

std::vector<Transcription> transcribe_batch(std::span<const std::string> words, const PronunciationLexicon& lexicon,
                                            const FallbackTable& fallback) {
  std::vector<Transcription> out;
  out.reserve(words.size());
  std::string errors;
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      out.push_back(transcribe(words[i], lexicon, fallback));
    } catch (const Error& e) {
      if (!errors.empty()) errors += "; ";
      errors += "word " + std::to_string(i) + ": " + e.what();
    }
  }
  if (!errors.empty()) throw ValidationError(errors);
  return out;
}

}  // namespace naijavar
