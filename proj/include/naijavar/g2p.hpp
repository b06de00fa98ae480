#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "naijavar/phonology.hpp"

namespace naijavar {

enum class Provenance { lexicon, fallback };

std::string_view to_string(Provenance p);

struct Transcription {
  std::string word;
  std::vector<std::string> phonemes;
  Provenance provenance = Provenance::lexicon;
};

/// Case-folded word -> phoneme sequence, every token checked against the
/// inventory the lexicon was loaded with.
///
/// Format: `word<TAB>phoneme phoneme ...`, '#' comments.
class PronunciationLexicon {
 public:
  static PronunciationLexicon load(const std::filesystem::path& path, const PhonemeInventory& inventory);
  static PronunciationLexicon parse(std::string_view contents, const PhonemeInventory& inventory,
                                    const std::filesystem::path& source = "<lexicon>");

  const std::vector<std::string>* find(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  // Lowercased words in file order.
  std::span<const std::string> words() const { return words_; }
  const std::filesystem::path& source() const { return source_; }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
  std::vector<std::string> words_;
  std::filesystem::path source_;
};

struct FallbackRule {
  std::string graphemes;  // lowercase letters, anchors stripped
  bool at_start = false;
  bool at_end = false;
  std::vector<std::string> phonemes;  // empty = silent
};

/// Ordered letter-to-sound rules applied left to right by longest match.
///
/// Format: `grapheme-unit<TAB>phoneme phoneme ...`; an empty right-hand side
/// makes the unit silent. `^` prefix / `$` suffix anchor a unit to the word
/// start / end. Among rules matching at a position, the one consuming the
/// most characters wins; ties go to the earlier line.
class FallbackTable {
 public:
  static FallbackTable load(const std::filesystem::path& path, const PhonemeInventory& inventory);
  static FallbackTable parse(std::string_view contents, const PhonemeInventory& inventory,
                             const std::filesystem::path& source = "<fallback>");

  // `word` must already be lowercased. Throws ValidationError naming the
  // first character no rule covers.
  std::vector<std::string> apply(std::string_view word) const;

  std::span<const FallbackRule> rules() const { return rules_; }

 private:
  std::vector<FallbackRule> rules_;
};

// Lexicon lookup with fallback. Throws ValidationError for an empty word,
// a word without letters, or one the fallback cannot cover.
Transcription transcribe(std::string_view word, const PronunciationLexicon& lexicon, const FallbackTable& fallback);

// Elementwise transcribe. On any failure throws ValidationError listing every
// failing index.
std::vector<Transcription> transcribe_batch(std::span<const std::string> words, const PronunciationLexicon& lexicon,
                                            const FallbackTable& fallback);

}  // namespace naijavar
