#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naijavar/pipeline.hpp"
#include "naijavar/sampler.hpp"

namespace naijavar {

enum class TokenKind { word, punct };

// Byte span [begin, end) into its sentence.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::word;

  bool operator==(const Token&) const = default;
};

// Words are maximal runs of letters and apostrophes holding at least one
// letter. Every other maximal run of non-space characters is one punct token.
// Throws ValidationError on invalid UTF-8.
std::vector<Token> tokenize(std::string_view sentence);

// Concatenates token text with the original inter-token bytes.
std::string detokenize(std::string_view sentence, std::span<const Token> tokens);

struct Corpus {
  std::vector<std::string> sentences;  // raw lines without '\n'
  std::vector<std::vector<Token>> tokens;

  std::size_t size() const { return sentences.size(); }
  std::string_view text(std::size_t sentence, const Token& t) const {
    return std::string_view(sentences[sentence]).substr(t.begin, t.end - t.begin);
  }
};

// One sentence per '\n'-terminated line; a missing final newline is allowed.
// Invalid UTF-8 is reported with its byte offset in the whole input.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view contents, const std::filesystem::path& source = "<corpus>");

struct Substitution {
  std::size_t token_index = 0;
  Token source_span;
  Token augmented_span;
  std::string original;
  std::string variant;
  std::vector<std::string> rules;  // describe(RuleInstance)
  double distance = 0.0;
  double probability = 0.0;
};

struct AugmentedSentence {
  std::size_t source_index = 0;
  std::uint64_t seed = 0;  // per-sentence generator seed
  std::string text;
  std::vector<Substitution> substitutions;
};

struct AugmentedCorpus {
  std::uint64_t seed = 0;
  std::vector<AugmentedSentence> sentences;  // source order

  std::size_t k() const { return sentences.size(); }
};

/// Replaces every word that has at least one surviving candidate with a
/// sampled variant; other tokens are copied. A capitalized seed gives a
/// capitalized variant. Component errors are rethrown with the token index.
AugmentedSentence augment_sentence(std::string_view sentence, std::span<const Token> tokens, const Pipeline& pipeline,
                                   Rng& rng);

// Applies substitution records to the source sentence.
std::string replay(std::string_view sentence, std::span<const Substitution> substitutions);

/// Selects k sentences without replacement with Rng(seed) (the selection for
/// a smaller k is a subset of the one for a larger k) and augments each with
/// Rng(derive_seed(seed, source_index)). Output does not depend on `threads`.
/// Throws ValidationError unless 1 <= k <= m.
AugmentedCorpus augment_corpus(const Corpus& corpus, std::size_t k, const Pipeline& pipeline, std::uint64_t seed,
                               unsigned threads = 1);

// Source indices of the first k draws of a partial Fisher-Yates shuffle, ascending.
std::vector<std::size_t> select_sentences(std::size_t m, std::size_t k, std::uint64_t seed);

// D' lines, or D followed by D' when `with_originals`.
std::vector<std::string> output_lines(const Corpus& corpus, const AugmentedCorpus& augmented, bool with_originals);

// Target side for a parallel corpus: the target line of each augmented
// sentence's source, after all target lines when `with_originals`. Throws
// ValidationError when the target does not have one line per source sentence.
std::vector<std::string> parallel_target_lines(std::span<const std::string> target, const Corpus& corpus,
                                               const AugmentedCorpus& augmented, bool with_originals);

// Writes '\n'-terminated lines. Throws Error on I/O failure.
void write_lines(const std::filesystem::path& path, std::span<const std::string> lines);
void write_lines(std::ostream& out, std::span<const std::string> lines);

// D followed by D'; m + k lines.
void emit_union(const Corpus& corpus, const AugmentedCorpus& augmented, const std::filesystem::path& path);

// One JSON object per augmented sentence.
std::string provenance_json(const AugmentedSentence& sentence);

struct VariantStats {
  std::map<std::string, std::size_t> type_counts;  // case-folded word types of D'
  std::size_t new_variant_count = 0;               // types of D' absent from D
};

std::map<std::string, std::size_t> word_type_counts(const Corpus& corpus);
VariantStats count_new_variants(const Corpus& original, const Corpus& augmented);
VariantStats count_new_variants(const Corpus& original, const AugmentedCorpus& augmented);

// Token count of each surface of each group (case-folded), groups in order.
std::vector<std::vector<std::pair<std::string, std::size_t>>> variant_frequency(
    const Corpus& corpus, const std::vector<std::vector<std::string>>& groups);

}  // namespace naijavar
