#include "naijavar/augment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <ostream>
#include <thread>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

namespace {

// Byte length of the UTF-8 sequence starting with `lead`; input is valid.
std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead < 0xE0) return 2;
  if (lead < 0xF0) return 3;
  return 4;
}

char32_t code_point_at(std::string_view s, std::size_t pos, std::size_t len) {
  return text::decode_utf8(s.substr(pos, len)).front();
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\v' || cp == U'\f' || cp == 0xA0;
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

void rethrow_annotated(const std::string& prefix) {
  try {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view sentence) {
  if (const auto bad = text::find_invalid_utf8(sentence)) {
    throw ValidationError("invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  std::vector<Token> out;
  const auto push = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    // Adjacent punct segments within one non-space run form one token.
    if (kind == TokenKind::punct && !out.empty() && out.back().kind == TokenKind::punct && out.back().end == begin) {
      out.back().end = end;
    } else {
      out.push_back({begin, end, kind});
    }
  };

  std::size_t pos = 0;
  std::size_t seg_begin = 0;
  bool in_segment = false;
  bool seg_wordish = false;
  bool seg_has_letter = false;
  const auto close = [&](std::size_t end) {
    if (in_segment) push(seg_begin, end, seg_wordish && seg_has_letter ? TokenKind::word : TokenKind::punct);
    in_segment = false;
  };
  while (pos < sentence.size()) {
    const auto len = sequence_length(static_cast<unsigned char>(sentence[pos]));
    const char32_t cp = code_point_at(sentence, pos, len);
    if (is_space(cp)) {
      close(pos);
    } else {
      const bool letter = text::is_letter(cp);
      const bool wordish = letter || is_apostrophe(cp);
      if (in_segment && wordish != seg_wordish) close(pos);
      if (!in_segment) {
        in_segment = true;
        seg_begin = pos;
        seg_wordish = wordish;
        seg_has_letter = false;
      }
      seg_has_letter = seg_has_letter || letter;
    }
    pos += len;
  }
  close(pos);
  return out;
}

std::string detokenize(std::string_view sentence, std::span<const Token> tokens) {
  std::string out;
  std::size_t cursor = 0;
  for (const auto& t : tokens) {
    out.append(sentence.substr(cursor, t.begin - cursor));
    out.append(sentence.substr(t.begin, t.end - t.begin));
    cursor = t.end;
  }
  out.append(sentence.substr(cursor));
  return out;
}

Corpus parse_corpus(std::string_view contents, const std::filesystem::path& source) {
  if (const auto bad = text::find_invalid_utf8(contents)) {
    throw ValidationError(source.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  Corpus corpus;
  std::size_t start = 0;
  while (start < contents.size()) {
    auto nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    corpus.sentences.emplace_back(contents.substr(start, nl - start));
    start = nl + 1;
  }
  corpus.tokens.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) corpus.tokens.push_back(tokenize(s));
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) { return parse_corpus(text::read_file(path), path); }

AugmentedSentence augment_sentence(std::string_view sentence, std::span<const Token> tokens, const Pipeline& pipeline,
                                   Rng& rng) {
  AugmentedSentence out;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    out.text.append(sentence.substr(cursor, tok.begin - cursor));
    cursor = tok.end;
    const auto original = sentence.substr(tok.begin, tok.end - tok.begin);
    if (tok.kind != TokenKind::word) {
      out.text.append(original);
      continue;
    }
    std::optional<VariantDistribution> dist;
    try {
      dist = pipeline.distribution(original);
    } catch (const Error&) {
      rethrow_annotated("token " + std::to_string(i) + " ('" + std::string(original) + "'): ");
    }
    if (!dist) {
      out.text.append(original);
      continue;
    }
    const auto& pick = sample_variant(*dist, rng);
    Substitution sub;
    sub.token_index = i;
    sub.source_span = tok;
    sub.original = std::string(original);
    sub.variant = text::starts_upper(original) ? text::capitalize_first(pick.surface) : pick.surface;
    for (const auto& inst : pick.applied) sub.rules.push_back(describe(inst));
    sub.distance = *pick.distance;
    sub.probability = *pick.probability;
    sub.augmented_span = {out.text.size(), out.text.size() + sub.variant.size(), TokenKind::word};
    out.text.append(sub.variant);
    out.substitutions.push_back(std::move(sub));
  }
  out.text.append(sentence.substr(cursor));
  return out;
}

std::string replay(std::string_view sentence, std::span<const Substitution> substitutions) {
  std::string out;
  std::size_t cursor = 0;
  for (const auto& s : substitutions) {
    out.append(sentence.substr(cursor, s.source_span.begin - cursor));
    out.append(s.variant);
    cursor = s.source_span.end;
  }
  out.append(sentence.substr(cursor));
  return out;
}

std::vector<std::size_t> select_sentences(std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw ValidationError("K must be ≥ 1");
  if (k > m) throw ValidationError("K (" + std::to_string(k) + ") exceeds corpus size (" + std::to_string(m) + ")");
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(m - i)]);
  idx.resize(k);
  std::ranges::sort(idx);
  return idx;
}

AugmentedCorpus augment_corpus(const Corpus& corpus, std::size_t k, const Pipeline& pipeline, std::uint64_t seed,
                               unsigned threads) {
  const auto selected = select_sentences(corpus.size(), k, seed);
  AugmentedCorpus out;
  out.seed = seed;
  out.sentences.resize(k);
  std::vector<std::exception_ptr> errors(k);

  const auto work = [&](std::size_t slot) {
    const auto src = selected[slot];
    const auto sentence_seed = derive_seed(seed, src);
    try {
      Rng rng(sentence_seed);
      out.sentences[slot] = augment_sentence(corpus.sentences[src], corpus.tokens[src], pipeline, rng);
      out.sentences[slot].source_index = src;
      out.sentences[slot].seed = sentence_seed;
    } catch (const Error&) {
      try {
        rethrow_annotated("sentence " + std::to_string(src + 1) + ", ");
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  };

  const auto n_threads = std::clamp<std::size_t>(threads, 1, k);
  if (n_threads == 1) {
    for (std::size_t i = 0; i < k; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (auto i = next.fetch_add(1); i < k; i = next.fetch_add(1)) work(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<std::string> output_lines(const Corpus& corpus, const AugmentedCorpus& augmented, bool with_originals) {
  std::vector<std::string> lines;
  if (with_originals) lines = corpus.sentences;
  for (const auto& s : augmented.sentences) lines.push_back(s.text);
  return lines;
}

std::vector<std::string> parallel_target_lines(std::span<const std::string> target, const Corpus& corpus,
                                               const AugmentedCorpus& augmented, bool with_originals) {
  if (target.size() != corpus.size()) {
    throw ValidationError("parallel target has " + std::to_string(target.size()) + " lines, source has " +
                          std::to_string(corpus.size()));
  }
  std::vector<std::string> lines;
  if (with_originals) lines.assign(target.begin(), target.end());
  for (const auto& s : augmented.sentences) lines.push_back(target[s.source_index]);
  return lines;
}

void write_lines(std::ostream& out, std::span<const std::string> lines) {
  for (const auto& l : lines) out << l << '\n';
}

void write_lines(const std::filesystem::path& path, std::span<const std::string> lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_lines(out, lines);
  out.close();
  if (!out) throw Error("failed writing " + path.string());
}

void emit_union(const Corpus& corpus, const AugmentedCorpus& augmented, const std::filesystem::path& path) {
  write_lines(path, output_lines(corpus, augmented, true));
}

std::string provenance_json(const AugmentedSentence& sentence) {
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const auto& s : sentence.substitutions) {
    subs.push_back({{"token", s.token_index},
                    {"source_span", {s.source_span.begin, s.source_span.end}},
                    {"span", {s.augmented_span.begin, s.augmented_span.end}},
                    {"original", s.original},
                    {"variant", s.variant},
                    {"rules", s.rules},
                    {"distance", s.distance},
                    {"probability", s.probability}});
  }
  nlohmann::ordered_json j{{"source_index", sentence.source_index},
                           {"seed", sentence.seed},
                           {"text", sentence.text},
                           {"substitutions", std::move(subs)}};
  return j.dump();
}

std::map<std::string, std::size_t> word_type_counts(const Corpus& corpus) {
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& t : corpus.tokens[i]) {
      if (t.kind == TokenKind::word) ++counts[text::to_lower(corpus.text(i, t))];
    }
  }
  return counts;
}

VariantStats count_new_variants(const Corpus& original, const Corpus& augmented) {
  VariantStats stats;
  stats.type_counts = word_type_counts(augmented);
  const auto known = word_type_counts(original);
  for (const auto& [type, n] : stats.type_counts) {
    if (!known.contains(type)) ++stats.new_variant_count;
  }
  return stats;
}

VariantStats count_new_variants(const Corpus& original, const AugmentedCorpus& augmented) {
  Corpus dp;
  for (const auto& s : augmented.sentences) {
    dp.sentences.push_back(s.text);
    dp.tokens.push_back(tokenize(s.text));
  }
  return count_new_variants(original, dp);
}

std::vector<std::vector<std::pair<std::string, std::size_t>>> variant_frequency(
    const Corpus& corpus, const std::vector<std::vector<std::string>>& groups) {
  const auto counts = word_type_counts(corpus);
  std::vector<std::vector<std::pair<std::string, std::size_t>>> out;
  for (const auto& group : groups) {
    auto& row = out.emplace_back();
    for (const auto& surface : group) {
      const auto key = text::to_lower(surface);
      const auto it = counts.find(key);
      row.emplace_back(key, it == counts.end() ? 0 : it->second);
    }
  }
  return out;
}

}  // namespace naijavar
