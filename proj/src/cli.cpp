#include "naijavar/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "naijavar/augment.hpp"
#include "naijavar/config.hpp"
#include "naijavar/error.hpp"
#include "naijavar/metric.hpp"
#include "naijavar/pipeline.hpp"
#include "naijavar/text.hpp"

namespace naijavar::cli {

std::string ascii_symbol(std::string_view symbol) {
  std::string out;
  for (char32_t cp : text::decode_utf8(symbol)) {
    switch (cp) {
      case U'θ': out += 'T'; break;
      case U'ð': out += 'D'; break;
      case U'ŋ': out += 'N'; break;
      case U'ʃ': out += 'S'; break;
      case U'ʒ': out += 'Z'; break;
      case U'ɪ': out += 'I'; break;
      case U'ɛ': out += 'E'; break;
      case U'æ': out += '{'; break;
      case U'ɑ': out += 'A'; break;
      case U'ɒ': out += 'Q'; break;
      case U'ɔ': out += 'O'; break;
      case U'ʊ': out += 'U'; break;
      case U'ʌ': out += 'V'; break;
      case U'ə': out += '@'; break;
      case U'ɜ': out += '3'; break;
      case U'ː': out += ':'; break;
      default: out += text::encode_utf8(cp);
    }
  }
  return out;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Flags shared by every subcommand; unset flags leave the config untouched.
struct GlobalFlags {
  std::optional<std::string> config;
  std::optional<std::string> inventory, lexicon, fallback, merge_table, rules, blocklist, weight_overrides, model;
  std::optional<double> indel_cost, epsilon, skip_cost, smoothing_k, max_pwld;
  std::optional<std::size_t> max_subsets;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool ascii = false;

  Config resolve() const {
    auto c = Config::defaults(default_data_dir());
    if (config) c = Config::overlay(*config, std::move(c));
    if (inventory) c.inventory = *inventory;
    if (lexicon) c.lexicon = *lexicon;
    if (fallback) c.fallback = *fallback;
    if (merge_table) c.merge_table = *merge_table;
    if (rules) c.rules = *rules;
    if (blocklist) c.blocklist = *blocklist;
    if (weight_overrides) c.weight_overrides = *weight_overrides;
    if (model) c.model = *model;
    if (indel_cost) c.indel_cost = *indel_cost;
    if (epsilon) c.epsilon = *epsilon;
    if (skip_cost) c.skip_cost = *skip_cost;
    if (smoothing_k) c.smoothing_k = *smoothing_k;
    if (max_pwld) c.max_pwld = *max_pwld;
    if (max_subsets) c.max_subsets = *max_subsets;
    if (iterations) c.aligner_iterations = *iterations;
    if (seed) c.seed = *seed;
    return c;
  }

  std::string phonemes(std::span<const std::string> units) const {
    std::vector<std::string> shown;
    for (const auto& u : units) shown.push_back(ascii ? ascii_symbol(u) : u);
    return text::join(shown, " ");
  }
};

void require_file(const std::filesystem::path& p, const char* what) {
  if (!std::filesystem::is_regular_file(p)) throw ValidationError(std::string(what) + " file not found: " + p.string());
}

// Inventory, weights and transcription resources without the aligner.
struct Phonetics {
  PhonemeInventory inventory;
  WeightMatrix weights;
  PronunciationLexicon lexicon;
  FallbackTable fallback;

  static Phonetics load(const Config& c) {
    require_file(c.inventory, "inventory");
    require_file(c.lexicon, "lexicon");
    require_file(c.fallback, "fallback rules");
    if (c.weight_overrides) require_file(*c.weight_overrides, "weight overrides");
    auto inv = PhonemeInventory::load(c.inventory);
    if (c.weight_overrides) inv.load_overrides(*c.weight_overrides);
    auto weights = build_weight_matrix(inv, c.indel_cost);
    auto lex = PronunciationLexicon::load(c.lexicon, inv);
    auto fb = FallbackTable::load(c.fallback, inv);
    return {std::move(inv), std::move(weights), std::move(lex), std::move(fb)};
  }
};

std::vector<std::string> read_word_file(const std::string& path) {
  std::vector<std::string> words;
  const auto contents = text::read_file(path);
  std::size_t start = 0;
  while (start < contents.size()) {
    auto nl = contents.find('\n', start);
    if (nl == std::string::npos) nl = contents.size();
    auto line = std::string(text::trim(std::string_view(contents).substr(start, nl - start)));
    if (!line.empty()) words.push_back(std::move(line));
    start = nl + 1;
  }
  return words;
}

int cmd_transcribe(const GlobalFlags& g, const std::vector<std::string>& words_arg, const std::string& file,
                   std::ostream& out, std::ostream& err) {
  auto words = words_arg;
  if (!file.empty()) {
    const auto more = read_word_file(file);
    words.insert(words.end(), more.begin(), more.end());
  }
  if (words.empty()) throw ValidationError("transcribe needs words or --file");
  const auto ph = Phonetics::load(g.resolve());
  int status = 0;
  for (const auto& w : words) {
    try {
      const auto t = transcribe(w, ph.lexicon, ph.fallback);
      out << w << '\t' << g.phonemes(t.phonemes) << '\t' << to_string(t.provenance) << '\n';
    } catch (const Error& e) {
      out << w << "\tERROR\t" << e.what() << '\n';
      err << "error: " << e.what() << '\n';
      const int code = dynamic_cast<const ValidationError*>(&e) ? 2 : 1;
      status = std::max(status, code);
    }
  }
  return status;
}

int cmd_variants(const GlobalFlags& g, const std::string& word, std::ostream& out) {
  const auto pipeline = Pipeline::from_config(g.resolve());
  auto dist = pipeline.distribution(word);
  if (!dist) return 0;
  auto rows = std::move(dist->candidates);
  std::ranges::stable_sort(rows, [](const auto& a, const auto& b) { return *a.probability > *b.probability; });
  const auto seed = text::to_lower(word);
  for (const auto& c : rows) {
    std::vector<std::string> rules;
    for (const auto& inst : c.applied) rules.push_back(describe(inst));
    out << c.surface << '\t' << text::join(rules, ",") << '\t' << levenshtein(seed, c.surface) << '\t'
        << fixed(*c.distance, 4) << '\t' << fixed(*c.probability, 10) << '\n';
  }
  return 0;
}

int cmd_dist(const GlobalFlags& g, const std::string& word, const std::string& variant, std::ostream& out) {
  const auto ph = Phonetics::load(g.resolve());
  const auto a = transcribe(word, ph.lexicon, ph.fallback);
  const auto b = transcribe(variant, ph.lexicon, ph.fallback);
  out << word << '\t' << variant << '\t' << levenshtein(text::to_lower(word), text::to_lower(variant)) << '\t'
      << fixed(pwld(a.phonemes, b.phonemes, ph.weights), 4) << '\n';
  return 0;
}

int cmd_align_train(const GlobalFlags& g, const std::string& out_path, std::ostream& out) {
  const auto c = g.resolve();
  if (c.aligner_iterations < 1) throw ValidationError("aligner_iterations must be >= 1");
  require_file(c.inventory, "inventory");
  require_file(c.lexicon, "lexicon");
  require_file(c.merge_table, "merge table");
  const auto inv = PhonemeInventory::load(c.inventory);
  const auto lex = PronunciationLexicon::load(c.lexicon, inv);
  const auto merges = MergeTable::load(c.merge_table);
  const auto model = train_aligner(lexicon_training_pairs(lex, merges), c.aligner_iterations);
  if (out_path.empty()) {
    model.save(out);
    return 0;
  }
  model.save(std::filesystem::path(out_path));
  const auto ll = model.log_likelihoods();
  for (std::size_t i = 0; i < ll.size(); ++i) out << "iteration " << i << "\tlog-likelihood " << fixed(ll[i], 6) << '\n';
  return 0;
}

int cmd_align(const GlobalFlags& g, const std::string& word, std::ostream& out) {
  const auto c = g.resolve();
  c.validate();
  const auto ph = Phonetics::load(c);
  const auto merges = MergeTable::load(c.merge_table);
  const auto model = c.model ? AlignmentModel::load(*c.model)
                             : train_aligner(lexicon_training_pairs(ph.lexicon, merges), c.aligner_iterations);
  const auto t = transcribe(word, ph.lexicon, ph.fallback);
  const auto aligned = align(merge_units(text::to_lower(t.word), t.phonemes, merges), model, {c.skip_cost, c.smoothing_k});
  for (std::size_t i = 0; i < aligned.grapheme_units.size(); ++i) {
    const auto linked = aligned.linked_phonemes(i);
    out << aligned.grapheme_units[i] << "→" << (linked.empty() ? "-" : g.phonemes(linked)) << '\t'
        << to_string(aligned.positions[i]) << '\n';
  }
  return 0;
}

int cmd_calibrate(const GlobalFlags& g, const std::string& labels, const std::string& overrides_out,
                  std::ostream& out) {
  const auto ph = Phonetics::load(g.resolve());
  const auto data = load_calibration(labels);
  const auto result =
      calibrate(ph.weights, data, [&](std::string_view w) { return transcribe(w, ph.lexicon, ph.fallback); });
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [key, mult] : result.multipliers) {
    pairs.push_back({{"a", result.weights.symbol(key.first)},
                     {"b", result.weights.symbol(key.second)},
                     {"multiplier", mult},
                     {"cost", result.weights.cost(key.first, key.second)}});
  }
  nlohmann::ordered_json j{{"items", data.size()},
                           {"baseline_accuracy", result.baseline_accuracy},
                           {"baseline_threshold", result.baseline_threshold},
                           {"accuracy", result.accuracy},
                           {"threshold", result.threshold},
                           {"adjusted_pairs", std::move(pairs)}};
  out << j.dump(2) << '\n';
  if (!overrides_out.empty()) {
    std::ofstream f(overrides_out, std::ios::binary);
    if (!f) throw Error("cannot open " + overrides_out + " for writing");
    f << "# calibrated substitution costs; load with --weight-overrides\n";
    for (const auto& [key, mult] : result.multipliers) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", result.weights.cost(key.first, key.second));
      f << "!override\t" << result.weights.symbol(key.first) << '\t' << result.weights.symbol(key.second) << '\t'
        << buf << '\n';
    }
    if (!f) throw Error("failed writing " + overrides_out);
  }
  return 0;
}

struct AugmentArgs {
  std::string input, parallel_target, target_out, out, provenance;
  std::optional<long long> k;
  std::optional<double> k_frac;
  bool emit_union = false;
};

int cmd_augment(const GlobalFlags& g, const AugmentArgs& a, std::ostream& out) {
  if (a.k && *a.k < 1) throw ValidationError("K must be ≥ 1");
  if (!a.k && !a.k_frac) throw ValidationError("one of --k or --k-frac is required");
  if (a.k_frac && !(*a.k_frac > 0.0 && *a.k_frac <= 1.0)) throw ValidationError("--k-frac must lie in (0, 1]");
  if (!a.parallel_target.empty() && a.target_out.empty()) {
    throw ValidationError("--parallel-target requires --target-out");
  }
  const auto config = g.resolve();
  const auto corpus = load_corpus(a.input);
  const std::size_t k = a.k ? static_cast<std::size_t>(*a.k)
                            : static_cast<std::size_t>(std::llround(*a.k_frac * static_cast<double>(corpus.size())));
  if (k < 1) throw ValidationError("K must be ≥ 1");
  if (k > corpus.size()) {
    throw ValidationError("K (" + std::to_string(k) + ") exceeds corpus size (" + std::to_string(corpus.size()) + ")");
  }
  std::vector<std::string> target;
  if (!a.parallel_target.empty()) {
    target = parse_corpus(text::read_file(a.parallel_target), a.parallel_target).sentences;
    if (target.size() != corpus.size()) {
      throw ValidationError("parallel target has " + std::to_string(target.size()) + " lines, source has " +
                            std::to_string(corpus.size()));
    }
  }
  const auto pipeline = Pipeline::from_config(config);
  const unsigned threads = g.threads ? g.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto augmented = augment_corpus(corpus, k, pipeline, config.seed, threads);

  write_lines(a.out, output_lines(corpus, augmented, a.emit_union));
  if (!target.empty()) write_lines(a.target_out, parallel_target_lines(target, corpus, augmented, a.emit_union));
  if (!a.provenance.empty()) {
    std::vector<std::string> records;
    for (const auto& s : augmented.sentences) records.push_back(provenance_json(s));
    write_lines(a.provenance, records);
  }
  std::size_t subs = 0;
  for (const auto& s : augmented.sentences) subs += s.substitutions.size();
  out << "augmented " << augmented.k() << " of " << corpus.size() << " sentences, " << subs << " substitutions\n";
  return 0;
}

int cmd_stats(const std::string& input, const std::string& against, std::ostream& out) {
  const auto stats = count_new_variants(load_corpus(against), load_corpus(input));
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [type, n] : stats.type_counts) counts[type] = n;
  nlohmann::ordered_json j{{"new_variant_count", stats.new_variant_count}, {"type_counts", std::move(counts)}};
  out << j.dump() << '\n';
  return 0;
}

int cmd_freq(const std::vector<std::string>& inputs, const std::vector<std::string>& groups_arg, std::ostream& out) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& g : groups_arg) groups.push_back(text::split(g, ','));
  for (const auto& path : inputs) {
    const auto table = variant_frequency(load_corpus(path), groups);
    for (std::size_t gi = 0; gi < table.size(); ++gi) {
      for (const auto& [surface, n] : table[gi]) out << path << '\t' << gi + 1 << '\t' << surface << '\t' << n << '\n';
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesizes, scores and samples spelling variants of Nigerian Pidgin words.", "naijavar"};
  app.set_version_flag("--version", NAIJAVAR_VERSION);
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--config", g.config, "JSON configuration file");
  app.add_option("--inventory", g.inventory, "phoneme inventory");
  app.add_option("--lexicon", g.lexicon, "pronunciation lexicon");
  app.add_option("--fallback", g.fallback, "letter-to-sound fallback rules");
  app.add_option("--merge-table", g.merge_table, "grapheme/phoneme merge table");
  app.add_option("--rules", g.rules, "variation rules");
  app.add_option("--blocklist", g.blocklist, "real-word blocklist");
  app.add_option("--weight-overrides", g.weight_overrides, "substitution cost overrides");
  app.add_option("--model", g.model, "trained alignment model (default: train on the lexicon)");
  app.add_option("--indel-cost", g.indel_cost, "insertion/deletion cost, (0, 1]");
  app.add_option("--epsilon", g.epsilon, "distance floor for sampling, > 0");
  app.add_option("--max-subsets", g.max_subsets, "rule subsets visited per word");
  app.add_option("--iterations", g.iterations, "aligner EM iterations");
  app.add_option("--skip-cost", g.skip_cost, "aligner skip cost");
  app.add_option("--smoothing-k", g.smoothing_k, "aligner add-k smoothing");
  app.add_option("--max-pwld", g.max_pwld, "drop candidates farther than this");
  app.add_option("--seed", g.seed, "64-bit seed");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_flag("--ascii", g.ascii, "print phonemes with ASCII aliases");

  const auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::vector<std::string> words;
  std::string word_file;
  auto* transcribe_cmd = sub("transcribe", "print phoneme transcriptions");
  transcribe_cmd->add_option("words", words, "words to transcribe");
  transcribe_cmd->add_option("--file", word_file, "file with one word per line");

  std::string word, variant;
  auto* variants_cmd = sub("variants", "list scored variant candidates of a word");
  variants_cmd->add_option("word", word, "seed word")->required();

  auto* dist_cmd = sub("dist", "edit distances between a word and a variant");
  dist_cmd->add_option("word", word, "seed word")->required();
  dist_cmd->add_option("variant", variant, "variant spelling")->required();

  std::string out_path;
  auto* train_cmd = sub("align-train", "train the grapheme/phoneme aligner on the lexicon");
  train_cmd->add_option("--out", out_path, "model output file (default: stdout)");

  auto* align_cmd = sub("align", "print the unit alignment of a word");
  align_cmd->add_option("word", word, "word")->required();

  std::string labels, overrides_out;
  auto* calibrate_cmd = sub("calibrate", "tune substitution costs on labelled pairs");
  calibrate_cmd->add_option("--labels", labels, "seed<TAB>variant<TAB>good|bad file")->required();
  calibrate_cmd->add_option("--out-overrides", overrides_out, "write calibrated costs as overrides");

  AugmentArgs aug;
  auto* augment_cmd = sub("augment", "write variation-augmented sentences");
  augment_cmd->add_option("--input", aug.input, "corpus, one sentence per line")->required();
  augment_cmd->add_option("--parallel-target", aug.parallel_target, "line-aligned translation side");
  augment_cmd->add_option("--target-out", aug.target_out, "output for the translation side");
  auto* k_opt = augment_cmd->add_option("--k", aug.k, "number of sentences to augment");
  augment_cmd->add_option("--k-frac", aug.k_frac, "fraction of sentences to augment")->excludes(k_opt);
  augment_cmd->add_option("--out", aug.out, "augmented output")->required();
  augment_cmd->add_flag("--emit-union", aug.emit_union, "write originals followed by augmented sentences");
  augment_cmd->add_option("--provenance", aug.provenance, "JSON lines substitution records");

  std::string input, against;
  auto* stats_cmd = sub("stats", "word-type counts and new-variant count");
  stats_cmd->add_option("--input", input, "augmented corpus")->required();
  stats_cmd->add_option("--against", against, "original corpus")->required();

  std::vector<std::string> freq_inputs, groups;
  auto* freq_cmd = sub("freq", "token counts of variant groups");
  freq_cmd->add_option("--input", freq_inputs, "corpus files")->required();
  freq_cmd->add_option("--group", groups, "comma-separated surfaces")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*transcribe_cmd) return cmd_transcribe(g, words, word_file, out, err);
    if (*variants_cmd) return cmd_variants(g, word, out);
    if (*dist_cmd) return cmd_dist(g, word, variant, out);
    if (*train_cmd) return cmd_align_train(g, out_path, out);
    if (*align_cmd) return cmd_align(g, word, out);
    if (*calibrate_cmd) return cmd_calibrate(g, labels, overrides_out, out);
    if (*augment_cmd) return cmd_augment(g, aug, out);
    if (*stats_cmd) return cmd_stats(input, against, out);
    if (*freq_cmd) return cmd_freq(freq_inputs, groups, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace naijavar::cli
