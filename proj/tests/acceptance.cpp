// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "naijavar/augment.hpp"
#include "naijavar/metric.hpp"
#include "naijavar/sampler.hpp"
#include "naijavar/text.hpp"
#include "oracles.hpp"

using namespace naijavar;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t begin = 0; begin < out.size(); ++begin) {
    if (out[begin].size() == max_len) continue;
    for (char c : alphabet) out.push_back(out[begin] + c);
  }
  return out;
}

std::vector<std::vector<std::string>> all_sequences(const std::vector<std::string>& symbols, std::size_t max_len) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t begin = 0; begin < out.size(); ++begin) {
    if (out[begin].size() == max_len) continue;
    for (const auto& s : symbols) {
      auto next = out[begin];
      next.push_back(s);
      out.push_back(std::move(next));
    }
  }
  return out;
}

double pwld_of(const Pipeline& p, const std::string& a, const std::string& b) {
  return pwld(p.transcribe(a).phonemes, p.transcribe(b).phonemes, p.weights());
}

std::vector<VariantCandidate> unfiltered(const Pipeline& p, const std::string& word) {
  const auto aligned = p.align_word(p.transcribe(word));
  const auto inst = applicable_instances(aligned, p.rules());
  return synthesize_variants(aligned, inst, p.options().max_subsets, p.transcriber());
}

Pipeline with_blocklist(const Pipeline& p, Blocklist blocklist) {
  return Pipeline(p.inventory(), p.lexicon(), p.fallback(), p.merges(), p.model(), p.rules(), std::move(blocklist),
                  p.options());
}

std::string d_prime_bytes(const Corpus& corpus, const AugmentedCorpus& dp) {
  std::ostringstream out;
  write_lines(out, output_lines(corpus, dp, false));
  return out.str();
}

}  // namespace

int main() {
  const auto& p = fixtures::shipped();
  const auto corpus = load_corpus(fixtures::data("corpus.txt"));

  report(1, "Levenshtein values for because and anything", [] {
    Outcome o;
    const std::vector<std::tuple<const char*, const char*, std::size_t>> table{
        {"because", "bikos", 5}, {"because", "cause", 2}, {"because", "cos", 5},
        {"anything", "anyting", 1}, {"anything", "anitin", 3}, {"anything", "onytin", 3}};
    const auto t0 = Clock::now();
    for (const auto& [a, b, want] : table) {
      const auto got = levenshtein(a, b);
      o.require(got == want, std::string(a) + "->" + b + " = " + std::to_string(got));
    }
    o.require(seconds_since(t0) < 1.0, "slower than 1 s");
    return o;
  });

  report(2, "PWLD orderings within each seed word", [&] {
    Outcome o;
    const double anyting = pwld_of(p, "anything", "anyting"), anitin = pwld_of(p, "anything", "anitin"),
                 onytin = pwld_of(p, "anything", "onytin");
    const double bikos = pwld_of(p, "because", "bikos"), cause = pwld_of(p, "because", "cause"),
                 cos = pwld_of(p, "because", "cos");
    o.require(anyting < anitin && anitin < onytin, "anything ordering broken");
    o.require(bikos < cause && cause < cos, "because ordering broken");
    char buf[200];
    std::snprintf(buf, sizeof buf, "anyting %.4f < anitin %.4f < onytin %.4f; bikos %.4f < cause %.4f < cos %.4f",
                  anyting, anitin, onytin, bikos, cause, cos);
    if (o.pass) o.detail = buf;
    return o;
  });

  report(3, "every rule-table example variant is synthesized", [&] {
    Outcome o;
    // seed, variant, a rule the row illustrates
    const std::vector<std::tuple<const char*, const char*, const char*>> rows{
        {"carry", "karry", "alternation:c>k"},       {"call", "coll", "alternation:a>o"},
        {"by", "bi", "alternation:y>i"},             {"destroy", "distroy", "alternation:e>i"},
        {"because", "bikos", "conversion:au>o"},     {"see", "si", "conversion:ee>i"},
        {"reach", "rish", "conversion:ea>i"},        {"people", "pipol", "conversion:eo>i"},
        {"the", "di", "conversion:th>d"},            {"thing", "tin", "conversion:th>t"},
        {"ting", "tin", "conversion:ng>n"},          {"prophet", "profet", "conversion:ph>f"},
        {"when", "wen", "conversion:wh>w"},          {"teach", "tish", "conversion:ch>sh"},
        {"trouble", "trobol", "transcription:ble>bol"}, {"whether", "weda", "transcription:er>a"},
        {"night", "nite", "transcription:ight>ite"}, {"different", "difren", "deletion:e>-"},
        {"come", "kom", "deletion:e>-"}};
    std::size_t found = 0;
    for (const auto& [seed, variant, rule] : rows) {
      const auto cands = unfiltered(p, seed);
      const auto it = std::ranges::find_if(cands, [&](const VariantCandidate& c) { return c.surface == variant; });
      if (it == cands.end()) {
        o.require(false, std::string(seed) + "->" + variant + " missing");
        continue;
      }
      const bool uses_rule = std::ranges::any_of(
          it->applied, [&](const RuleInstance& r) { return describe(r).starts_with(rule); });
      o.require(uses_rule, std::string(seed) + "->" + variant + " without " + rule);
      found += uses_rule ? 1 : 0;
    }
    if (o.pass) o.detail = std::to_string(found) + "/" + std::to_string(rows.size()) + " rows";
    return o;
  });

  report(4, "inverse-distance normalization on 1000 random vectors", [] {
    Outcome o;
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    std::bernoulli_distribution tiny(0.1);
    for (int trial = 0; trial < 1000 && o.pass; ++trial) {
      std::vector<double> d(static_cast<std::size_t>(len(gen)));
      for (auto& x : d) x = tiny(gen) ? dist(gen) * 1e-5 : dist(gen);
      const auto probs = inverse_distance_probabilities(d, kDefaultEpsilon);
      double sum = 0.0;
      for (double q : probs) {
        o.require(q > 0.0, "non-positive probability");
        sum += q;
      }
      o.require(std::abs(sum - 1.0) <= 1e-9, "sum off by " + std::to_string(sum - 1.0));
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
          const double fi = std::max(d[i], kDefaultEpsilon), fj = std::max(d[j], kDefaultEpsilon);
          if (fi < fj) o.require(probs[i] > probs[j], "not strictly decreasing in distance");
          if (fi == fj) o.require(probs[i] == probs[j], "equal floored distances differ");
        }
      }
    }
    return o;
  });

  report(5, "distances {1, 3} give probabilities {0.75, 0.25}", [] {
    Outcome o;
    const std::vector<double> d{1.0, 3.0};
    const auto q = inverse_distance_probabilities(d);
    o.require(std::abs(q[0] - 0.75) <= 1e-12 && std::abs(q[1] - 0.25) <= 1e-12, "wrong values");
    return o;
  });

  report(6, "real-word blocklist removes dip from deep", [&] {
    Outcome o;
    const auto has_dip = [](const std::vector<VariantCandidate>& c) {
      return std::ranges::any_of(c, [](const VariantCandidate& v) { return v.surface == "dip"; });
    };
    o.require(p.blocklist().contains("dip"), "shipped blocklist lacks dip");
    o.require(!has_dip(with_blocklist(p, {"dip"}).candidates("deep")), "dip kept with blocklist");
    o.require(!has_dip(p.candidates("deep")), "dip kept with shipped blocklist");
    o.require(has_dip(with_blocklist(p, {}).candidates("deep")), "dip absent without blocklist");
    return o;
  });

  report(7, "levenshtein and pwld equal brute-force recursion on exhaustive small inputs", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    const auto strings = all_strings("abc", 5);
    std::size_t ld_pairs = 0;
    for (const auto& a : strings) {
      const auto ua = text::decode_utf8(a);
      for (const auto& b : strings) {
        const auto got = levenshtein(a, b);
        if (got != oracle::levenshtein(ua, text::decode_utf8(b))) o.require(false, "levenshtein " + a + "/" + b);
        ++ld_pairs;
      }
    }
    // Two consonants, two vowels, one overridden pair.
    const std::vector<std::string> symbols{"p", "b", "iː", "ɪ"};
    const auto seqs = all_sequences(symbols, 6);
    std::map<std::pair<std::string, std::string>, double> sub;
    for (const auto& x : symbols) {
      for (const auto& y : symbols) sub[{x, y}] = oracle::feature_cost(p.inventory(), x, y);
    }
    const oracle::SubCost cost = [&](const std::string& x, const std::string& y) { return sub.at({x, y}); };
    const double indel = p.weights().indel_cost();
    std::size_t pw_pairs = 0;
    for (const auto& a : seqs) {
      for (const auto& b : seqs) {
        if (a.size() + b.size() > 8) continue;
        const double got = pwld(a, b, p.weights());
        const double want = oracle::pwld(a, b, cost, indel);
        if (std::abs(got - want) > 1e-9) o.require(false, "pwld mismatch");
        ++pw_pairs;
      }
    }
    o.require(seconds_since(t0) < 30.0, "slower than 30 s");
    if (o.pass) o.detail = std::to_string(ld_pairs) + " string pairs, " + std::to_string(pw_pairs) + " phoneme pairs";
    return o;
  });

  report(8, "aligner: thing and come alignments, monotone log-likelihood", [&] {
    Outcome o;
    const auto thing = p.align_word(p.transcribe("thing"));
    o.require(thing.grapheme_units == std::vector<std::string>{"th", "i", "ng"}, "thing units");
    if (thing.grapheme_units.size() == 3) {
      o.require(thing.linked_phonemes(0) == std::vector<std::string>{"θ"}, "th not linked to θ");
      o.require(thing.linked_phonemes(1) == std::vector<std::string>{"ɪ"}, "i not linked to ɪ");
      o.require(thing.linked_phonemes(2) == std::vector<std::string>{"ŋ"}, "ng not linked to ŋ");
    }
    const auto come = p.align_word(p.transcribe("come"));
    o.require(!come.grapheme_units.empty() && come.grapheme_units.back() == "e" &&
                  come.linked_phonemes(come.grapheme_units.size() - 1).empty(),
              "final e of come is linked");
    const auto ll = p.model().log_likelihoods();
    o.require(p.model().iterations_trained() == 10 && ll.size() == 11, "not 10 iterations");
    for (std::size_t i = 1; i < ll.size(); ++i) o.require(ll[i] >= ll[i - 1], "log-likelihood decreased");
    return o;
  });

  report(9, "augmentation is byte-identical across thread counts (K = 200)", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    const auto single = augment_corpus(corpus, 200, p, 20240521, 1);
    const auto multi = augment_corpus(corpus, 200, p, 20240521, 8);
    const auto a = d_prime_bytes(corpus, single), b = d_prime_bytes(corpus, multi);
    const double s = seconds_since(t0);
    o.require(a == b, "outputs differ");
    o.require(s < 10.0, "slower than 10 s");
    std::size_t subs = 0;
    for (const auto& x : single.sentences) subs += x.substitutions.size();
    o.require(subs > 0, "no substitutions made");
    if (o.pass) o.detail = std::to_string(a.size()) + " bytes, " + std::to_string(subs) + " substitutions";
    return o;
  });

  report(10, "new-variant count non-decreasing in K", [&] {
    Outcome o;
    const std::size_t m = corpus.size();
    std::vector<std::size_t> counts;
    for (std::size_t q = 1; q <= 4; ++q) {
      const auto dp = augment_corpus(corpus, m * q / 4, p, 7, 4);
      counts.push_back(count_new_variants(corpus, dp).new_variant_count);
    }
    for (std::size_t i = 1; i < counts.size(); ++i) o.require(counts[i] >= counts[i - 1], "count decreased");
    o.require(counts.front() > 0, "no new variants");
    std::string d;
    for (auto c : counts) d += (d.empty() ? "" : " <= ") + std::to_string(c);
    o.detail = o.pass ? d : o.detail + " (" + d + ")";
    return o;
  });

  report(11, "example sentence variants are reachable", [&] {
    Outcome o;
    const std::string sentence =
        "We come later learn for our new place sey if we want preach , e better to go area wey get another priest .";
    const auto tokens = tokenize(sentence);
    std::map<std::string, std::set<std::string>> cands;
    for (const auto& t : tokens) {
      if (t.kind != TokenKind::word) continue;
      const auto w = text::to_lower(sentence.substr(t.begin, t.end - t.begin));
      for (const auto& c : p.candidates(w)) cands[w].insert(c.surface);
    }
    const std::vector<std::pair<const char*, const char*>> want{{"come", "kom"},     {"later", "lata"},
                                                                {"want", "wont"},    {"preach", "prich"},
                                                                {"better", "betta"}, {"another", "anotha"}};
    for (const auto& [w, v] : want) o.require(cands[w].contains(v), std::string(v) + " not a candidate of " + w);
    return o;
  });

  report(12, "calibration accuracy at least the uncalibrated baseline", [&] {
    Outcome o;
    const auto data = load_calibration(fixtures::data("calibration.tsv"));
    o.require(data.size() == 60, "fixture is not 60 items");
    std::vector<double> d;
    std::vector<bool> good;
    for (const auto& item : data) {
      d.push_back(pwld_of(p, item.seed, item.variant));
      good.push_back(item.good);
    }
    const double baseline = oracle::best_accuracy(d, good);
    const auto r = calibrate(p.weights(), data, p.transcriber());
    std::size_t correct = 0;
    for (const auto& item : data) {
      const double dist = pwld(p.transcribe(item.seed).phonemes, p.transcribe(item.variant).phonemes, r.weights);
      correct += ((dist <= r.threshold) == item.good) ? 1 : 0;
    }
    const double acc = static_cast<double>(correct) / static_cast<double>(data.size());
    o.require(std::abs(acc - r.accuracy) < 1e-12, "reported accuracy does not match the returned matrix");
    o.require(acc >= baseline, "accuracy below baseline");
    char buf[120];
    std::snprintf(buf, sizeof buf, "baseline %.4f, calibrated %.4f (tau %.4f)", baseline, acc, r.threshold);
    o.detail = o.pass ? buf : o.detail + " (" + buf + ")";
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
