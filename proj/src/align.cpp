#include "naijavar/align.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "naijavar/error.hpp"
#include "naijavar/text.hpp"

namespace naijavar {

namespace {

struct AnchoredUnit {
  std::string_view body;
  bool at_start = false;
  bool at_end = false;
};

AnchoredUnit anchored(std::string_view unit) {
  AnchoredUnit a;
  if (unit.size() > 1 && unit.front() == '^') {
    a.at_start = true;
    unit.remove_prefix(1);
  }
  if (unit.size() > 1 && unit.back() == '$') {
    a.at_end = true;
    unit.remove_suffix(1);
  }
  a.body = unit;
  return a;
}

}  // namespace

MergeTable MergeTable::load(const std::filesystem::path& path) { return parse(text::read_file(path), path); }

MergeTable MergeTable::parse(std::string_view contents, const std::filesystem::path& source) {
  MergeTable table;
  enum class Section { none, graphemes, phonemes } section = Section::none;
  for (const auto& line : text::data_lines_from(contents)) {
    const auto t = std::string(text::trim(line.content));
    if (t == "[graphemes]") {
      section = Section::graphemes;
    } else if (t == "[phonemes]") {
      section = Section::phonemes;
    } else if (section == Section::graphemes) {
      table.grapheme_merges.push_back(text::to_lower(t));
    } else if (section == Section::phonemes) {
      table.phoneme_merges.push_back(text::split_whitespace(t));
    } else {
      throw ValidationError(text::located(source, line.number, "unit outside a [graphemes]/[phonemes] section"));
    }
  }
  table.validate();
  return table;
}

void MergeTable::validate() const {
  for (std::size_t i = 0; i < grapheme_merges.size(); ++i) {
    const auto u = anchored(grapheme_merges[i]).body;
    if (text::decode_utf8(u).size() < 2) {
      throw ValidationError("grapheme merge unit '" + grapheme_merges[i] + "' is shorter than 2");
    }
    for (std::size_t j = i + 1; j < grapheme_merges.size(); ++j) {
      const auto later = anchored(grapheme_merges[j]).body;
      if (later.size() > u.size() && later.starts_with(u)) {
        throw ValidationError("grapheme merge unit '" + grapheme_merges[i] + "' is a prefix of later unit '" +
                              grapheme_merges[j] + "'; list longer units first");
      }
    }
  }
  for (std::size_t i = 0; i < phoneme_merges.size(); ++i) {
    const auto& u = phoneme_merges[i];
    if (u.size() < 2) throw ValidationError("phoneme merge unit must have at least 2 tokens");
    for (std::size_t j = i + 1; j < phoneme_merges.size(); ++j) {
      const auto& later = phoneme_merges[j];
      if (later.size() > u.size() && std::equal(u.begin(), u.end(), later.begin())) {
        throw ValidationError("phoneme merge unit '" + text::join(u, " ") + "' is a prefix of a later unit");
      }
    }
  }
}

UnitSegmentation merge_units(std::string_view word, std::span<const std::string> phonemes, const MergeTable& table) {
  UnitSegmentation seg;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t len = 0;
    for (const auto& entry : table.grapheme_merges) {
      const auto unit = anchored(entry);
      if (unit.body.size() <= len || word.compare(pos, unit.body.size(), unit.body) != 0) continue;
      if (unit.at_start && pos != 0) continue;
      if (unit.at_end && pos + unit.body.size() != word.size()) continue;
      len = unit.body.size();
    }
    if (len == 0) {
      len = 1;
      while (pos + len < word.size() && (static_cast<unsigned char>(word[pos + len]) & 0xC0) == 0x80) ++len;
    }
    seg.graphemes.emplace_back(word.substr(pos, len));
    pos += len;
  }
  std::size_t i = 0;
  while (i < phonemes.size()) {
    std::size_t len = 1;
    for (const auto& unit : table.phoneme_merges) {
      if (unit.size() > len && i + unit.size() <= phonemes.size() &&
          std::equal(unit.begin(), unit.end(), phonemes.begin() + static_cast<std::ptrdiff_t>(i))) {
        len = unit.size();
      }
    }
    std::string merged;
    for (std::size_t k = 0; k < len; ++k) merged += phonemes[i + k];
    seg.phonemes.push_back(std::move(merged));
    i += len;
  }
  return seg;
}

double AlignmentModel::probability(std::string_view grapheme, std::string_view phoneme) const {
  auto g = probs_.find(std::string(grapheme));
  if (g == probs_.end()) return 0.0;
  auto p = g->second.find(std::string(phoneme));
  return p == g->second.end() ? 0.0 : p->second;
}

bool AlignmentModel::knows_grapheme(std::string_view grapheme) const { return probs_.contains(std::string(grapheme)); }

double AlignmentModel::smoothed(std::string_view grapheme, std::string_view phoneme, double k) const {
  const double slots = static_cast<double>(phoneme_vocab_size_ + 1);
  if (!knows_grapheme(grapheme)) return k > 0.0 ? 1.0 / slots : 0.0;
  return (probability(grapheme, phoneme) + k) / (1.0 + k * slots);
}

void AlignmentModel::rebuild_vocabulary() {
  std::set<std::string> vocab;
  for (const auto& [g, dist] : probs_) {
    for (const auto& [p, _] : dist) vocab.insert(p);
  }
  phoneme_vocab_size_ = vocab.size();
}

void AlignmentModel::save(std::ostream& out) const {
  out << "# iterations\t" << iterations_ << '\n';
  char buf[64];
  for (const auto& [g, dist] : probs_) {
    for (const auto& [p, prob] : dist) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, prob, std::chars_format::general, 17);
      out << g << '\t' << p << '\t' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
  }
}

void AlignmentModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  save(out);
}

AlignmentModel AlignmentModel::load(std::istream& in, const std::filesystem::path& source) {
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string contents = ss.str();
  AlignmentModel model;
  std::size_t number = 0;
  std::istringstream lines(contents);
  std::string raw;
  while (std::getline(lines, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.starts_with("# iterations\t")) {
      model.iterations_ = std::stoi(raw.substr(13));
      continue;
    }
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    const auto fields = text::split(raw, '\t');
    double prob = 0.0;
    if (fields.size() == 3) {
      auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), prob);
      if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) prob = -1.0;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || !(prob >= 0.0 && prob <= 1.0)) {
      throw ValidationError(text::located(source, number, "expected grapheme<TAB>phoneme<TAB>probability"));
    }
    model.probs_[fields[0]][fields[1]] = prob;
  }
  for (const auto& [g, dist] : model.probs_) {
    double total = 0.0;
    for (const auto& [_, p] : dist) total += p;
    if (std::abs(total - 1.0) > 1e-6) {
      throw ValidationError(source.string() + ": probabilities for grapheme '" + g + "' do not sum to 1");
    }
  }
  model.rebuild_vocabulary();
  return model;
}

AlignmentModel AlignmentModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return load(in, path);
}

AlignmentModel train_aligner(std::span<const UnitSegmentation> pairs, int iterations) {
  if (pairs.empty()) throw ValidationError("cannot train the aligner on an empty training set");
  if (iterations < 1) throw ValidationError("aligner iterations must be >= 1");

  // Dense ids in first-seen order keep accumulation order fixed.
  std::unordered_map<std::string, std::size_t> gid, pid;
  std::vector<std::string> gnames, pnames;
  std::vector<std::vector<std::size_t>> gseq(pairs.size()), pseq(pairs.size());
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const auto& pair = pairs[n];
    if (pair.graphemes.empty() || pair.phonemes.empty()) {
      throw ValidationError("training pair " + std::to_string(n) + " has an empty side");
    }
    for (const auto& g : pair.graphemes) {
      auto [it, fresh] = gid.emplace(g, gnames.size());
      if (fresh) gnames.push_back(g);
      gseq[n].push_back(it->second);
    }
    for (const auto& p : pair.phonemes) {
      auto [it, fresh] = pid.emplace(p, pnames.size());
      if (fresh) pnames.push_back(p);
      pseq[n].push_back(it->second);
    }
  }
  const std::size_t G = gnames.size();
  const std::size_t P = pnames.size();
  std::vector<double> t(G * P, 1.0 / static_cast<double>(P));
  std::vector<double> counts(G * P);
  std::vector<double> totals(G);

  AlignmentModel model;
  const auto e_step = [&](bool accumulate) {
    double ll = 0.0;
    if (accumulate) {
      std::ranges::fill(counts, 0.0);
      std::ranges::fill(totals, 0.0);
    }
    for (std::size_t n = 0; n < pairs.size(); ++n) {
      const auto& gs = gseq[n];
      for (std::size_t p : pseq[n]) {
        double denom = 0.0;
        for (std::size_t g : gs) denom += t[g * P + p];
        ll += std::log(denom / static_cast<double>(gs.size()));
        if (!accumulate) continue;
        for (std::size_t g : gs) {
          const double post = t[g * P + p] / denom;
          counts[g * P + p] += post;
          totals[g] += post;
        }
      }
    }
    return ll;
  };
  for (int it = 0; it < iterations; ++it) {
    model.log_likelihoods_.push_back(e_step(true));
    for (std::size_t g = 0; g < G; ++g) {
      for (std::size_t p = 0; p < P; ++p) t[g * P + p] = counts[g * P + p] / totals[g];
    }
  }
  model.log_likelihoods_.push_back(e_step(false));

  for (std::size_t g = 0; g < G; ++g) {
    auto& dist = model.probs_[gnames[g]];
    for (std::size_t p = 0; p < P; ++p) {
      if (t[g * P + p] > 0.0) dist[pnames[p]] = t[g * P + p];
    }
  }
  model.iterations_ = iterations;
  model.rebuild_vocabulary();
  return model;
}

std::string_view to_string(UnitPosition p) {
  switch (p) {
    case UnitPosition::initial:
      return "initial";
    case UnitPosition::medial:
      return "medial";
    case UnitPosition::final:
      return "final";
  }
  return "?";
}

std::vector<UnitPosition> unit_positions(std::size_t n) {
  std::vector<UnitPosition> out(n, UnitPosition::medial);
  if (n == 0) return out;
  out.back() = UnitPosition::final;
  out.front() = UnitPosition::initial;
  return out;
}

std::vector<std::string> AlignedWord::linked_phonemes(std::size_t grapheme) const {
  std::vector<std::string> out;
  for (const auto& l : links) {
    if (l.grapheme == grapheme) out.push_back(phoneme_units[l.phoneme]);
  }
  return out;
}

AlignedWord align(const UnitSegmentation& units, const AlignmentModel& model, const AlignOptions& options) {
  const auto& gs = units.graphemes;
  const auto& ps = units.phonemes;
  if (gs.empty()) throw ValidationError("cannot align an empty word");
  const std::size_t G = gs.size();
  const std::size_t P = ps.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  const auto link_cost = [&](std::size_t g, std::size_t p) {
    const double prob = model.smoothed(gs[g], ps[p], options.smoothing_k);
    return prob > 0.0 ? -std::log(prob) : inf;
  };

  enum Move : unsigned char { none, link, gskip, pskip };
  std::vector<double> cost((G + 1) * (P + 1), inf);
  std::vector<Move> back((G + 1) * (P + 1), none);
  const auto at = [&](std::size_t i, std::size_t j) { return i * (P + 1) + j; };
  cost[at(0, 0)] = 0.0;
  for (std::size_t i = 0; i <= G; ++i) {
    for (std::size_t j = 0; j <= P; ++j) {
      if (i == 0 && j == 0) continue;
      double best = inf;
      Move move = none;
      if (i > 0 && j > 0) {
        const double c = cost[at(i - 1, j - 1)] + link_cost(i - 1, j - 1);
        if (c < best) best = c, move = link;
      }
      if (i > 0) {
        const double c = cost[at(i - 1, j)] + options.skip_cost;
        if (c < best) best = c, move = gskip;
      }
      if (j > 0) {
        const std::size_t host = i > 0 ? i - 1 : 0;
        const double c = cost[at(i, j - 1)] + options.skip_cost + link_cost(host, j - 1);
        if (c < best) best = c, move = pskip;
      }
      cost[at(i, j)] = best;
      back[at(i, j)] = move;
    }
  }
  if (!std::isfinite(cost[at(G, P)])) {
    std::string unseen;
    for (const auto& g : gs) {
      if (!model.knows_grapheme(g)) unseen += (unseen.empty() ? "" : ", ") + g;
    }
    throw Error("unalignable unit in '" + text::join(gs, "") + "'" +
                (unseen.empty() ? std::string() : " (unseen: " + unseen + ")"));
  }

  AlignedWord out;
  out.word = text::join(gs, "");
  out.grapheme_units = gs;
  out.phoneme_units = ps;
  out.positions = unit_positions(G);
  std::size_t i = G, j = P;
  while (i > 0 || j > 0) {
    switch (back[at(i, j)]) {
      case link:
        out.links.push_back({i - 1, j - 1});
        --i, --j;
        break;
      case gskip:
        --i;
        break;
      case pskip:
        out.links.push_back({i > 0 ? i - 1 : 0, j - 1});
        --j;
        break;
      case none:
        throw Error("alignment backtrace failed");
    }
  }
  std::ranges::reverse(out.links);
  return out;
}

}  // namespace naijavar
