#include "naijavar/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "naijavar/error.hpp"

namespace naijavar {

using nlohmann::json;

Config Config::defaults(const std::filesystem::path& data_dir) {
  Config c;
  c.inventory = data_dir / "inventory.tsv";
  c.lexicon = data_dir / "lexicon.tsv";
  c.fallback = data_dir / "fallback.tsv";
  c.merge_table = data_dir / "merge_table.txt";
  c.rules = data_dir / "rules.tsv";
  c.blocklist = data_dir / "blocklist.txt";
  return c;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("NAIJAVAR_DATA"); env && *env) return env;
  return NAIJAVAR_DATA_DIR;
}

Config Config::overlay(const std::filesystem::path& json_file, Config base) {
  std::ifstream in(json_file);
  if (!in) throw ValidationError("cannot open config file " + json_file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(json_file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError(json_file.string() + ": config must be a JSON object");
  const auto dir = json_file.parent_path();
  const auto path_of = [&](const json& v) { return dir / std::filesystem::path(v.get<std::string>()); };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "inventory") base.inventory = path_of(v);
      else if (key == "lexicon") base.lexicon = path_of(v);
      else if (key == "fallback") base.fallback = path_of(v);
      else if (key == "merge_table") base.merge_table = path_of(v);
      else if (key == "rules") base.rules = path_of(v);
      else if (key == "blocklist") base.blocklist = path_of(v);
      else if (key == "weight_overrides") base.weight_overrides = v.is_null() ? std::nullopt : std::optional(path_of(v));
      else if (key == "model") base.model = v.is_null() ? std::nullopt : std::optional(path_of(v));
      else if (key == "indel_cost") base.indel_cost = v.get<double>();
      else if (key == "epsilon") base.epsilon = v.get<double>();
      else if (key == "max_subsets") base.max_subsets = v.get<std::size_t>();
      else if (key == "aligner_iterations") base.aligner_iterations = v.get<int>();
      else if (key == "skip_cost") base.skip_cost = v.get<double>();
      else if (key == "smoothing_k") base.smoothing_k = v.get<double>();
      else if (key == "max_pwld") base.max_pwld = v.is_null() ? std::nullopt : std::optional(v.get<double>());
      else if (key == "seed") base.seed = v.get<std::uint64_t>();
      else throw ValidationError(json_file.string() + ": unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ValidationError(json_file.string() + ": " + e.what());
  }
  return base;
}

void Config::validate() const {
  const auto require = [](const std::filesystem::path& p, const char* what) {
    if (!std::filesystem::is_regular_file(p)) {
      throw ValidationError(std::string(what) + " file not found: " + p.string());
    }
  };
  require(inventory, "inventory");
  require(lexicon, "lexicon");
  require(fallback, "fallback rules");
  require(merge_table, "merge table");
  require(rules, "variation rules");
  require(blocklist, "blocklist");
  if (weight_overrides) require(*weight_overrides, "weight overrides");
  if (model) require(*model, "alignment model");
  if (!(indel_cost > 0.0 && indel_cost <= 1.0)) throw ValidationError("indel_cost must lie in (0, 1]");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be > 0");
  if (max_subsets < 1) throw ValidationError("max_subsets must be >= 1");
  if (aligner_iterations < 1) throw ValidationError("aligner_iterations must be >= 1");
  if (!(skip_cost > 0.0)) throw ValidationError("skip_cost must be > 0");
  if (!(smoothing_k >= 0.0)) throw ValidationError("smoothing_k must be >= 0");
  if (max_pwld && !(*max_pwld >= 0.0)) throw ValidationError("max_pwld must be >= 0");
}

}  // namespace naijavar
