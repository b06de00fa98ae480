#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>

namespace naijavar {

struct Config {
  std::filesystem::path inventory;
  std::filesystem::path lexicon;
  std::filesystem::path fallback;
  std::filesystem::path merge_table;
  std::filesystem::path rules;
  std::filesystem::path blocklist;
  std::optional<std::filesystem::path> weight_overrides;
  std::optional<std::filesystem::path> model;  // trained on the lexicon when absent

  double indel_cost = 0.6;
  double epsilon = 1e-4;
  std::size_t max_subsets = 64;
  int aligner_iterations = 10;
  double skip_cost = 3.0;
  double smoothing_k = 0.01;
  std::optional<double> max_pwld;
  std::uint64_t seed = 0;

  // Shipped data files under `data_dir`.
  static Config defaults(const std::filesystem::path& data_dir);

  // Overlays a JSON config file on `base`. Relative paths resolve against the
  // file's directory. Unknown keys are rejected.
  static Config overlay(const std::filesystem::path& json_file, Config base);

  // Throws ValidationError when a referenced file is missing or a knob is out
  // of range.
  void validate() const;
};

// $NAIJAVAR_DATA when set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

}  // namespace naijavar
