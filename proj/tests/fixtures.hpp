#pragma once

#include "naijavar/config.hpp"
#include "naijavar/pipeline.hpp"

namespace fixtures {

inline naijavar::Config shipped_config() { return naijavar::Config::defaults(naijavar::default_data_dir()); }

// Loaded once; the aligner is trained on the shipped lexicon.
inline const naijavar::Pipeline& shipped() {
  static const auto pipeline = naijavar::Pipeline::from_config(shipped_config());
  return pipeline;
}

inline std::filesystem::path data(const char* name) { return naijavar::default_data_dir() / name; }

}  // namespace fixtures
