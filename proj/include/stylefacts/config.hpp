#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stylefacts/params.hpp"

namespace stylefacts {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::set<std::string> kAnalysisNames = {
    "kurtosis", "sf_test", "acf", "powerlaw", "agg_gaussianity"};

struct ExperimentConfig {
  ModelParams params;
  std::set<std::string> analyses = kAnalysisNames;  // default: all
  std::vector<long long> deltas = {1};
  std::string out = "out";
  long long warmup = 130;
  long long acf_max_lag = 200;
  long long hist_bins = 101;

  bool operator==(const ExperimentConfig&) const = default;
};

std::vector<std::string> preset_names();

// Expands a preset name into trader counts and the reference scalar
// parameters. Throws ConfigError on unknown names.
void apply_preset(ModelParams& params, const std::string& name);

// Parses a flat key-value document ("key = value", '#' comments). Unknown
// keys, malformed values and constraint violations raise ConfigError naming
// the key. Presets expand in place; later keys override preset values.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Canonical key-value form; parse_config(serialize_config(c, true)) == c.
std::string serialize_config(const ExperimentConfig& config,
                             bool include_out = true);

}  // namespace stylefacts
