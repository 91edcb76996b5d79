#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stylefacts/config.hpp"
#include "stylefacts/stats.hpp"

namespace stylefacts {

inline constexpr const char* kVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunArtifacts {
  std::vector<std::filesystem::path> files;
  nlohmann::json report;
  std::string summary;  // one-screen human-readable digest
  std::vector<std::string> analysis_errors;
};

// Writes a CSV file: header row, then one record per row. Doubles are
// rendered with 17 significant digits so they round-trip exactly.
void emit_csv(const std::filesystem::path& path,
              std::span<const std::string> header,
              const std::vector<std::vector<double>>& columns);

// Runs the simulation described by `config`, discards the warm-up from all
// statistics, writes the artifact set into out_dir and returns the report.
// Analyses whose preconditions fail are recorded in analysis_errors; the
// surviving artifacts are still emitted.
RunArtifacts run_experiment(const ExperimentConfig& config,
                            const std::filesystem::path& out_dir);

}  // namespace stylefacts
