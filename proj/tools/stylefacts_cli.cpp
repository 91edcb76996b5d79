// Command-line front end: `run` simulates a configured market and emits the
// artifact set, `presets` lists the built-in parameter sets, `analyze`
// computes the stylised-facts statistics on an existing returns CSV.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stylefacts/artifacts.hpp"
#include "stylefacts/config.hpp"
#include "stylefacts/market.hpp"
#include "stylefacts/stats.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitIo = 3;

std::vector<double> read_returns_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw stylefacts::IoError("cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  if (!std::getline(in, line)) {
    throw stylefacts::IoError("empty returns file '" + path + "'");
  }
  // header: use the log_return column if present, else the last column
  int column = -1;
  {
    std::stringstream header(line);
    std::string field;
    int idx = 0;
    while (std::getline(header, field, ',')) {
      if (field == "log_return") column = idx;
      ++idx;
    }
    if (column < 0) column = idx - 1;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    for (int idx = 0; idx <= column; ++idx) {
      if (!std::getline(row, field, ',')) {
        throw stylefacts::IoError("short row in '" + path + "'");
      }
    }
    values.push_back(std::stod(field));
  }
  return values;
}

int run_command(const std::string& config_path, bool seed_given,
                std::uint64_t seed, const std::vector<std::uint64_t>& seeds,
                const std::string& out_flag) {
  stylefacts::ExperimentConfig config =
      stylefacts::parse_config_file(config_path);
  if (seed_given) config.params.seed = seed;

  std::string out_dir = config.out;
  if (const char* env = std::getenv("STYLEFACTS_OUT")) out_dir = env;
  if (!out_flag.empty()) out_dir = out_flag;

  std::vector<std::uint64_t> run_seeds =
      seeds.empty() ? std::vector<std::uint64_t>{config.params.seed} : seeds;

  bool any_analysis_failed = false;
  for (std::uint64_t s : run_seeds) {
    stylefacts::ExperimentConfig run_config = config;
    run_config.params.seed = s;
    std::filesystem::path dir = out_dir;
    if (run_seeds.size() > 1) dir /= "seed_" + std::to_string(s);
    const auto artifacts = stylefacts::run_experiment(run_config, dir);
    std::cout << artifacts.summary;
    std::cout << "  artifacts in " << dir.string() << "\n";
    if (!artifacts.analysis_errors.empty()) any_analysis_failed = true;
  }
  return any_analysis_failed ? kExitRuntime : 0;
}

int analyze_command(const std::string& returns_path, long long acf_max_lag,
                    const std::string& report_path) {
  const std::vector<double> returns = read_returns_csv(returns_path);
  nlohmann::json report;

  std::cout << "analyze: " << returns.size() << " returns from "
            << returns_path << "\n";
  bool any_failed = false;
  auto guard = [&](const char* name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      std::cout << "  FAILED " << name << ": " << e.what() << "\n";
      any_failed = true;
    }
  };

  guard("kurtosis", [&] {
    const double kurt = stylefacts::excess_kurtosis(returns);
    report["excess_kurtosis"] = kurt;
    std::cout << "  excess kurtosis: " << kurt << "\n";
  });
  guard("sf_test", [&] {
    const auto sf = stylefacts::shapiro_francia(returns);
    report["sf_statistic"] = sf.statistic;
    report["sf_p_value"] = sf.p_value;
    report["sf_n"] = sf.n_used;
    std::cout << "  Shapiro-Francia: W'=" << sf.statistic << " p=" << sf.p_value
              << " (n=" << sf.n_used << ")\n";
  });
  guard("acf+powerlaw", [&] {
    std::vector<double> abs_values(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) {
      abs_values[i] = std::abs(returns[i]);
    }
    const auto max_lag = static_cast<std::size_t>(acf_max_lag);
    const auto acf_abs = stylefacts::acf(abs_values, max_lag);
    report["acf_abs"] = acf_abs;
    report["acf_signed"] = stylefacts::acf(returns, max_lag);
    const auto fit = stylefacts::power_law_fit(
        acf_abs, 1, std::min<std::size_t>(100, max_lag));
    report["powerlaw_exponent"] = fit.exponent;
    report["powerlaw_r2"] = fit.r2;
    std::cout << "  |return| ACF power law: exponent=" << fit.exponent
              << " r2=" << fit.r2 << " (lags " << fit.lag_lo << ".."
              << fit.lag_hi << ")\n";
  });

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      throw stylefacts::IoError("cannot open '" + report_path +
                                "' for writing");
    }
    out << report.dump(2) << "\n";
  }
  return any_failed ? kExitRuntime : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agent-based market simulator and stylised-facts analyzer"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "simulate a configured market");
  std::string config_path;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  std::string out_flag;
  run->add_option("config", config_path, "config file (key = value lines)")
      ->required();
  auto* seed_opt = run->add_option("--seed", seed, "override the config seed");
  run->add_option("--seeds", seeds,
                  "run several seeds into per-seed subdirectories")
      ->delimiter(',');
  run->add_option("--out", out_flag, "output directory");

  auto* presets = app.add_subcommand("presets", "list built-in presets");

  auto* analyze =
      app.add_subcommand("analyze", "stats on an existing returns CSV");
  std::string returns_path;
  long long acf_max_lag = 200;
  std::string report_path;
  analyze->add_option("returns", returns_path, "returns CSV file")->required();
  analyze->add_option("--acf-max-lag", acf_max_lag, "maximum ACF lag");
  analyze->add_option("--report", report_path, "write report.json here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_command(config_path, seed_opt->count() > 0, seed, seeds,
                         out_flag);
    }
    if (presets->parsed()) {
      for (const auto& name : stylefacts::preset_names()) {
        stylefacts::ModelParams params;
        stylefacts::apply_preset(params, name);
        std::cout << name << ": N1=" << params.n1 << " N5=" << params.n5
                  << " N21=" << params.n21 << " N_T=" << params.n_technical
                  << " N_F=" << params.n_fundamental << "\n";
      }
      return 0;
    }
    if (analyze->parsed()) {
      return analyze_command(returns_path, acf_max_lag, report_path);
    }
  } catch (const stylefacts::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const stylefacts::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
