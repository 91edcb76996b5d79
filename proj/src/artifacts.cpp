#include "stylefacts/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stylefacts/market.hpp"

namespace stylefacts {

namespace {

void append_value(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

void emit_csv(const std::filesystem::path& path,
              std::span<const std::string> header,
              const std::vector<std::vector<double>>& columns) {
  if (columns.size() != header.size()) {
    throw std::invalid_argument("emit_csv: header/column arity mismatch");
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != rows) {
      throw std::invalid_argument("emit_csv: ragged columns");
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  std::string line;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) line += ',';
    line += header[c];
  }
  line += '\n';
  out << line;
  for (std::size_t r = 0; r < rows; ++r) {
    line.clear();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) line += ',';
      append_value(line, columns[c][r]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

RunArtifacts run_experiment(const ExperimentConfig& config,
                            const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + out_dir.string() +
                  "': " + ec.message());
  }

  const SimulationOutput sim = run_simulation(config.params);
  RunArtifacts artifacts;
  nlohmann::json& report = artifacts.report;

  auto add_file = [&](const std::filesystem::path& p) {
    artifacts.files.push_back(p);
  };

  // full series, including warm-up
  {
    const std::size_t rows = sim.prices.size();
    std::vector<std::vector<double>> cols(7, std::vector<double>(rows));
    for (std::size_t t = 0; t < rows; ++t) {
      cols[0][t] = static_cast<double>(t);
      cols[1][t] = sim.prices[t];
      cols[2][t] = sim.fundamentals[t];
      const DemandBreakdown dem =
          t == 0 ? DemandBreakdown{} : sim.demands[t - 1];
      cols[3][t] = dem.noise;
      cols[4][t] = dem.technical;
      cols[5][t] = dem.fundamental;
      cols[6][t] = dem.active_noise;
    }
    const std::vector<std::string> header = {
        "tick",        "price",       "fundamental", "demand_noise",
        "demand_tech", "demand_fund", "active_noise"};
    const auto path = out_dir / "prices.csv";
    emit_csv(path, header, cols);
    add_file(path);
  }

  // statistics exclude the warm-up ticks
  const std::span<const double> prices(sim.prices.data() + config.warmup,
                                       sim.prices.size() - config.warmup);

  auto run_analysis = [&](const std::string& name, auto&& body) {
    if (!config.analyses.contains(name)) return;
    try {
      body();
    } catch (const std::exception& e) {
      artifacts.analysis_errors.push_back(name + ": " + e.what());
    }
  };

  for (long long delta : config.deltas) {
    try {
      const auto series = log_returns(prices, static_cast<std::size_t>(delta));
      const std::vector<std::string> header = {"t", "log_return"};
      std::vector<std::vector<double>> cols(2);
      cols[0].resize(series.values.size());
      for (std::size_t i = 0; i < series.values.size(); ++i) {
        cols[0][i] = static_cast<double>(i);
      }
      cols[1] = series.values;
      const auto path =
          out_dir / ("returns_d" + std::to_string(delta) + ".csv");
      emit_csv(path, header, cols);
      add_file(path);
    } catch (const std::exception& e) {
      artifacts.analysis_errors.push_back("returns_d" + std::to_string(delta) +
                                          ": " + e.what());
    }
  }

  ReturnSeries base_returns;
  try {
    base_returns = log_returns(prices, 1);
  } catch (const std::exception& e) {
    artifacts.analysis_errors.push_back(std::string("log_returns: ") +
                                        e.what());
  }

  run_analysis("kurtosis", [&] {
    report["excess_kurtosis"] = excess_kurtosis(base_returns.values);
  });

  run_analysis("sf_test", [&] {
    const SfResult sf = shapiro_francia(base_returns.values);
    report["sf_statistic"] = sf.statistic;
    report["sf_p_value"] = sf.p_value;
    report["sf_n"] = sf.n_used;
  });

  std::vector<double> acf_abs;
  run_analysis("acf", [&] {
    const auto max_lag = static_cast<std::size_t>(config.acf_max_lag);
    const auto signed_acf = acf(base_returns.values, max_lag);
    std::vector<double> abs_values(base_returns.values.size());
    for (std::size_t i = 0; i < abs_values.size(); ++i) {
      abs_values[i] = std::abs(base_returns.values[i]);
    }
    acf_abs = acf(abs_values, max_lag);
    report["acf_signed"] = signed_acf;
    report["acf_abs"] = acf_abs;

    const std::vector<std::string> header = {"lag", "acf_signed", "acf_abs"};
    std::vector<std::vector<double>> cols(3);
    cols[0].resize(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) cols[0][k] = static_cast<double>(k);
    cols[1] = signed_acf;
    cols[2] = acf_abs;
    const auto path = out_dir / "acf.csv";
    emit_csv(path, header, cols);
    add_file(path);
  });

  run_analysis("powerlaw", [&] {
    if (acf_abs.empty()) {
      throw std::runtime_error("requires the acf analysis");
    }
    const std::size_t hi =
        std::min<std::size_t>(100, acf_abs.size() - 1);
    const PowerLawFit fit = power_law_fit(acf_abs, 1, hi);
    report["powerlaw_exponent"] = fit.exponent;
    report["powerlaw_r2"] = fit.r2;
    report["powerlaw_lag_lo"] = fit.lag_lo;
    report["powerlaw_lag_hi"] = fit.lag_hi;
  });

  run_analysis("agg_gaussianity", [&] {
    std::vector<std::size_t> deltas(config.deltas.begin(),
                                    config.deltas.end());
    const auto table = kurtosis_by_delta(prices, deltas);
    nlohmann::json entry = nlohmann::json::object();
    for (const auto& [delta, kurt] : table) {
      entry[std::to_string(delta)] = kurt;
    }
    report["kurtosis_by_delta"] = entry;

    for (std::size_t delta : deltas) {
      const auto normalized = normalize(log_returns(prices, delta));
      const auto bins = histogram_density(
          normalized.values, static_cast<std::size_t>(config.hist_bins));
      const std::vector<std::string> header = {"bin_center", "density"};
      std::vector<std::vector<double>> cols(2);
      for (const auto& bin : bins) {
        cols[0].push_back(bin.center);
        cols[1].push_back(bin.density);
      }
      const auto path =
          out_dir / ("hist_d" + std::to_string(delta) + ".csv");
      emit_csv(path, header, cols);
      add_file(path);
    }
  });

  {
    const auto path = out_dir / "report.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << report.dump(2) << "\n";
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    add_file(path);
  }

  {
    const auto path = out_dir / "manifest.txt";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << "# stylefacts " << kVersion << "\n"
        << serialize_config(config, /*include_out=*/false);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    add_file(path);
  }

  std::ostringstream summary;
  summary << "run: T=" << config.params.ticks << " seed=" << config.params.seed
          << " warmup=" << config.warmup << " N=" << config.params.total_traders()
          << "\n";
  if (report.contains("excess_kurtosis")) {
    summary << "  excess kurtosis (lag 1): " << report["excess_kurtosis"].get<double>()
            << "\n";
  }
  if (report.contains("sf_p_value")) {
    summary << "  Shapiro-Francia: W'=" << report["sf_statistic"].get<double>()
            << " p=" << report["sf_p_value"].get<double>()
            << " (n=" << report["sf_n"].get<std::size_t>() << ")\n";
  }
  if (report.contains("powerlaw_exponent")) {
    summary << "  |return| ACF power law: exponent="
            << report["powerlaw_exponent"].get<double>()
            << " r2=" << report["powerlaw_r2"].get<double>() << " (lags "
            << report["powerlaw_lag_lo"].get<std::size_t>() << ".."
            << report["powerlaw_lag_hi"].get<std::size_t>() << ")\n";
  }
  if (report.contains("kurtosis_by_delta")) {
    summary << "  excess kurtosis by lag:\n";
    for (const auto& [delta, kurt] : report["kurtosis_by_delta"].items()) {
      summary << "    delta=" << delta << ": " << kurt.get<double>() << "\n";
    }
  }
  for (const auto& err : artifacts.analysis_errors) {
    summary << "  FAILED " << err << "\n";
  }
  artifacts.summary = summary.str();
  return artifacts;
}

}  // namespace stylefacts
