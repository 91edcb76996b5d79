#include "stylefacts/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stylefacts {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(trim(part));
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" +
                      value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" +
                      value + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key +
                      "': expected a nonnegative integer, got '" + value +
                      "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"trader_set_A", "trader_set_B"};
}

void apply_preset(ModelParams& params, const std::string& name) {
  // Reference scalar parameters shared by both trader sets.
  params.m = 0.4;
  params.u = 5.0;
  params.a = 4000.0;
  params.b = 0.02;
  params.d = 0.05;
  params.l_fast = 12;
  params.l_slow = 26;
  params.l_signal = 9;
  params.mu_f = 3e-4;
  params.sigma_f = 0.025;
  params.n_technical = 2;
  params.n_fundamental = 2;
  if (name == "trader_set_A") {
    params.n1 = 4;
    params.n5 = 4;
    params.n21 = 8;
  } else if (name == "trader_set_B") {
    params.n1 = 0;
    params.n5 = 0;
    params.n21 = 16;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  bool f0_given = false;
  bool s0_given = false;

  std::stringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const auto hash = raw_line.find('#');
    std::string line =
        trim(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": empty key or value");
    }

    ModelParams& p = config.params;
    if (key == "preset") {
      apply_preset(p, value);
    } else if (key == "m") {
      p.m = parse_double(key, value);
      if (!(p.m > 0.0 && p.m < 1.0)) {
        throw ConfigError("config key 'm': must satisfy 0 < m < 1");
      }
    } else if (key == "u") {
      p.u = parse_double(key, value);
    } else if (key == "a") {
      p.a = parse_double(key, value);
    } else if (key == "b") {
      p.b = parse_double(key, value);
    } else if (key == "d") {
      p.d = parse_double(key, value);
    } else if (key == "l_A") {
      p.l_fast = static_cast<int>(parse_int(key, value));
    } else if (key == "l_B") {
      p.l_slow = static_cast<int>(parse_int(key, value));
    } else if (key == "l") {
      p.l_signal = static_cast<int>(parse_int(key, value));
    } else if (key == "mu_f") {
      p.mu_f = parse_double(key, value);
    } else if (key == "sigma_f") {
      p.sigma_f = parse_double(key, value);
    } else if (key == "N1") {
      p.n1 = static_cast<int>(parse_int(key, value));
    } else if (key == "N5") {
      p.n5 = static_cast<int>(parse_int(key, value));
    } else if (key == "N21") {
      p.n21 = static_cast<int>(parse_int(key, value));
    } else if (key == "N_T") {
      p.n_technical = static_cast<int>(parse_int(key, value));
    } else if (key == "N_F") {
      p.n_fundamental = static_cast<int>(parse_int(key, value));
    } else if (key == "T") {
      p.ticks = parse_int(key, value);
    } else if (key == "S0") {
      p.s0 = parse_double(key, value);
      s0_given = true;
    } else if (key == "f0") {
      p.f0 = parse_double(key, value);
      f0_given = true;
    } else if (key == "f_mode") {
      if (value == "varying") {
        p.f_mode = FundMode::varying;
      } else if (value == "constant") {
        p.f_mode = FundMode::constant;
      } else {
        throw ConfigError("config key 'f_mode': expected varying|constant");
      }
    } else if (key == "seed") {
      p.seed = parse_u64(key, value);
    } else if (key == "warmup") {
      config.warmup = parse_int(key, value);
      if (config.warmup < 0) {
        throw ConfigError("config key 'warmup': must be >= 0");
      }
    } else if (key == "deltas") {
      config.deltas.clear();
      for (const auto& item : split(value, ',')) {
        const long long delta = parse_int(key, item);
        if (delta < 1) throw ConfigError("config key 'deltas': lags must be >= 1");
        config.deltas.push_back(delta);
      }
      if (config.deltas.empty()) {
        throw ConfigError("config key 'deltas': empty list");
      }
    } else if (key == "acf_max_lag") {
      config.acf_max_lag = parse_int(key, value);
      if (config.acf_max_lag < 1) {
        throw ConfigError("config key 'acf_max_lag': must be >= 1");
      }
    } else if (key == "hist_bins") {
      config.hist_bins = parse_int(key, value);
      if (config.hist_bins < 1) {
        throw ConfigError("config key 'hist_bins': must be >= 1");
      }
    } else if (key == "analyses") {
      config.analyses.clear();
      for (const auto& item : split(value, ',')) {
        if (!kAnalysisNames.contains(item)) {
          throw ConfigError("config key 'analyses': unknown analysis '" +
                            item + "'");
        }
        config.analyses.insert(item);
      }
    } else if (key == "out") {
      config.out = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (s0_given && !f0_given) config.params.f0 = config.params.s0;
  try {
    config.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.warmup >= config.params.ticks) {
    throw ConfigError("config key 'warmup': must be < T");
  }
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ExperimentConfig& config,
                             bool include_out) {
  const ModelParams& p = config.params;
  std::ostringstream out;
  out << "m = " << format_double(p.m) << "\n"
      << "u = " << format_double(p.u) << "\n"
      << "a = " << format_double(p.a) << "\n"
      << "b = " << format_double(p.b) << "\n"
      << "d = " << format_double(p.d) << "\n"
      << "l_A = " << p.l_fast << "\n"
      << "l_B = " << p.l_slow << "\n"
      << "l = " << p.l_signal << "\n"
      << "mu_f = " << format_double(p.mu_f) << "\n"
      << "sigma_f = " << format_double(p.sigma_f) << "\n"
      << "N1 = " << p.n1 << "\n"
      << "N5 = " << p.n5 << "\n"
      << "N21 = " << p.n21 << "\n"
      << "N_T = " << p.n_technical << "\n"
      << "N_F = " << p.n_fundamental << "\n"
      << "T = " << p.ticks << "\n"
      << "S0 = " << format_double(p.s0) << "\n"
      << "f0 = " << format_double(p.f0) << "\n"
      << "f_mode = " << (p.f_mode == FundMode::varying ? "varying" : "constant")
      << "\n"
      << "seed = " << p.seed << "\n"
      << "warmup = " << config.warmup << "\n"
      << "acf_max_lag = " << config.acf_max_lag << "\n"
      << "hist_bins = " << config.hist_bins << "\n";
  out << "deltas = ";
  for (std::size_t i = 0; i < config.deltas.size(); ++i) {
    if (i) out << ",";
    out << config.deltas[i];
  }
  out << "\n";
  out << "analyses = ";
  std::size_t i = 0;
  for (const auto& name : config.analyses) {
    if (i++) out << ",";
    out << name;
  }
  out << "\n";
  if (include_out) out << "out = " << config.out << "\n";
  return out.str();
}

}  // namespace stylefacts
