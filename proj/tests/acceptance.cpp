// Acceptance suite: end-to-end checks that the simulated market reproduces
// the stylised facts (leptokurtosis, volatility clustering, aggregational
// Gaussianity), plus determinism, estimator calibration and microstructure
// invariants. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stylefacts/artifacts.hpp"
#include "stylefacts/config.hpp"
#include "stylefacts/market.hpp"
#include "stylefacts/normal.hpp"
#include "stylefacts/rng.hpp"
#include "stylefacts/stats.hpp"
#include "stylefacts/traders.hpp"

using namespace stylefacts;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

constexpr long long kWarmup = 130;

ModelParams preset_params(const std::string& name, std::uint64_t seed,
                          long long sample_ticks) {
  ModelParams params;
  apply_preset(params, name);
  params.seed = seed;
  params.ticks = sample_ticks + kWarmup;  // warm-up excluded from statistics
  return params;
}

std::vector<double> sample_returns(const SimulationOutput& sim) {
  const std::span<const double> prices(sim.prices.data() + kWarmup,
                                       sim.prices.size() - kWarmup);
  return log_returns(prices, 1).values;
}

std::vector<double> abs_values(const std::vector<double>& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::fabs(x[i]);
  return out;
}

// true when acf_abs[k] exceeds the Bartlett band for every lag 1..50
bool clustering_signature(const std::vector<double>& acf_abs, double band) {
  for (std::size_t k = 1; k <= 50; ++k) {
    if (acf_abs[k] <= band) return false;
  }
  return true;
}

void criterion_1_and_2() {
  const long long sample = 100000;
  bool lepto_ok = true;
  bool runtime_ok = true;
  std::ostringstream detail;
  for (const std::string& set : {"trader_set_A", "trader_set_B"}) {
    double min_kurt = 1e300, max_p = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto start = std::chrono::steady_clock::now();
      const auto sim = run_simulation(preset_params(set, seed, sample));
      const auto returns = sample_returns(sim);
      const double kurt = excess_kurtosis(returns);
      const double p = shapiro_francia(returns).p_value;
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      if (secs >= 5.0) runtime_ok = false;
      if (kurt <= 1.0 || p >= 0.001) lepto_ok = false;
      min_kurt = std::min(min_kurt, kurt);
      max_p = std::max(max_p, p);
    }
    detail << set << ": min kurtosis " << min_kurt << ", max SF p " << max_p
           << "; ";
  }
  report(1, "leptokurtosis (SF p < 0.001, kurtosis > 1, 10 seeds)",
         lepto_ok && runtime_ok,
         detail.str() + (runtime_ok ? "runtime < 5 s/run" : "RUNTIME EXCEEDED"));

  bool gauss_ok = true;
  std::ostringstream detail2;
  for (const std::string& set : {"trader_set_A", "trader_set_B"}) {
    int rejections_1pct = 0;
    double worst_kurt = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ModelParams params = preset_params(set, seed, sample);
      params.d = 1.0;  // all noise traders always active
      const auto returns = sample_returns(run_simulation(params));
      const double kurt = excess_kurtosis(returns);
      if (std::fabs(kurt) > std::fabs(worst_kurt)) worst_kurt = kurt;
      if (std::fabs(kurt) > 0.5) gauss_ok = false;
      if (shapiro_francia(returns).p_value < 0.01) ++rejections_1pct;
    }
    if (rejections_1pct > 2) gauss_ok = false;
    detail2 << set << ": worst kurtosis " << worst_kurt << ", SF rejections "
            << rejections_1pct << "/10; ";
  }
  report(2, "d=1 control is Gaussian (|kurtosis| <= 0.5, SF 1% rate <= 2/10)",
         gauss_ok, detail2.str());
}

void criterion_3_and_4() {
  const long long sample = 1000000;
  const double band = 2.0 / std::sqrt(static_cast<double>(sample));

  bool acf_ok = true;
  bool fit_ok = true;
  std::ostringstream detail;
  for (const std::string& set : {"trader_set_A", "trader_set_B"}) {
    int good_fits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto returns =
          sample_returns(run_simulation(preset_params(set, seed, sample)));
      const auto acf_abs = acf(abs_values(returns), 100);
      if (!clustering_signature(acf_abs, band)) acf_ok = false;
      try {
        const auto fit = power_law_fit(acf_abs, 1, 100);
        if (fit.exponent < 0.0 && fit.r2 >= 0.8) ++good_fits;
      } catch (const std::exception&) {
        // no usable fit counts against the seed
      }
    }
    if (good_fits < 8) fit_ok = false;
    detail << set << ": power-law fits " << good_fits << "/10; ";
  }

  // control: a noise-only market must not show the clustering signature
  bool control_ok = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ModelParams params = preset_params("trader_set_A", seed, sample);
    params.n_technical = 0;
    params.n_fundamental = 0;
    const auto returns = sample_returns(run_simulation(params));
    try {
      const auto acf_abs = acf(abs_values(returns), 100);
      int inside = 0;
      for (std::size_t k = 1; k <= 100; ++k) {
        if (std::fabs(acf_abs[k]) <= band) ++inside;
      }
      if (inside < 90) control_ok = false;
    } catch (const std::domain_error&) {
      // with so few noise traders the market can freeze entirely; a
      // constant price certainly has no volatility clustering
    }
  }
  detail << (control_ok ? "noise-only control flat" : "CONTROL CLUSTERED");
  report(3,
         "volatility clustering (acf_abs above band to lag 50, power-law fit)",
         acf_ok && fit_ok && control_ok, detail.str());

  // necessity of both ingredients: each reduced market loses the signature
  bool necessity_ok = true;
  std::ostringstream detail4;
  for (int variant = 0; variant < 2; ++variant) {
    int without_signature = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      ModelParams params = preset_params("trader_set_A", seed, sample);
      if (variant == 0) {
        params.n_technical = 0;  // no chartists
      } else {
        params.n1 = 16;  // memoryless noise traders only
        params.n5 = 0;
        params.n21 = 0;
      }
      const auto returns = sample_returns(run_simulation(params));
      try {
        const auto acf_abs = acf(abs_values(returns), 100);
        if (!clustering_signature(acf_abs, band)) ++without_signature;
      } catch (const std::domain_error&) {
        ++without_signature;  // frozen market, trivially no clustering
      }
    }
    detail4 << (variant == 0 ? "no technical: " : "memoryless noise: ")
            << without_signature << "/3 without signature; ";
    if (without_signature < 3) necessity_ok = false;
  }
  report(4, "memory and chartists both necessary for clustering",
         necessity_ok, detail4.str());
}

void criterion_5() {
  const long long sample = 10000000;
  // delta = 100000 is informational: the Gaussian limit is reached there
  const std::vector<std::size_t> deltas = {1, 100, 1000, 10000, 100000};
  const auto start = std::chrono::steady_clock::now();

  ModelParams varying = preset_params("trader_set_B", 1, sample);
  const auto sim_varying = run_simulation(varying);
  const std::span<const double> prices_v(sim_varying.prices.data() + kWarmup,
                                         sim_varying.prices.size() - kWarmup);
  const auto table_v = kurtosis_by_delta(prices_v, deltas);

  bool decreasing = true;
  for (std::size_t i = 1; i <= 3; ++i) {  // graded lags: 1, 100, 1000, 10000
    if (!(table_v[i].second < table_v[i - 1].second)) decreasing = false;
  }
  const double kurt_at_1e4 = table_v[3].second;

  ModelParams constant = varying;
  constant.f_mode = FundMode::constant;
  const auto sim_constant = run_simulation(constant);
  const std::span<const double> prices_c(sim_constant.prices.data() + kWarmup,
                                         sim_constant.prices.size() - kWarmup);
  const auto table_c = kurtosis_by_delta(prices_c, deltas);
  const double const_kurt_at_1e4 = table_c[3].second;

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::ostringstream detail;
  detail << "varying f kurtosis:";
  for (const auto& [delta, kurt] : table_v) detail << " d" << delta << "=" << kurt;
  detail << "; constant f d10000=" << const_kurt_at_1e4 << "; " << secs << " s";

  const bool ok = decreasing && kurt_at_1e4 < 0.5 && const_kurt_at_1e4 > 1.0 &&
                  secs < 600.0;
  report(5, "aggregational Gaussianity under varying f only", ok, detail.str());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_6() {
  ExperimentConfig config;
  config.params.ticks = 5000;
  config.params.seed = 3;
  config.deltas = {1, 10};
  config.acf_max_lag = 100;

  const fs::path base = fs::temp_directory_path() / "stylefacts_acceptance";
  fs::remove_all(base);
  bool ok = true;
  run_experiment(config, base / "a");
  run_experiment(config, base / "b");
  int files = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    const auto name = entry.path().filename();
    if (slurp(base / "a" / name) != slurp(base / "b" / name)) ok = false;
    ++files;
  }
  if (files == 0) ok = false;
  fs::remove_all(base);
  report(6, "byte-identical artifacts for equal config and seed", ok,
         std::to_string(files) + " files compared");
}

void criterion_7() {
  std::ostringstream detail;

  // SF calibration at the 0.1% level: 1000 normal samples of n = 5000
  int rejections = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    Rng rng(50000 + rep);
    std::vector<double> draws(5000);
    for (auto& v : draws) v = rng.normal();
    if (shapiro_francia(draws).p_value < 0.001) ++rejections;
  }
  const double rate = rejections / 1000.0;
  const bool sf_ok = rate >= 0.0 && rate <= 0.003;  // 0.001 +/- 0.002
  detail << "SF 0.1% rate " << rate;

  // kurtosis estimator on a million normal draws
  Rng rng(424242);
  std::vector<double> normal_draws(1000000);
  for (auto& v : normal_draws) v = rng.normal();
  const double kurt = excess_kurtosis(normal_draws);
  const bool kurt_ok = std::fabs(kurt) < 0.05;
  detail << "; normal kurtosis " << kurt;

  // ACF of AR(1) with coefficient 0.5
  std::vector<double> ar(1000000);
  ar[0] = 0.0;
  for (std::size_t i = 1; i < ar.size(); ++i) {
    ar[i] = 0.5 * ar[i - 1] + rng.normal();
  }
  const auto ar_acf = acf(ar, 10);
  bool ar_ok = true;
  for (std::size_t k = 1; k <= 10; ++k) {
    if (std::fabs(ar_acf[k] - std::pow(0.5, double(k))) >= 0.01) ar_ok = false;
  }
  detail << "; AR(1) acf[1] " << ar_acf[1];

  // power-law fit recovers planted exponents
  bool fit_ok = true;
  for (double exponent : {-0.1, -0.3, -0.7, -1.5}) {
    std::vector<double> values(101);
    for (std::size_t k = 1; k <= 100; ++k) {
      values[k] = std::pow(static_cast<double>(k), exponent);
    }
    const auto fit = power_law_fit(values, 1, 100);
    if (std::fabs(fit.exponent - exponent) >= 1e-9 ||
        std::fabs(fit.r2 - 1.0) >= 1e-9) {
      fit_ok = false;
    }
  }
  detail << "; planted exponents recovered: " << (fit_ok ? "yes" : "no");

  report(7, "statistics self-calibration oracles",
         sf_ok && kurt_ok && ar_ok && fit_ok, detail.str());
}

void criterion_8() {
  bool ok = true;
  std::ostringstream detail;

  ModelParams params = preset_params("trader_set_A", 11, 20000);
  const auto sim = run_simulation(params);
  const int n = params.total_traders();
  for (std::size_t t = 1; t < sim.prices.size(); ++t) {
    if (!(sim.prices[t] > 0.0)) ok = false;
    const double reconstructed =
        (1.0 + params.m * sim.demands[t - 1].total / n) * sim.prices[t - 1];
    if (sim.prices[t] != reconstructed) ok = false;
  }
  detail << "positivity+reconstruction over " << sim.demands.size()
         << " ticks";

  // omega / buy-probability symmetry and bounds
  for (int i = -400; i <= 400; ++i) {
    const double r = 0.0005 * i;
    const double om = omega(r, params.a, params.b, params.d);
    if (om != omega(-r, params.a, params.b, params.d)) ok = false;
    if (om < params.d || om > 1.0) ok = false;
    const double p = buy_probability(r, params.u);
    const double q = buy_probability(-r, params.u);
    if (std::fabs(p + q - 1.0) > 1e-14) ok = false;
    if (!(p > 0.0 && p < 1.0)) ok = false;
  }

  // EMA contraction and fixed point
  double ema = 5.0;
  double gap = std::fabs(ema - 1.0);
  for (int i = 0; i < 100; ++i) {
    ema = ema_update(ema, 1.0, 21);
    const double next_gap = std::fabs(ema - 1.0);
    if (next_gap > gap) ok = false;
    gap = next_gap;
  }

  // equal-length MACD EMAs never fire
  MacdState macd(100.0);
  Rng rng(8);
  double price = 100.0;
  for (int t = 0; t < 1000; ++t) {
    price *= 1.0 + 0.04 * (rng.uniform() - 0.5);
    macd.update(price, 15, 15, 9);
    if (technical_demand(macd, 5) != 0) ok = false;
  }
  detail << "; omega/P bounds, EMA contraction, flat MACD checked";

  report(8, "microstructure invariants", ok, detail.str());
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1_and_2();
  criterion_3_and_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%s: %d criterion failure(s), %.1f s total\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures, secs);
  return g_failures == 0 ? 0 : 1;
}
