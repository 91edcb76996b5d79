#include "stylefacts/market.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "stylefacts/rng.hpp"
#include "stylefacts/traders.hpp"

namespace stylefacts {

void ModelParams::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("ModelParams: " + msg);
  };
  if (!(m > 0.0 && m < 1.0)) fail("m must satisfy 0 < m < 1");
  if (!(u >= 0.0)) fail("u must be >= 0");
  if (!(a > 0.0)) fail("a must be > 0");
  if (!(b >= 0.0)) fail("b must be >= 0");
  if (!(d > 0.0 && d <= 1.0)) fail("d must satisfy 0 < d <= 1");
  if (l_fast < 1) fail("l_A must be >= 1");
  if (l_slow < 1) fail("l_B must be >= 1");
  if (l_signal < 1) fail("l must be >= 1");
  if (n1 < 0 || n5 < 0 || n21 < 0) fail("noise-trader counts must be >= 0");
  if (n_technical < 0) fail("N_T must be >= 0");
  if (n_fundamental < 0) fail("N_F must be >= 0");
  if (total_traders() < 1) fail("total trader count must be >= 1");
  if (ticks < 1) fail("T must be >= 1");
  if (!(s0 > 0.0)) fail("S0 must be > 0");
  if (!(f0 > 0.0)) fail("f0 must be > 0");
  if (!std::isfinite(mu_f) || !std::isfinite(sigma_f) || sigma_f < 0.0) {
    fail("mu_f must be finite and sigma_f finite and >= 0");
  }
}

double price_update(double prev_price, int demand, int n_traders, double m) {
  if (!(prev_price > 0.0)) {
    throw std::invalid_argument("price_update: prev_price must be > 0");
  }
  if (std::abs(demand) > n_traders) {
    throw std::logic_error("price_update: |demand| exceeds trader count");
  }
  return (1.0 + m * demand / n_traders) * prev_price;
}

double proportional_return(double price, double prev_price) {
  if (!(prev_price > 0.0)) {
    throw std::invalid_argument(
        "proportional_return: prev_price must be > 0");
  }
  return (price - prev_price) / prev_price;
}

SimulationOutput run_simulation(const ModelParams& params) {
  params.validate();

  Rng rng(params.seed);
  const int n_traders = params.total_traders();
  const long long ticks = params.ticks;

  NoiseGroupState groups[3] = {
      {1, params.n1, 0.0}, {5, params.n5, 0.0}, {21, params.n21, 0.0}};
  MacdState macd(params.s0);
  double price = params.s0;
  double fundamental = params.f0;

  SimulationOutput out;
  out.prices.reserve(ticks + 1);
  out.fundamentals.reserve(ticks + 1);
  out.demands.reserve(ticks);
  out.prices.push_back(price);
  out.fundamentals.push_back(fundamental);

  for (long long t = 1; t <= ticks; ++t) {
    // The fundamental shock is drawn in constant mode too, so the draw
    // order (and hence the noise-trader path) matches the varying-f run.
    const double eps = rng.normal();
    if (params.f_mode == FundMode::varying) {
      fundamental = fundamental_value_step(fundamental, params.mu_f,
                                           params.sigma_f, eps);
    }

    DemandBreakdown tick;
    for (const auto& group : groups) {
      const auto [demand, active] = noise_group_demand(group, params, rng);
      tick.noise += demand;
      tick.active_noise += active;
    }
    tick.technical = technical_demand(macd, params.n_technical);
    tick.fundamental =
        fundamental_demand(fundamental, price, params.n_fundamental);
    tick.total = tick.noise + tick.technical + tick.fundamental;

    const double new_price = price_update(price, tick.total, n_traders,
                                          params.m);
    const double ret = proportional_return(new_price, price);
    for (auto& group : groups) {
      group.ema = ema_update(group.ema, ret, group.memory);
    }
    macd.update(new_price, params.l_fast, params.l_slow, params.l_signal);
    price = new_price;

    out.prices.push_back(price);
    out.fundamentals.push_back(fundamental);
    out.demands.push_back(tick);
  }
  return out;
}

}  // namespace stylefacts
