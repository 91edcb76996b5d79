#include "stylefacts/traders.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stylefacts {

namespace {

// logistic(x) = 1/(1+e^{-x}) without evaluating e^{+x} for large x.
double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

double ema_update(double prev, double x, int length) {
  if (length < 1) {
    throw std::invalid_argument("ema_update: length must be >= 1");
  }
  const double w = 2.0 / (length + 1.0);
  return w * x + (1.0 - w) * prev;
}

double omega(double ema_return, double a, double b, double d) {
  // (1 + d e^{-q}) / (1 + e^{-q}) with q = a(|R| - b) rearranges to
  // d + (1-d) logistic(q), which is stable for q of either sign.
  const double q = a * (std::fabs(ema_return) - b);
  return d + (1.0 - d) * logistic(q);
}

int active_noise_count(int group_size, double om) {
  const double scaled = group_size * om;
  // round half away from zero; scaled >= 0 here
  return static_cast<int>(std::llround(scaled));
}

double buy_probability(double ema_return, double u) {
  return logistic(u * ema_return);
}

std::pair<int, int> noise_group_demand(const NoiseGroupState& state,
                                       const ModelParams& params, Rng& rng) {
  const double om = omega(state.ema, params.a, params.b, params.d);
  const int active = active_noise_count(state.count, om);
  const double p_buy = buy_probability(state.ema, params.u);
  int demand = 0;
  for (int i = 0; i < active; ++i) {
    demand += rng.uniform() < p_buy ? 1 : -1;
  }
  return {demand, active};
}

void MacdState::update(double price, int l_fast, int l_slow, int l_signal) {
  fast_ema = ema_update(fast_ema, price, l_fast);
  slow_ema = ema_update(slow_ema, price, l_slow);
  macd = fast_ema - slow_ema;
  signal = ema_update(signal, macd, l_signal);
}

int technical_demand(const MacdState& macd, int n_technical) {
  return n_technical * sgn(macd.macd - macd.signal);
}

double fundamental_value_step(double f_prev, double mu_f, double sigma_f,
                              double eps) {
  if (f_prev <= 0.0) {
    throw std::invalid_argument("fundamental_value_step: f_prev must be > 0");
  }
  double multiplier = 1.0 + mu_f + sigma_f * eps;
  if (multiplier <= 0.0) {
    std::fprintf(stderr,
                 "warning: fundamental step multiplier %g clamped to 1e-6\n",
                 multiplier);
    multiplier = 1e-6;
  }
  return f_prev * multiplier;
}

int fundamental_demand(double fundamental, double price, int n_fundamental) {
  return n_fundamental * sgn(fundamental - price);
}

}  // namespace stylefacts
