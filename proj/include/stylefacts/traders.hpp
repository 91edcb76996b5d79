#pragma once

#include <utility>

#include "stylefacts/params.hpp"
#include "stylefacts/rng.hpp"

namespace stylefacts {

inline int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// EMA recurrence w*x + (1-w)*prev with w = 2/(length+1). length >= 1.
double ema_update(double prev, double x, int length);

// Fraction of a noise group that trades after observing the remembered
// return ema_return. Equals d + (1-d) * logistic(a * (|ema_return| - b)),
// evaluated without forming e^{+large}.
double omega(double ema_return, double a, double b, double d);

// Nearest integer to group_size * om, half away from zero.
int active_noise_count(int group_size, double om);

// Logistic buy probability 1 / (1 + e^{-u * ema_return}).
double buy_probability(double ema_return, double u);

// One noise-trader pool: every member remembers returns through the same EMA.
struct NoiseGroupState {
  int memory = 1;  // EMA length n
  int count = 0;   // group size N_n
  double ema = 0.0;
};

// Two-stage group decision: the active count from omega, then one
// independent buy/sell draw per active trader. Returns (demand, active).
// Consumes exactly `active` uniforms from rng.
std::pair<int, int> noise_group_demand(const NoiseGroupState& state,
                                       const ModelParams& params, Rng& rng);

// MACD crossover state: fast/slow price EMAs, their difference, and the
// signal line. Starts flat at the initial price so the first signal is zero.
struct MacdState {
  double fast_ema;
  double slow_ema;
  double macd;    // fast_ema - slow_ema
  double signal;  // EMA of macd

  explicit MacdState(double initial_price)
      : fast_ema(initial_price), slow_ema(initial_price), macd(0.0),
        signal(0.0) {}

  void update(double price, int l_fast, int l_slow, int l_signal);
};

// All technical traders act as one block on the crossover sign.
int technical_demand(const MacdState& macd, int n_technical);

// Multiplicative random-walk step f * (1 + mu + sigma * eps). If the
// multiplier is ever nonpositive (requires |eps| ~ 40 sigma) it is clamped
// to 1e-6 and a warning is logged, preserving f > 0.
double fundamental_value_step(double f_prev, double mu_f, double sigma_f,
                              double eps);

int fundamental_demand(double fundamental, double price, int n_fundamental);

}  // namespace stylefacts
