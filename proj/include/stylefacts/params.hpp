#pragma once

#include <cstdint>

namespace stylefacts {

enum class FundMode { varying, constant };

// Scalar parameters of one market run: trader counts, the price-impact and
// activation parameters, MACD lengths, the fundamental random walk, and run
// controls. Defaults are the reference parameterization with Trader Set A
// counts (4/4/8 noise traders plus 2 technical and 2 fundamental).
struct ModelParams {
  double m = 0.4;    // price-impact factor, 0 < m < 1
  double u = 5.0;    // herding strength of the buy probability
  double a = 4000.0; // steepness of the activation function
  double b = 0.02;   // half-width of the low-activity band, in return units
  double d = 0.05;   // minimum active fraction of each noise group

  int l_fast = 12;   // MACD fast EMA length
  int l_slow = 26;   // MACD slow EMA length
  int l_signal = 9;  // MACD signal EMA length

  double mu_f = 3e-4;    // fundamental drift per tick
  double sigma_f = 0.025;// fundamental volatility per tick

  int n1 = 4;   // noise traders with memory 1
  int n5 = 4;   // noise traders with memory 5
  int n21 = 8;  // noise traders with memory 21
  int n_technical = 2;
  int n_fundamental = 2;

  long long ticks = 1'000'000;
  double s0 = 100.0;
  double f0 = 100.0;
  FundMode f_mode = FundMode::varying;
  std::uint64_t seed = 1;

  bool operator==(const ModelParams&) const = default;

  int total_traders() const {
    return n1 + n5 + n21 + n_technical + n_fundamental;
  }

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

}  // namespace stylefacts
