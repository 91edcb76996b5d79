#pragma once

#include <vector>

#include "stylefacts/params.hpp"

namespace stylefacts {

// Per-tick decomposition of the excess demand.
struct DemandBreakdown {
  int noise = 0;
  int technical = 0;
  int fundamental = 0;
  int total = 0;
  int active_noise = 0;
};

struct SimulationOutput {
  std::vector<double> prices;        // length ticks + 1, prices[0] = S0
  std::vector<double> fundamentals;  // length ticks + 1
  std::vector<DemandBreakdown> demands;  // length ticks, demands[t-1] -> tick t
};

// Multiplicative price impact: (1 + m * demand / n_traders) * prev_price.
double price_update(double prev_price, int demand, int n_traders, double m);

// (price - prev_price) / prev_price.
double proportional_return(double price, double prev_price);

// Runs the full tick loop. At each tick every trader decides on information
// through the previous tick: the fundamental value advances first, noise
// groups act on their return EMAs, technical traders on MACD state through
// the previous price, fundamental traders compare the new fundamental value
// with the previous price. The summed demand sets the new price, then all
// EMAs absorb it. Equal (params, seed) give bit-identical output.
SimulationOutput run_simulation(const ModelParams& params);

}  // namespace stylefacts
