#pragma once

#include <cstdint>
#include <random>

#include "stylefacts/normal.hpp"

namespace stylefacts {

// Deterministic random source for a single simulation run. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard, so equal
// seeds give equal draw sequences on every platform. Normal variates use the
// inverse-CDF method: exactly one uniform is consumed per draw, which keeps
// the draw order frozen regardless of how results are used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(uniform()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stylefacts
