#include "stylefacts/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace stylefacts {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  }
  const double q = p < 0.5 ? p : 1.0 - p;
  const double t = std::sqrt(-2.0 * std::log(q));
  double x = t - (2.30753 + 0.27061 * t) / (1.0 + t * (0.99229 + 0.04481 * t));
  if (p < 0.5) x = -x;
  for (int i = 0; i < 3; ++i) {
    const double density = normal_pdf(x);
    if (density <= 0.0) break;  // deep tail, keep the rational estimate
    const double err = normal_cdf(x) - p;
    const double step = err / density;
    x -= step / (1.0 + 0.5 * x * step);
  }
  return x;
}

}  // namespace stylefacts
