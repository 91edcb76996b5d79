#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stylefacts {

// Log returns at one lag, with overlapping (stride-1) windows.
struct ReturnSeries {
  std::vector<double> values;
  std::size_t delta = 1;
  bool normalized = false;
  std::size_t source_len = 0;
};

// values[i] = log(prices[i+delta]) - log(prices[i]). Requires positive
// prices and delta < prices.size().
ReturnSeries log_returns(std::span<const double> prices, std::size_t delta);

// Standardizes to sample mean 0 and sample standard deviation 1 (n-1
// denominator). Throws on fewer than two points or zero variance.
std::vector<double> normalize(std::span<const double> values);
ReturnSeries normalize(const ReturnSeries& series);

// m4 / m2^2 - 3 with central sample moments.
double excess_kurtosis(std::span<const double> values);

struct SfResult {
  double statistic = 0.0;  // W', squared correlation with normal scores
  double p_value = 1.0;
  std::size_t n_used = 0;
};

// Shapiro-Francia normality test. W' is the squared correlation between the
// sorted sample and normal order-statistic scores at (i - 3/8)/(n + 1/4);
// the p-value uses Royston's normal approximation for ln(1 - W'), valid for
// 5 <= n <= 5000. Larger samples are reduced to 5000 points by a uniform
// stride whose offset is drawn from subsample_seed.
SfResult shapiro_francia(std::span<const double> values,
                         std::uint64_t subsample_seed = 20260823);

// Autocorrelation with the biased (length-normalized) covariance estimator;
// result[0] == 1 and |result[k]| <= 1. Requires max_lag < n/2.
std::vector<double> acf(std::span<const double> values, std::size_t max_lag);

struct PowerLawFit {
  double exponent = 0.0;  // slope of log acf vs log lag
  double r2 = 0.0;
  std::size_t lag_lo = 0;  // range actually used
  std::size_t lag_hi = 0;
};

// Least-squares line through (log k, log acf[k]) for k in [lag_lo, lag_hi].
// Nonpositive ACF values truncate the range to the longest contiguous
// positive run instead of failing; fewer than three usable points throws.
PowerLawFit power_law_fit(std::span<const double> acf_values,
                          std::size_t lag_lo, std::size_t lag_hi);

// Excess kurtosis of log returns at each requested lag.
std::vector<std::pair<std::size_t, double>> kurtosis_by_delta(
    std::span<const double> prices, std::span<const std::size_t> deltas);

struct HistogramBin {
  double center = 0.0;
  double density = 0.0;
};

// Equal-width bins over [min, max]; densities integrate to 1.
std::vector<HistogramBin> histogram_density(std::span<const double> values,
                                            std::size_t bin_count);

}  // namespace stylefacts
