#include "stylefacts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stylefacts/normal.hpp"
#include "stylefacts/rng.hpp"

namespace stylefacts {

namespace {

double sample_mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / x.size();
}

}  // namespace

ReturnSeries log_returns(std::span<const double> prices, std::size_t delta) {
  if (delta < 1) throw std::invalid_argument("log_returns: delta must be >= 1");
  if (prices.size() <= delta) {
    throw std::invalid_argument("log_returns: need more prices than delta");
  }
  ReturnSeries series;
  series.delta = delta;
  series.source_len = prices.size();
  series.values.resize(prices.size() - delta);
  std::vector<double> logs(prices.size());
  for (std::size_t i = 0; i < prices.size(); ++i) {
    if (!(prices[i] > 0.0)) {
      throw std::invalid_argument("log_returns: prices must be > 0");
    }
    logs[i] = std::log(prices[i]);
  }
  for (std::size_t i = 0; i + delta < prices.size(); ++i) {
    series.values[i] = logs[i + delta] - logs[i];
  }
  return series;
}

std::vector<double> normalize(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("normalize: need at least two points");
  }
  const double mean = sample_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (values.size() - 1));
  if (!(sd > 0.0)) throw std::domain_error("normalize: zero variance");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - mean) / sd;
  }
  return out;
}

ReturnSeries normalize(const ReturnSeries& series) {
  ReturnSeries out = series;
  out.values = normalize(std::span<const double>(series.values));
  out.normalized = true;
  return out;
}

double excess_kurtosis(std::span<const double> values) {
  if (values.size() < 4) {
    throw std::invalid_argument("excess_kurtosis: need at least four points");
  }
  const double mean = sample_mean(values);
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double c = v - mean;
    const double c2 = c * c;
    m2 += c2;
    m4 += c2 * c2;
  }
  m2 /= values.size();
  m4 /= values.size();
  if (!(m2 > 0.0)) throw std::domain_error("excess_kurtosis: zero variance");
  return m4 / (m2 * m2) - 3.0;
}

SfResult shapiro_francia(std::span<const double> values,
                         std::uint64_t subsample_seed) {
  constexpr std::size_t kMaxN = 5000;
  if (values.size() < 5) {
    throw std::invalid_argument("shapiro_francia: need at least five points");
  }
  std::vector<double> x;
  if (values.size() > kMaxN) {
    const std::size_t stride = values.size() / kMaxN;
    Rng rng(subsample_seed);
    const std::size_t offset = rng.next_u64() % stride;
    x.reserve(kMaxN);
    for (std::size_t i = 0; i < kMaxN; ++i) x.push_back(values[offset + i * stride]);
  } else {
    x.assign(values.begin(), values.end());
  }
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();

  std::vector<double> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = normal_quantile((i + 1 - 0.375) / (n + 0.25));
  }

  const double mx = sample_mean(x);
  // scores are antisymmetric, mean 0
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cx = x[i] - mx;
    sxy += cx * scores[i];
    sxx += cx * cx;
    syy += scores[i] * scores[i];
  }
  if (!(sxx > 0.0)) throw std::domain_error("shapiro_francia: zero variance");

  SfResult result;
  result.n_used = n;
  result.statistic = (sxy * sxy) / (sxx * syy);

  // Royston (1993) approximation: ln(1 - W') is approximately normal.
  const double log_n = std::log(static_cast<double>(n));
  const double log_log_n = std::log(log_n);
  const double mu = -1.2725 + 1.0521 * (log_log_n - log_n);
  const double sigma = 1.0308 - 0.26758 * (log_log_n + 2.0 / log_n);
  const double one_minus_w = std::max(1.0 - result.statistic, 1e-300);
  const double z = (std::log(one_minus_w) - mu) / sigma;
  result.p_value = 1.0 - normal_cdf(z);
  return result;
}

std::vector<double> acf(std::span<const double> values, std::size_t max_lag) {
  if (values.size() < 2 || max_lag >= values.size() / 2) {
    throw std::invalid_argument("acf: require max_lag < n/2");
  }
  const std::size_t n = values.size();
  const double mean = sample_mean(values);
  std::vector<double> centered(n);
  for (std::size_t i = 0; i < n; ++i) centered[i] = values[i] - mean;
  double c0 = 0.0;
  for (double c : centered) c0 += c * c;
  c0 /= n;
  if (!(c0 > 0.0)) throw std::domain_error("acf: zero variance");

  std::vector<double> result(max_lag + 1);
  result[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double ck = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) ck += centered[i] * centered[i + k];
    ck /= n;
    result[k] = ck / c0;
  }
  return result;
}

PowerLawFit power_law_fit(std::span<const double> acf_values,
                          std::size_t lag_lo, std::size_t lag_hi) {
  if (lag_lo < 1 || lag_hi < lag_lo || lag_hi >= acf_values.size()) {
    throw std::invalid_argument("power_law_fit: bad lag range");
  }
  // longest contiguous run of positive values inside [lag_lo, lag_hi]
  std::size_t best_lo = 0, best_hi = 0, run_lo = 0;
  bool in_run = false;
  for (std::size_t k = lag_lo; k <= lag_hi; ++k) {
    if (acf_values[k] > 0.0) {
      if (!in_run) {
        run_lo = k;
        in_run = true;
      }
      if (k - run_lo >= best_hi - best_lo || best_hi == 0) {
        best_lo = run_lo;
        best_hi = k;
      }
    } else {
      in_run = false;
    }
  }
  if (best_hi == 0 || best_hi - best_lo + 1 < 3) {
    throw std::runtime_error(
        "power_law_fit: fewer than three positive ACF values in range");
  }

  const std::size_t count = best_hi - best_lo + 1;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = best_lo; k <= best_hi; ++k) {
    const double lx = std::log(static_cast<double>(k));
    const double ly = std::log(acf_values[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double n = static_cast<double>(count);
  const double cov = sxy - sx * sy / n;
  const double var_x = sxx - sx * sx / n;
  const double var_y = syy - sy * sy / n;

  PowerLawFit fit;
  fit.lag_lo = best_lo;
  fit.lag_hi = best_hi;
  fit.exponent = cov / var_x;
  fit.r2 = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
  return fit;
}

std::vector<std::pair<std::size_t, double>> kurtosis_by_delta(
    std::span<const double> prices, std::span<const std::size_t> deltas) {
  for (std::size_t delta : deltas) {
    if (delta * 10 >= prices.size()) {
      throw std::invalid_argument(
          "kurtosis_by_delta: max delta must be < length/10");
    }
  }
  std::vector<double> logs(prices.size());
  for (std::size_t i = 0; i < prices.size(); ++i) {
    if (!(prices[i] > 0.0)) {
      throw std::invalid_argument("kurtosis_by_delta: prices must be > 0");
    }
    logs[i] = std::log(prices[i]);
  }
  std::vector<std::pair<std::size_t, double>> table;
  table.reserve(deltas.size());
  std::vector<double> returns;
  for (std::size_t delta : deltas) {
    returns.resize(prices.size() - delta);
    for (std::size_t i = 0; i + delta < prices.size(); ++i) {
      returns[i] = logs[i + delta] - logs[i];
    }
    table.emplace_back(delta, excess_kurtosis(returns));
  }
  return table;
}

std::vector<HistogramBin> histogram_density(std::span<const double> values,
                                            std::size_t bin_count) {
  if (bin_count < 1 || values.size() < bin_count) {
    throw std::invalid_argument(
        "histogram_density: need at least bin_count points");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) {
    throw std::domain_error("histogram_density: degenerate range");
  }
  const double width = (hi - lo) / bin_count;
  std::vector<std::size_t> counts(bin_count, 0);
  for (double v : values) {
    auto bin = static_cast<std::size_t>((v - lo) / width);
    if (bin >= bin_count) bin = bin_count - 1;  // v == hi
    ++counts[bin];
  }
  std::vector<HistogramBin> bins(bin_count);
  const double norm = 1.0 / (width * values.size());
  for (std::size_t i = 0; i < bin_count; ++i) {
    bins[i].center = lo + (i + 0.5) * width;
    bins[i].density = counts[i] * norm;
  }
  return bins;
}

}  // namespace stylefacts
