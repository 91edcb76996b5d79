#pragma once

namespace stylefacts {

// Standard normal density, CDF and quantile. The quantile uses a rational
// initial guess (Abramowitz & Stegun 26.2.22) refined by Halley steps on the
// erfc-based CDF, accurate to machine precision except in the extreme tails
// where the density underflows.
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

}  // namespace stylefacts
