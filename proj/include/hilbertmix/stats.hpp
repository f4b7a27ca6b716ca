#pragma once

#include <cstddef>
#include <vector>

/// Scalar statistics used by the verification suites: ordinary least squares,
/// moments, the standard normal CDF and the one-sample Kolmogorov-Smirnov
/// test against it.

namespace hmx {

struct LineFit {
  double slope = 0;
  double intercept = 0;
};

LineFit least_squares_slope(const std::vector<double>& x,
                            const std::vector<double>& y);

double mean(const std::vector<double>& v);
/// Unbiased sample variance (n-1 denominator).
double sample_variance(const std::vector<double>& v);
/// Standard error of the sample mean.
double standard_error(const std::vector<double>& v);

/// Pearson correlation of two equally sized samples.
double correlation(const std::vector<double>& x, const std::vector<double>& y);

double normal_cdf(double x);

struct KsResult {
  double statistic = 0;
  double p_value = 0;
};

/// One-sample KS test of the data against N(0,1); asymptotic p-value with the
/// small-sample correction factor sqrt(n) + 0.12 + 0.11/sqrt(n).
KsResult ks_test_standard_normal(std::vector<double> sample);

}  // namespace hmx
