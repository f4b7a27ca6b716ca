#include "hilbertmix/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmx {

LineFit least_squares_slope(const std::vector<double>& x,
                            const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_slope: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw std::invalid_argument("least_squares_slope: degenerate abscissae");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("sample_variance: need n >= 2");
  const double m = mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double standard_error(const std::vector<double>& v) {
  return std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("correlation: need equal samples of size >= 2");
  const double mx = mean(x), my = mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("correlation: constant sample");
  return sxy / std::sqrt(sxx * syy);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

/// Kolmogorov tail sum Q(t) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 t^2).
double kolmogorov_tail(double t) {
  if (t < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 128; ++j) {
    const double term = std::exp(-2.0 * j * j * t * t);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KsResult ks_test_standard_normal(std::vector<double> sample) {
  if (sample.empty())
    throw std::invalid_argument("ks_test: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = normal_cdf(sample[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::abs(cdf - lo), std::abs(hi - cdf)));
  }
  const double root = std::sqrt(n);
  KsResult r;
  r.statistic = d;
  r.p_value = kolmogorov_tail((root + 0.12 + 0.11 / root) * d);
  return r;
}

}  // namespace hmx
