#pragma once

#include <string>
#include <vector>

/// Empirical quantile functions of norm samples and the quantile-product
/// covariance bound for dependent pairs, plus the exponential decay envelope
/// used for cross-covariance shape checks.

namespace hmx {

/// Right-continuous step quantile of an empirical law:
/// Q(u) = smallest sample value t with #(x > t)/N <= u. For u below 1/N this
/// is the sample maximum; at u >= 1 it is the sample minimum.
class QuantileFn {
 public:
  explicit QuantileFn(std::vector<double> sample);

  double operator()(double u) const;
  std::size_t sample_size() const { return sorted_.size(); }
  const std::vector<double>& sorted_sample() const { return sorted_; }

  /// Breakpoint grid u_j = j/N, j = 0..N-1; Q is constant on [u_j, u_{j+1}).
  std::vector<double> breakpoints() const;

  /// CSV rows "u,Q(u)" on the breakpoint grid.
  std::string to_csv() const;

 private:
  std::vector<double> sorted_;  // ascending
};

QuantileFn empirical_quantile(std::vector<double> sample);

/// Exact integral of Q_x(u) * Q_y(u) over [a, b] (step functions, breakpoint
/// partition; no numerical quadrature).
double quantile_product_integral(const QuantileFn& qx, const QuantileFn& qy,
                                 double a, double b);

/// Covariance bound 18 * int_0^alpha_bar Q_x(u) Q_y(u) du.
double merl_bound(const QuantileFn& qx, const QuantileFn& qy, double alpha_bar);

/// Cross-covariance decay envelope exp(-k beta (1 - 2/p)) * pmoment^(2/p)
/// with the leading constant set to 1; requires p > 2.
double cov_decay_envelope(std::uint64_t k, double beta, double p,
                          double pmoment);

}  // namespace hmx
