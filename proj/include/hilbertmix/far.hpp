#pragma once

#include <cstdint>
#include <vector>

#include "hilbertmix/hilbert.hpp"
#include "hilbertmix/rng.hpp"

/// Functional AR(1) process diagonalized in the fixed basis: the AR operator
/// has eigenvalues lambda_k = c * k^(-decay), the noise operator is its square
/// root, and the mean is zero. Every covariance quantity is closed form.

namespace hmx {

class FarModel {
 public:
  /// lambda_k = c * k^(-decay), k = 1..dim. Requires c < 1 (stationarity)
  /// and decay > 1 (summable eigenvalue tail).
  FarModel(std::size_t dim, double c, double decay, NoiseLaw noise);

  std::size_t dim() const { return lambda_.size(); }
  double c() const { return c_; }
  double decay() const { return decay_; }
  NoiseLaw noise() const { return noise_; }
  const std::vector<double>& ar_eigenvalues() const { return lambda_; }
  double lambda(std::size_t k) const { return lambda_[k]; }  // 0-based

  /// Exponential mixing rate of the contraction, -log(lambda_1).
  double mixing_rate() const;

 private:
  double c_ = 0;
  double decay_ = 0;
  NoiseLaw noise_ = NoiseLaw::kGaussian;
  std::vector<double> lambda_;
};

/// Per-coordinate stationary variance lambda/(1-lambda^2).
std::vector<double> stationary_var(const FarModel& m);

/// Per-coordinate lag-j autocovariance lambda^(j+1)/(1-lambda^2).
std::vector<double> autocov(const FarModel& m, std::uint64_t lag);

/// Long-run covariance operator; diagonal with entries
/// lambda/(1-lambda^2) + 2*lambda^2/((1-lambda^2)*(1-lambda)),
/// which simplifies to lambda/(1-lambda)^2.
SymOperator longrun_gamma(const FarModel& m);
double longrun_gamma_eig(double lambda);

/// One transition x -> A x + sqrt(A) eps applied coordinate-wise.
HilbertVec far_step(const FarModel& m, const HilbertVec& x,
                    const HilbertVec& eps);

/// Stationary path of length n: entry 0 is a stationary draw, entry t follows
/// the recursion. Deterministic in (seed, path_index).
std::vector<HilbertVec> simulate_path(const FarModel& m, std::size_t n,
                                      std::uint64_t seed,
                                      std::uint64_t path_index = 0);

/// Contraction ratio ||A(x-y)|| / ||x-y||; bounded by lambda_1.
double gmc_ratio(const FarModel& m, const HilbertVec& x, const HilbertVec& y);

namespace detail {

/// Number of tail terms needed so the dropped stationary-start mass is below
/// double precision.
std::size_t init_tail_terms(double lambda);

/// Stationary draw for one coordinate via the truncated moving-average tail.
double stationary_coord_draw(const FarModel& m, std::size_t coord,
                             std::uint64_t seed, std::uint64_t path_index);

}  // namespace detail

}  // namespace hmx
