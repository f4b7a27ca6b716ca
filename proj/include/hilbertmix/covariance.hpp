#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbertmix/far.hpp"
#include "hilbertmix/hilbert.hpp"

/// Exact covariance analytics for the diagonal AR model: the covariance of
/// partial sums, its defect against n times the long-run operator, block
/// covariance eigenvalue bounds and cross-covariance decay.

namespace hmx {

struct CovReport {
  std::uint64_t n = 0;
  double defect = 0;                 // Frobenius distance to n * Gamma
  std::vector<double> residuals;     // per-coordinate Var(S_n) - n * gamma_eig

  std::string to_json() const;
};

/// Per-coordinate Var(sum_{i<=n} X_i); diagonal operator.
/// Equals n*gamma_0 + 2*sum_{j=1}^{n-1} (n-j)*gamma_j in closed form.
SymOperator cov_sn_exact(const FarModel& m, std::uint64_t n);

/// Same quantity for a single coordinate with AR eigenvalue lambda.
double cov_sn_coord(double lambda, std::uint64_t n);

/// Var(S_n) - n * g(lambda) for one coordinate, evaluated cancellation-free.
double cov_sn_defect_coord(double lambda, std::uint64_t n);

CovReport gamma_defect(const FarModel& m, std::uint64_t n);

struct BlockEigs {
  double lambda_max = 0;
  double lambda_min = 0;
  bool bound_ok = false;  // lambda_min >= m1*lambda_d and lambda_max <= m1*g(lambda_1)
};

/// Extreme eigenvalues of cov(sum_{i<=m1} X_i^(d)) — diagonal for this model,
/// so the extremes of the leading d coordinate variances.
BlockEigs block_cov_eigs(const FarModel& m, std::int64_t m1, std::size_t d);

/// Frobenius norm of the lag-k cross covariance, sqrt(sum_i gamma_k(i)^2).
double cross_cov_frobenius(const FarModel& m, std::uint64_t k);

}  // namespace hmx
