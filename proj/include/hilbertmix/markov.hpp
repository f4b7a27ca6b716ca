#pragma once

#include <cstdint>
#include <vector>

#include "hilbertmix/hilbert.hpp"

/// Finite-state ergodic Markov chains with Lyapunov drift data and a
/// Hilbert-space embedding: exact stationary law, exact total-variation
/// beta-mixing coefficients, drift verification and the ergodicity bound.

namespace hmx {

class FiniteChain {
 public:
  /// transition: row-stochastic S x S matrix (row sums 1 within 1e-12).
  /// embed: one Hilbert vector per state, equal dimensions.
  /// lyapunov: V(s) >= 1. compact_set: 0-based state indices.
  FiniteChain(std::vector<std::vector<double>> transition,
              std::vector<HilbertVec> embed, std::vector<double> lyapunov,
              double gamma, double drift_k, std::vector<std::size_t> compact_set);

  std::size_t states() const { return p_.size(); }
  const std::vector<std::vector<double>>& transition() const { return p_; }
  const std::vector<HilbertVec>& embedding() const { return embed_; }
  const std::vector<double>& lyapunov() const { return v_; }
  double gamma() const { return gamma_; }
  double drift_k() const { return k_; }
  const std::vector<bool>& in_compact_set() const { return in_c_; }

  /// Unique stationary distribution; solved once, cached.
  const std::vector<double>& stationary() const { return pi_; }

  /// Embedding mean under the stationary law.
  const HilbertVec& embedded_mean() const { return mean_; }

 private:
  std::vector<std::vector<double>> p_;
  std::vector<HilbertVec> embed_;
  std::vector<double> v_;
  double gamma_ = 0;
  double k_ = 0;
  std::vector<bool> in_c_;
  std::vector<double> pi_;
  HilbertVec mean_;
};

/// n-step transition matrix by repeated squaring; rows renormalized after
/// each squaring to preserve stochasticity.
std::vector<std::vector<double>> transition_power(
    const std::vector<std::vector<double>>& p, std::uint64_t n);

/// Exact beta-mixing coefficient at lag n >= 1:
/// sum_s pi(s) * TV(P^n(s,.), pi), with TV the half-L1 distance.
double beta_exact(const FiniteChain& chain, std::uint64_t n);

/// Largest drift violation max_s [ (PV)(s) - gamma V(s) - K 1_C(s) ];
/// the drift condition holds iff the result is <= 0.
double drift_check(const FiniteChain& chain);

/// Root of gamma * e^c + c = 1 on (0, -log gamma), minus a 1e-9 margin, so
/// that gamma * e^c + c < 1 strictly. Bisection; requires gamma in (0,1).
double solve_cgamma(double gamma);

/// Ergodicity envelope pi(V) * exp(-solve_cgamma(gamma) * n).
/// Requires the drift condition to hold.
double beta_bound(const FiniteChain& chain, std::uint64_t n);

/// Stationary state path of length n+1 (indices 0..n), deterministic in
/// (seed, path_index).
std::vector<std::size_t> simulate_states(const FiniteChain& chain,
                                         std::size_t n, std::uint64_t seed,
                                         std::uint64_t path_index = 0);

/// Centered embedded path phi(X_t) - E_pi phi.
std::vector<HilbertVec> simulate_embedded(const FiniteChain& chain,
                                          std::size_t n, std::uint64_t seed,
                                          std::uint64_t path_index = 0);

/// Decay rate of beta(n), least-squares fitted on lags 10..50 of
/// log beta_exact; +inf when beta vanishes on the window.
double mixing_rate(const FiniteChain& chain);

/// Shipped example: symmetric two-state chain with flip probability 1/4,
/// V = (1,2), gamma = 0.9, K = 2, C = both states, embedding
/// phi(0) = (1,0), phi(1) = (0,2). Its beta(n) is 0.5^(n+1).
FiniteChain two_state_chain();

}  // namespace hmx
