#include "hilbertmix/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hilbertmix/rng.hpp"
#include "hilbertmix/stats.hpp"

namespace hmx {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

/// All-positive test of the reachability structure of P^m for some
/// m <= S^2, via boolean doubling. Primitive (irreducible + aperiodic)
/// chains reach an all-positive power within S^2 - 2S + 2 steps.
bool primitive(const std::vector<std::vector<double>>& p) {
  const std::size_t s = p.size();
  std::vector<std::vector<bool>> b(s, std::vector<bool>(s, false));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) b[i][j] = p[i][j] > 0.0;
  const std::uint64_t needed = static_cast<std::uint64_t>(s) * s;
  std::uint64_t reached = 1;
  auto all_pos = [&] {
    for (const auto& row : b)
      for (bool v : row)
        if (!v) return false;
    return true;
  };
  while (!all_pos()) {
    if (reached > needed) return false;
    std::vector<std::vector<bool>> sq(s, std::vector<bool>(s, false));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k)
        if (b[i][k])
          for (std::size_t j = 0; j < s; ++j)
            if (b[k][j]) sq[i][j] = true;
    b.swap(sq);
    reached *= 2;
  }
  return true;
}

/// Dense solve of pi P = pi, sum pi = 1: one balance equation replaced by the
/// normalization row, Gaussian elimination with partial pivoting.
std::vector<double> solve_stationary(const std::vector<std::vector<double>>& p) {
  const std::size_t s = p.size();
  // (P^T - I) pi = 0 with last row replaced by ones = 1.
  std::vector<std::vector<double>> a(s, std::vector<double>(s + 1, 0.0));
  for (std::size_t i = 0; i + 1 < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) a[i][j] = p[j][i] - (i == j ? 1.0 : 0.0);
    a[i][s] = 0.0;
  }
  for (std::size_t j = 0; j < s; ++j) a[s - 1][j] = 1.0;
  a[s - 1][s] = 1.0;

  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < s; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300)
      throw std::invalid_argument("stationary: singular balance system");
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j <= s; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<double> pi(s);
  for (std::size_t i = 0; i < s; ++i) pi[i] = a[i][s] / a[i][i];
  return pi;
}

}  // namespace

FiniteChain::FiniteChain(std::vector<std::vector<double>> transition,
                         std::vector<HilbertVec> embed,
                         std::vector<double> lyapunov, double gamma,
                         double drift_k, std::vector<std::size_t> compact_set)
    : p_(std::move(transition)),
      embed_(std::move(embed)),
      v_(std::move(lyapunov)),
      gamma_(gamma),
      k_(drift_k) {
  const std::size_t s = p_.size();
  require(s >= 1, "FiniteChain: empty transition matrix");
  for (const auto& row : p_) {
    require(row.size() == s, "FiniteChain: transition matrix must be square");
    double sum = 0.0;
    for (double v : row) {
      require(v >= 0.0, "FiniteChain: negative transition probability");
      sum += v;
    }
    require(std::abs(sum - 1.0) <= 1e-12, "FiniteChain: row sums must be 1");
  }
  require(embed_.size() == s, "FiniteChain: one embedding vector per state");
  for (const auto& e : embed_)
    require(e.dim() == embed_[0].dim(), "FiniteChain: embedding dims differ");
  require(v_.size() == s, "FiniteChain: one Lyapunov value per state");
  for (double v : v_) require(v >= 1.0, "FiniteChain: Lyapunov values must be >= 1");
  require(gamma_ > 0.0 && gamma_ < 1.0, "FiniteChain: gamma must lie in (0,1)");
  require(k_ > 0.0, "FiniteChain: drift constant K must be positive");
  in_c_.assign(s, false);
  for (std::size_t idx : compact_set) {
    require(idx < s, "FiniteChain: compact-set index out of range");
    in_c_[idx] = true;
  }
  if (!primitive(p_))
    throw std::invalid_argument(
        "FiniteChain: chain must be irreducible and aperiodic");
  pi_ = solve_stationary(p_);
  double residual = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < s; ++i) col += pi_[i] * p_[i][j];
    residual += std::abs(col - pi_[j]);
  }
  if (residual > 1e-12)
    throw std::runtime_error("FiniteChain: stationary solve residual too large");
  for (double v : pi_)
    if (!(v > 0.0))
      throw std::invalid_argument("FiniteChain: stationary law must be positive");

  mean_ = HilbertVec::zeros(embed_[0].dim());
  for (std::size_t st = 0; st < s; ++st) {
    HilbertVec term = embed_[st];
    term *= pi_[st];
    mean_ += term;
  }
}

std::vector<std::vector<double>> transition_power(
    const std::vector<std::vector<double>>& p, std::uint64_t n) {
  const std::size_t s = p.size();
  auto renorm = [s](std::vector<std::vector<double>>& m) {
    for (std::size_t i = 0; i < s; ++i) {
      double sum = 0.0;
      for (double v : m[i]) sum += v;
      for (double& v : m[i]) v /= sum;
    }
  };
  auto mul = [s](const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    std::vector<std::vector<double>> c(s, std::vector<double>(s, 0.0));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k) {
        const double aik = a[i][k];
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < s; ++j) c[i][j] += aik * b[k][j];
      }
    return c;
  };

  std::vector<std::vector<double>> result(s, std::vector<double>(s, 0.0));
  for (std::size_t i = 0; i < s; ++i) result[i][i] = 1.0;
  std::vector<std::vector<double>> base = p;
  std::uint64_t e = n;
  while (e > 0) {
    if (e & 1) {
      result = mul(result, base);
      renorm(result);
    }
    e >>= 1;
    if (e > 0) {
      base = mul(base, base);
      renorm(base);
    }
  }
  return result;
}

double beta_exact(const FiniteChain& chain, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("beta_exact: lag must be >= 1");
  const auto pn = transition_power(chain.transition(), n);
  const auto& pi = chain.stationary();
  const std::size_t s = chain.states();
  double beta = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    double tv = 0.0;
    for (std::size_t j = 0; j < s; ++j) tv += std::abs(pn[i][j] - pi[j]);
    beta += pi[i] * 0.5 * tv;
  }
  return beta;
}

double drift_check(const FiniteChain& chain) {
  const std::size_t s = chain.states();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s; ++i) {
    double pv = 0.0;
    for (std::size_t j = 0; j < s; ++j)
      pv += chain.transition()[i][j] * chain.lyapunov()[j];
    const double allowance = chain.gamma() * chain.lyapunov()[i] +
                             (chain.in_compact_set()[i] ? chain.drift_k() : 0.0);
    worst = std::max(worst, pv - allowance);
  }
  return worst;
}

double solve_cgamma(double gamma) {
  if (!(gamma > 0.0) || gamma >= 1.0)
    throw std::invalid_argument("solve_cgamma: gamma must lie in (0,1)");
  auto f = [gamma](double c) { return gamma * std::exp(c) + c - 1.0; };
  double lo = 0.0, hi = -std::log(gamma);
  // f(0) = gamma - 1 < 0 and f(-log gamma) = -log(gamma) > 0.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return std::max(0.5 * (lo + hi) - 1e-9, 0.0);
}

double beta_bound(const FiniteChain& chain, std::uint64_t n) {
  if (drift_check(chain) > 0.0)
    throw std::invalid_argument("beta_bound: drift condition violated");
  const auto& pi = chain.stationary();
  double pi_v = 0.0;
  for (std::size_t i = 0; i < chain.states(); ++i)
    pi_v += pi[i] * chain.lyapunov()[i];
  return pi_v * std::exp(-solve_cgamma(chain.gamma()) * static_cast<double>(n));
}

namespace {

std::size_t inverse_cdf(const std::vector<double>& weights, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace

std::vector<std::size_t> simulate_states(const FiniteChain& chain,
                                         std::size_t n, std::uint64_t seed,
                                         std::uint64_t path_index) {
  std::vector<std::size_t> states;
  states.reserve(n + 1);
  std::size_t s = inverse_cdf(
      chain.stationary(), uniform01(seed, Stream::kChainInit, path_index, 0, 0));
  states.push_back(s);
  for (std::size_t t = 1; t <= n; ++t) {
    const double u = uniform01(seed, Stream::kChainStep, path_index,
                               static_cast<std::uint64_t>(t), 0);
    s = inverse_cdf(chain.transition()[s], u);
    states.push_back(s);
  }
  return states;
}

std::vector<HilbertVec> simulate_embedded(const FiniteChain& chain,
                                          std::size_t n, std::uint64_t seed,
                                          std::uint64_t path_index) {
  const auto states = simulate_states(chain, n, seed, path_index);
  std::vector<HilbertVec> out;
  out.reserve(states.size());
  for (std::size_t s : states) {
    HilbertVec v = chain.embedding()[s];
    v -= chain.embedded_mean();
    out.push_back(std::move(v));
  }
  return out;
}

double mixing_rate(const FiniteChain& chain) {
  std::vector<double> xs, ys;
  for (std::uint64_t n = 10; n <= 50; ++n) {
    const double b = beta_exact(chain, n);
    if (b <= 0.0) return std::numeric_limits<double>::infinity();
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(b));
  }
  return -least_squares_slope(xs, ys).slope;
}

FiniteChain two_state_chain() {
  return FiniteChain({{0.75, 0.25}, {0.25, 0.75}},
                     {HilbertVec({1.0, 0.0}), HilbertVec({0.0, 2.0})},
                     {1.0, 2.0}, 0.9, 2.0, {0, 1});
}

}  // namespace hmx
