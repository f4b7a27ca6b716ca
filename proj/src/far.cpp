#include "hilbertmix/far.hpp"

#include <cmath>
#include <stdexcept>

namespace hmx {

FarModel::FarModel(std::size_t dim, double c, double decay, NoiseLaw noise)
    : c_(c), decay_(decay), noise_(noise) {
  if (dim < 1) throw std::invalid_argument("FarModel: dim must be >= 1");
  if (!(c > 0.0) || c >= 1.0)
    throw std::invalid_argument(
        "FarModel: scale c must lie in (0,1); lambda_1 = c >= 1 is non-stationary");
  if (!(decay > 1.0))
    throw std::invalid_argument("FarModel: decay must exceed 1");
  lambda_.resize(dim);
  for (std::size_t k = 0; k < dim; ++k)
    lambda_[k] = c * std::pow(static_cast<double>(k + 1), -decay);
  // Sandwich with matching upper/lower decay exponents; non-increasing holds
  // by construction and is cheap to re-check.
  for (std::size_t k = 1; k < dim; ++k)
    if (lambda_[k] > lambda_[k - 1])
      throw std::logic_error("FarModel: eigenvalues must be non-increasing");
}

double FarModel::mixing_rate() const { return -std::log(lambda_[0]); }

std::vector<double> stationary_var(const FarModel& m) {
  std::vector<double> v(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double l = m.lambda(k);
    v[k] = l / (1.0 - l * l);
  }
  return v;
}

std::vector<double> autocov(const FarModel& m, std::uint64_t lag) {
  std::vector<double> v(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double l = m.lambda(k);
    v[k] = std::pow(l, static_cast<double>(lag + 1)) / (1.0 - l * l);
  }
  return v;
}

double longrun_gamma_eig(double lambda) {
  const double one_m = 1.0 - lambda;
  const double one_m2 = 1.0 - lambda * lambda;
  return lambda / one_m2 + 2.0 * lambda * lambda / (one_m2 * one_m);
}

SymOperator longrun_gamma(const FarModel& m) {
  std::vector<double> d(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) d[k] = longrun_gamma_eig(m.lambda(k));
  return SymOperator::diagonal(d);
}

HilbertVec far_step(const FarModel& m, const HilbertVec& x,
                    const HilbertVec& eps) {
  if (x.dim() != m.dim() || eps.dim() != m.dim())
    throw std::invalid_argument("far_step: dimension mismatch");
  HilbertVec y = HilbertVec::zeros(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double l = m.lambda(k);
    y[k] = l * x[k] + std::sqrt(l) * eps[k];
  }
  return y;
}

namespace detail {

std::size_t init_tail_terms(double lambda) {
  // lambda^J <= 2^-53  =>  J >= 53*ln2 / -ln(lambda)
  const double j = 53.0 * 0.6931471805599453 / -std::log(lambda);
  return static_cast<std::size_t>(std::ceil(j)) + 1;
}

double stationary_coord_draw(const FarModel& m, std::size_t coord,
                             std::uint64_t seed, std::uint64_t path_index) {
  // Moving-average representation of the stationary law, truncated once the
  // remaining weight is below machine precision. Summed smallest-first.
  const double l = m.lambda(coord);
  const std::size_t terms = init_tail_terms(l);
  const double root = std::sqrt(l);
  double acc = 0.0;
  for (std::size_t j = terms; j-- > 0;) {
    const double eps = noise_draw(m.noise(), seed, Stream::kFarInit, path_index,
                                  static_cast<std::uint64_t>(j),
                                  static_cast<std::uint64_t>(coord));
    acc += std::pow(l, static_cast<double>(j)) * root * eps;
  }
  return acc;
}

}  // namespace detail

std::vector<HilbertVec> simulate_path(const FarModel& m, std::size_t n,
                                      std::uint64_t seed,
                                      std::uint64_t path_index) {
  if (n < 1) throw std::invalid_argument("simulate_path: n must be >= 1");
  std::vector<HilbertVec> path;
  path.reserve(n);
  HilbertVec x = HilbertVec::zeros(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k)
    x[k] = detail::stationary_coord_draw(m, k, seed, path_index);
  path.push_back(x);
  for (std::size_t t = 1; t < n; ++t) {
    HilbertVec eps = HilbertVec::zeros(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k)
      eps[k] = noise_draw(m.noise(), seed, Stream::kFarStep, path_index,
                          static_cast<std::uint64_t>(t),
                          static_cast<std::uint64_t>(k));
    x = far_step(m, x, eps);
    path.push_back(x);
  }
  return path;
}

double gmc_ratio(const FarModel& m, const HilbertVec& x, const HilbertVec& y) {
  HilbertVec d = x;
  d -= y;
  const double dn = norm(d);
  if (dn == 0.0) throw std::invalid_argument("gmc_ratio: x and y coincide");
  double s = 0.0;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double v = m.lambda(k) * d[k];
    s += v * v;
  }
  return std::sqrt(s) / dn;
}

}  // namespace hmx
