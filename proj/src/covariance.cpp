#include "hilbertmix/covariance.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace hmx {

double cov_sn_defect_coord(double lambda, std::uint64_t n) {
  // Var(S_n) - n*g = gamma_0 * [ -2 n l^n / (1-l)
  //                              - 2 l (1 - n l^(n-1) + (n-1) l^n) / (1-l)^2 ].
  // Evaluated directly so no large-n cancellation occurs.
  const long double l = lambda;
  const long double nn = static_cast<long double>(n);
  const long double g0 = l / (1.0L - l * l);
  const long double one_m = 1.0L - l;
  const long double ln1 = std::pow(l, nn - 1.0L);  // l^(n-1)
  const long double ln = ln1 * l;                  // l^n
  const long double term1 = -2.0L * nn * ln / one_m;
  const long double term2 =
      -2.0L * l * (1.0L - nn * ln1 + (nn - 1.0L) * ln) / (one_m * one_m);
  return static_cast<double>(g0 * (term1 + term2));
}

double cov_sn_coord(double lambda, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("cov_sn_coord: n must be >= 1");
  const long double g = longrun_gamma_eig(lambda);
  return static_cast<double>(static_cast<long double>(n) * g +
                             static_cast<long double>(cov_sn_defect_coord(lambda, n)));
}

SymOperator cov_sn_exact(const FarModel& m, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("cov_sn_exact: n must be >= 1");
  std::vector<double> d(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) d[k] = cov_sn_coord(m.lambda(k), n);
  return SymOperator::diagonal(d);
}

CovReport gamma_defect(const FarModel& m, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("gamma_defect: n must be >= 1");
  CovReport r;
  r.n = n;
  r.residuals.resize(m.dim());
  long double frob = 0.0L;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double res = cov_sn_defect_coord(m.lambda(k), n);
    r.residuals[k] = res;
    frob += static_cast<long double>(res) * res;
  }
  r.defect = static_cast<double>(std::sqrt(frob));
  return r;
}

BlockEigs block_cov_eigs(const FarModel& m, std::int64_t m1, std::size_t d) {
  if (d < 1 || d > m.dim())
    throw std::invalid_argument("block_cov_eigs: d out of range");
  if (m1 < 1) throw std::invalid_argument("block_cov_eigs: m1 must be >= 1");
  BlockEigs out;
  out.lambda_max = cov_sn_coord(m.lambda(0), static_cast<std::uint64_t>(m1));
  out.lambda_min = cov_sn_coord(m.lambda(d - 1), static_cast<std::uint64_t>(m1));
  const double fm1 = static_cast<double>(m1);
  out.bound_ok = out.lambda_min >= fm1 * m.lambda(d - 1) &&
                 out.lambda_max <= fm1 * longrun_gamma_eig(m.lambda(0));
  return out;
}

double cross_cov_frobenius(const FarModel& m, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("cross_cov_frobenius: k must be >= 1");
  const auto g = autocov(m, k);
  long double s = 0.0L;
  for (double v : g) s += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(s));
}

std::string CovReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["defect"] = defect;
  j["residuals"] = residuals;
  return j.dump();
}

}  // namespace hmx
