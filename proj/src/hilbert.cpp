#include "hilbertmix/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hmx {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

HilbertVec::HilbertVec(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  for (double v : c_)
    require(std::isfinite(v), "HilbertVec: coefficients must be finite");
}

HilbertVec HilbertVec::zeros(std::size_t dim) {
  HilbertVec v;
  v.c_.assign(dim, 0.0);
  return v;
}

HilbertVec HilbertVec::basis(std::size_t dim, std::size_t k) {
  require(k < dim, "HilbertVec::basis: index out of range");
  HilbertVec v = zeros(dim);
  v.c_[k] = 1.0;
  return v;
}

HilbertVec& HilbertVec::operator+=(const HilbertVec& o) {
  require(dim() == o.dim(), "HilbertVec: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HilbertVec& HilbertVec::operator-=(const HilbertVec& o) {
  require(dim() == o.dim(), "HilbertVec: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HilbertVec& HilbertVec::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

HilbertVec operator+(HilbertVec a, const HilbertVec& b) { return a += b; }
HilbertVec operator-(HilbertVec a, const HilbertVec& b) { return a -= b; }
HilbertVec operator*(double s, HilbertVec a) { return a *= s; }

double inner(const HilbertVec& x, const HilbertVec& y) {
  require(x.dim() == y.dim(), "inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const HilbertVec& x) { return std::sqrt(inner(x, x)); }

SplitResult split(const HilbertVec& x, std::size_t d) {
  require(d >= 1 && d <= x.dim(), "split: d out of range");
  HilbertVec head = HilbertVec::zeros(d);
  HilbertVec tail = HilbertVec::zeros(x.dim());
  for (std::size_t i = 0; i < d; ++i) head[i] = x[i];
  for (std::size_t i = d; i < x.dim(); ++i) tail[i] = x[i];
  return {std::move(head), std::move(tail)};
}

SymOperator::SymOperator(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), a_(std::move(row_major)) {
  require(a_.size() == dim_ * dim_, "SymOperator: size mismatch");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double aij = at(i, j), aji = at(j, i);
      require(std::isfinite(aij) && std::isfinite(aji),
              "SymOperator: entries must be finite");
      const double tol = 1e-12 * std::max(1.0, std::abs(aij));
      require(std::abs(aij - aji) <= tol, "SymOperator: input is not symmetric");
    }
}

SymOperator SymOperator::zeros(std::size_t dim) {
  return SymOperator(dim, std::vector<double>(dim * dim, 0.0));
}

SymOperator SymOperator::identity(std::size_t dim) {
  SymOperator a = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) a.at(i, i) = 1.0;
  return a;
}

SymOperator SymOperator::diagonal(const std::vector<double>& d) {
  SymOperator a = zeros(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a.at(i, i) = d[i];
  return a;
}

HilbertVec SymOperator::apply(const HilbertVec& x) const {
  require(x.dim() == dim_, "SymOperator::apply: dimension mismatch");
  HilbertVec y = HilbertVec::zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double frobenius(const SymOperator& a) {
  double s = 0.0;
  for (double v : a.entries()) s += v * v;
  return std::sqrt(s);
}

namespace {

double offdiag_frobenius(const SymOperator& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += a.at(i, j) * a.at(i, j);
  return std::sqrt(s);
}

}  // namespace

EighResult eigh(const SymOperator& input) {
  const std::size_t n = input.dim();
  SymOperator a = input;  // symmetry already validated on construction
  SymOperator v = SymOperator::identity(n);
  const double total = frobenius(a);
  const double threshold = 1e-12 * std::max(total, 1e-300);

  // Cyclic sweeps over the upper triangle, rotating each (p,q) in turn.
  const int max_sweeps = 64;
  int sweep = 0;
  while (offdiag_frobenius(a) > threshold) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("eigh: Jacobi iteration failed to converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a.at(p, p), aqq = a.at(q, q);
        a.at(p, p) = app - t * apq;
        a.at(q, q) = aqq + t * apq;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a.at(r, p), arq = a.at(r, q);
            a.at(r, p) = arp - s * (arq + tau * arp);
            a.at(p, r) = a.at(r, p);
            a.at(r, q) = arq + s * (arp - tau * arq);
            a.at(q, r) = a.at(r, q);
          }
          const double vrp = v.at(r, p), vrq = v.at(r, q);
          v.at(r, p) = vrp - s * (vrq + tau * vrp);
          v.at(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return eig[i] > eig[j]; });

  EighResult out;
  out.eigenvalues.resize(n);
  out.dim = n;
  out.vectors.assign(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = eig[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + k] = v.at(r, order[k]);
  }
  return out;
}

}  // namespace hmx
