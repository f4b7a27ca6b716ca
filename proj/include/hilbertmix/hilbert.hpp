#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

/// Truncated Hilbert-space arithmetic: coefficient vectors in a fixed
/// orthonormal basis, symmetric operators, spectral decomposition and the
/// head/tail projection split.

namespace hmx {

/// Library-wide default truncation dimension for ad-hoc construction.
inline constexpr std::size_t kDefaultTruncation = 32;

/// Coefficient vector of length D w.r.t. the fixed orthonormal basis.
/// All entries must be finite; the squared norm is the sum of squared
/// coefficients.
class HilbertVec {
 public:
  HilbertVec() = default;
  explicit HilbertVec(std::vector<double> coeffs);

  static HilbertVec zeros(std::size_t dim);
  static HilbertVec basis(std::size_t dim, std::size_t k);  // e_{k+1}, 0-based k

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  std::span<const double> coeffs() const { return c_; }
  std::vector<double>& raw() { return c_; }
  const std::vector<double>& raw() const { return c_; }

  HilbertVec& operator+=(const HilbertVec& o);
  HilbertVec& operator-=(const HilbertVec& o);
  HilbertVec& operator*=(double s);

 private:
  std::vector<double> c_;
};

HilbertVec operator+(HilbertVec a, const HilbertVec& b);
HilbertVec operator-(HilbertVec a, const HilbertVec& b);
HilbertVec operator*(double s, HilbertVec a);

double inner(const HilbertVec& x, const HilbertVec& y);
double norm(const HilbertVec& x);

struct SplitResult {
  HilbertVec head;  // first d coefficients, dimension d
  HilbertVec tail;  // full dimension, zeros in the first d slots
};

/// Split x into its projection onto the first d basis directions and the
/// remainder. Requires 1 <= d <= dim(x).
SplitResult split(const HilbertVec& x, std::size_t d);

/// Dense symmetric D x D operator. Construction validates symmetry entry-wise
/// to 1e-12 relative.
class SymOperator {
 public:
  SymOperator() = default;
  SymOperator(std::size_t dim, std::vector<double> row_major);

  static SymOperator zeros(std::size_t dim);
  static SymOperator identity(std::size_t dim);
  static SymOperator diagonal(const std::vector<double>& d);

  std::size_t dim() const { return dim_; }
  double at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  double& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const std::vector<double>& entries() const { return a_; }

  /// Apply to a vector of matching dimension.
  HilbertVec apply(const HilbertVec& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

double frobenius(const SymOperator& a);

struct EighResult {
  std::vector<double> eigenvalues;   // descending
  std::size_t dim = 0;
  std::vector<double> vectors;       // row-major; column k pairs with eigenvalues[k]

  double vec(std::size_t row, std::size_t col) const { return vectors[row * dim + col]; }
};

/// Cyclic Jacobi eigendecomposition. Converges when the off-diagonal
/// Frobenius mass drops below 1e-12 * ||A||_F. Suitable for D <= 256.
EighResult eigh(const SymOperator& a);

}  // namespace hmx
