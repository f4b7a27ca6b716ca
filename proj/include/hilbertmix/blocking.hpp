#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hilbertmix/hilbert.hpp"

/// Dyadic alternating block scheme over [2^m + 1, 2^(m+1)]: big blocks of
/// length 2^floor(alpha1 * m) and small separating blocks of length
/// floor(cstar * log 2^m), followed by (possibly shorter or empty) tails.
/// The ordered blocks tile the interval exactly.

namespace hmx {

/// Inclusive integer range; empty when hi < lo.
struct IndexRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const { return hi < lo; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

class BlockPlan {
 public:
  /// level m >= 1, 0 < alpha1 < 1, cstar > 0. The small-block length is
  /// clamped up to 1 when the log formula yields 0; the clamp is recorded.
  BlockPlan(int level, double alpha1, double cstar);

  int level() const { return level_; }
  double alpha1() const { return alpha1_; }
  double cstar() const { return cstar_; }
  std::int64_t big_len() const { return big_len_; }
  std::int64_t small_len() const { return small_len_; }
  bool small_len_clamped() const { return clamped_; }

  /// The covered interval [2^m + 1, 2^(m+1)].
  std::int64_t first_index() const { return (std::int64_t{1} << level_) + 1; }
  std::int64_t last_index() const { return std::int64_t{1} << (level_ + 1); }

  /// Number of full big/small pairs fitting before position n
  /// (floor((n - 2^m) / (m1 + m2))). Requires n inside the interval.
  std::int64_t full_pair_count(std::int64_t n) const;

  /// Count of full pairs over the whole interval.
  std::int64_t full_pairs() const { return full_pair_count(last_index()); }

  /// j is 1-based; j = full_pairs() + 1 addresses the tail blocks.
  IndexRange big_block(std::int64_t j) const;
  IndexRange small_block(std::int64_t j) const;

  std::string to_json() const;

 private:
  int level_;
  double alpha1_;
  double cstar_;
  std::int64_t big_len_;
  std::int64_t small_len_;
  bool clamped_ = false;
};

struct BlockSums {
  std::vector<HilbertVec> big;    // one entry per big block, tail included
  std::vector<HilbertVec> small;  // one entry per small block, tail included
};

/// Sums of path values over each block. path is indexed from 1, i.e.
/// path[i-1] is the series value at time i, and must cover the plan's
/// interval.
BlockSums block_sums(std::span<const HilbertVec> path, const BlockPlan& plan);

/// Smallest admissible small-block constant 2 (1 - alpha1)(pprime - 1/2) / beta.
double default_cstar(double alpha1, double pprime, double beta);

}  // namespace hmx
