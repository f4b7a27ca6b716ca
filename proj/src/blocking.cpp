#include "hilbertmix/blocking.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hmx {

BlockPlan::BlockPlan(int level, double alpha1, double cstar)
    : level_(level), alpha1_(alpha1), cstar_(cstar) {
  if (level < 1) throw std::invalid_argument("BlockPlan: level must be >= 1");
  if (!(alpha1 > 0.0 && alpha1 < 1.0))
    throw std::invalid_argument("BlockPlan: alpha1 must lie in (0,1)");
  if (!(cstar > 0.0))
    throw std::invalid_argument("BlockPlan: cstar must be positive");
  big_len_ = std::int64_t{1} << static_cast<int>(std::floor(alpha1 * level));
  const double log_len = cstar * static_cast<double>(level) * std::log(2.0);
  small_len_ = static_cast<std::int64_t>(std::floor(log_len));
  if (small_len_ < 1) {
    small_len_ = 1;  // zero-width separators would defeat the scheme
    clamped_ = true;
  }
}

std::int64_t BlockPlan::full_pair_count(std::int64_t n) const {
  if (n < first_index() || n > last_index())
    throw std::invalid_argument("full_pair_count: n outside the dyadic interval");
  return (n - (std::int64_t{1} << level_)) / (big_len_ + small_len_);
}

IndexRange BlockPlan::big_block(std::int64_t j) const {
  const std::int64_t kappa = full_pairs();
  if (j < 1 || j > kappa + 1)
    throw std::invalid_argument("big_block: block index out of range");
  const std::int64_t base = std::int64_t{1} << level_;
  const std::int64_t start = base + (big_len_ + small_len_) * (j - 1) + 1;
  if (j <= kappa) return {start, start + big_len_ - 1};
  // Tail: truncated at the interval end.
  return {start, std::min(last_index(), base + (big_len_ + small_len_) * kappa + big_len_)};
}

IndexRange BlockPlan::small_block(std::int64_t j) const {
  const std::int64_t kappa = full_pairs();
  if (j < 1 || j > kappa + 1)
    throw std::invalid_argument("small_block: block index out of range");
  const std::int64_t base = std::int64_t{1} << level_;
  const std::int64_t start = base + (big_len_ + small_len_) * (j - 1) + big_len_ + 1;
  if (j <= kappa) return {start, base + (big_len_ + small_len_) * j};
  // Tail: whatever remains past the tail big block (empty when none remains).
  return {start, last_index()};
}

BlockSums block_sums(std::span<const HilbertVec> path, const BlockPlan& plan) {
  if (static_cast<std::int64_t>(path.size()) < plan.last_index())
    throw std::invalid_argument("block_sums: path too short for the plan");
  const std::size_t dim = path.empty() ? 0 : path[0].dim();
  BlockSums out;
  const std::int64_t blocks = plan.full_pairs() + 1;
  auto sum_range = [&](const IndexRange& r) {
    HilbertVec acc = HilbertVec::zeros(dim);
    for (std::int64_t i = r.lo; i <= r.hi; ++i)
      acc += path[static_cast<std::size_t>(i - 1)];
    return acc;
  };
  for (std::int64_t j = 1; j <= blocks; ++j) {
    out.big.push_back(sum_range(plan.big_block(j)));
    out.small.push_back(sum_range(plan.small_block(j)));
  }
  return out;
}

double default_cstar(double alpha1, double pprime, double beta) {
  if (!(alpha1 > 0.0 && alpha1 < 1.0))
    throw std::invalid_argument("default_cstar: alpha1 must lie in (0,1)");
  if (!(pprime > 2.0))
    throw std::invalid_argument("default_cstar: pprime must exceed 2");
  if (!(beta > 0.0))
    throw std::invalid_argument("default_cstar: beta must be positive");
  return 2.0 * (1.0 - alpha1) * (pprime - 0.5) / beta;
}

std::string BlockPlan::to_json() const {
  nlohmann::json j;
  j["level"] = level_;
  j["alpha1"] = alpha1_;
  j["cstar"] = cstar_;
  j["big_len"] = big_len_;
  j["small_len"] = small_len_;
  j["small_len_clamped"] = clamped_;
  j["interval"] = {first_index(), last_index()};
  j["full_pairs"] = full_pairs();
  nlohmann::json big = nlohmann::json::array();
  nlohmann::json small = nlohmann::json::array();
  for (std::int64_t b = 1; b <= full_pairs() + 1; ++b) {
    const auto ib = big_block(b);
    const auto sb = small_block(b);
    big.push_back({ib.lo, ib.hi});
    small.push_back({sb.lo, sb.hi});
  }
  j["big"] = big;
  j["small"] = small;
  return j.dump();
}

}  // namespace hmx
