#include "hilbertmix/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hmx {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t path, std::uint64_t time,
                           std::uint64_t slot) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ stream);
  h = mix64(h ^ path);
  h = mix64(h ^ time);
  h = mix64(h ^ slot);
  return h;
}

namespace {

constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53

double to_unit(std::uint64_t h) { return static_cast<double>(h >> 11) * kInv53; }

}  // namespace

double uniform01(std::uint64_t seed, Stream stream, std::uint64_t path,
                 std::uint64_t time, std::uint64_t slot) {
  return to_unit(counter_hash(seed, static_cast<std::uint64_t>(stream), path,
                              time, slot));
}

double standard_normal(std::uint64_t seed, Stream stream, std::uint64_t path,
                       std::uint64_t time, std::uint64_t slot) {
  // Two decorrelated words from consecutive slot halves of one counter.
  const std::uint64_t s = static_cast<std::uint64_t>(stream);
  const std::uint64_t h1 = counter_hash(seed, s, path, time, 2 * slot);
  const std::uint64_t h2 = counter_hash(seed, s, path, time, 2 * slot + 1);
  // u1 in (0,1] keeps the log finite.
  const double u1 = (static_cast<double>(h1 >> 11) + 1.0) * kInv53;
  const double u2 = to_unit(h2);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double noise_draw(NoiseLaw law, std::uint64_t seed, Stream stream,
                  std::uint64_t path, std::uint64_t time, std::uint64_t slot) {
  switch (law) {
    case NoiseLaw::kGaussian:
      return standard_normal(seed, stream, path, time, slot);
    case NoiseLaw::kUniform: {
      const double u = uniform01(seed, stream, path, time, 2 * slot);
      return (2.0 * u - 1.0) * std::numbers::sqrt3;
    }
    case NoiseLaw::kLaplace: {
      // Inverse CDF with scale 1/sqrt(2) for unit variance.
      const double u = uniform01(seed, stream, path, time, 2 * slot);
      const double b = 1.0 / std::numbers::sqrt2;
      const double v = u - 0.5;
      const double a = 1.0 - 2.0 * std::abs(v);
      return (v >= 0 ? -b : b) * std::log(a > 1e-300 ? a : 1e-300);
    }
  }
  throw std::logic_error("noise_draw: unknown law");
}

const char* noise_name(NoiseLaw law) {
  switch (law) {
    case NoiseLaw::kGaussian: return "gaussian";
    case NoiseLaw::kUniform: return "uniform";
    case NoiseLaw::kLaplace: return "laplace";
  }
  return "?";
}

NoiseLaw noise_from_name(const char* name) {
  const std::string s(name);
  if (s == "gaussian") return NoiseLaw::kGaussian;
  if (s == "uniform") return NoiseLaw::kUniform;
  if (s == "laplace") return NoiseLaw::kLaplace;
  throw std::invalid_argument("unknown noise law: " + s);
}

}  // namespace hmx
