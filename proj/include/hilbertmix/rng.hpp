#pragma once

#include <cstdint>

/// Counter-based random streams. Every draw is a pure function of
/// (seed, stream, path, time, slot), so simulations reproduce bit-for-bit
/// under any parallel schedule.

namespace hmx {

enum class Stream : std::uint64_t {
  kFarInit = 1,    // stationary-start tail draws
  kFarStep = 2,    // per-step innovations
  kChainInit = 3,  // initial state draw
  kChainStep = 4,  // transition draws
  kComparator = 5, // i.i.d. Gaussian comparator increments
  kShuffle = 6,    // surrogate resampling permutations
};

/// SplitMix64 finalizer; full-period 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Stateless hash of a 5-word counter.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t path, std::uint64_t time,
                           std::uint64_t slot);

/// Uniform on [0,1) with 53-bit resolution.
double uniform01(std::uint64_t seed, Stream stream, std::uint64_t path,
                 std::uint64_t time, std::uint64_t slot);

/// Standard normal via Box-Muller on two sub-draws of the same counter.
double standard_normal(std::uint64_t seed, Stream stream, std::uint64_t path,
                       std::uint64_t time, std::uint64_t slot);

enum class NoiseLaw { kGaussian, kUniform, kLaplace };

/// Centered unit-variance draw from the given law.
double noise_draw(NoiseLaw law, std::uint64_t seed, Stream stream,
                  std::uint64_t path, std::uint64_t time, std::uint64_t slot);

const char* noise_name(NoiseLaw law);
NoiseLaw noise_from_name(const char* name);

}  // namespace hmx
