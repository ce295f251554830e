#pragma once

#include <cstdint>
#include <random>

namespace wle {

/// SplitMix64 finalizer. Bijective avalanche mix on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives an independent seed from (master, cell, trial). Stable across
/// platforms and releases; changing it invalidates recorded experiments.
std::uint64_t stable_mix(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t trial) noexcept;

/// Edge-sampling engine. std::mt19937_64's output sequence is fixed by the
/// standard, so seeds are portable; uniforms are built from the top 53 bits
/// rather than std::uniform_real_distribution, whose algorithm is unspecified.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next() noexcept { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wle
