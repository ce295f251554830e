#include "wle/rng.hpp"

namespace wle {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t stable_mix(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t trial) noexcept {
  std::uint64_t h = mix64(master + kGolden);
  h = mix64(h ^ (cell + 2 * kGolden));
  h = mix64(h ^ (trial + 3 * kGolden));
  return h;
}

}  // namespace wle
