#ifndef EUCLAB_RNG_HPP
#define EUCLAB_RNG_HPP

#include <cstdint>

namespace euclab {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014 constants).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64: state += 0x9E3779B97F4A7C15, output mix64(state).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, bound) by rejection: draws below 2^64 mod bound are
  /// discarded, the rest reduced mod bound. bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t reject_under = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = (*this)();
      if (r >= reject_under) return r % bound;
    }
  }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

 private:
  std::uint64_t state_;
};

}  // namespace euclab

#endif  // EUCLAB_RNG_HPP
