#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace orthotrend {

__extension__ using uint128_t = unsigned __int128;

/// SplitMix64 (Steele, Lea & Flood 2014). The state is a Weyl counter, so a
/// stream is fully determined by its starting key and streams can be derived
/// from (seed, index) without sharing state between workers.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t key) noexcept : state_(key) {}

  /// Stream for replicate `index` under `seed`.
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix(seed ^ mix(index * kGamma + kGamma)));
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() noexcept { return mix(state_ += kGamma); }

  /// Uniform integer in [0, bound), Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    std::uint64_t x = next();
    auto m = static_cast<uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates, descending i.
template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) noexcept {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace orthotrend
