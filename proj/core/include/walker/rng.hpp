#pragma once

#include <cstdint>

namespace walker {

/// Counter-based splittable generator.
///
/// Output n of a stream with key k is splitmix64's finalizer applied to
/// k + (n + 1) * golden_gamma. Child streams get a fresh key by hashing the
/// parent key with the child index, so an ensemble member's draws depend only
/// on (seed, member index) and never on scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : key_(mix(seed)) {}

  /// Independent stream for member `index`.
  CounterRng child(std::uint64_t index) const noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  /// Raw 64-bit output at an absolute counter position.
  std::uint64_t at(std::uint64_t counter) const noexcept { return mix(key_ + (counter + 1) * kGamma); }
  std::uint64_t next() noexcept { return at(counter_++); }

  /// Uniform on (0, 1], 53-bit resolution.
  double uniform_pos() noexcept { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

 private:
  CounterRng(std::uint64_t key, std::uint64_t counter, int) noexcept : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Standard normal draws by the Box-Muller transform
///   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2)
/// with u1 in (0, 1] and u2 in [0, 1) taken from consecutive counter outputs.
/// Draws are returned in pair order z0, z1, z0', z1', ...
class NormalStream {
 public:
  explicit NormalStream(CounterRng rng) noexcept : rng_(rng) {}

  double operator()() noexcept;

  const CounterRng& engine() const noexcept { return rng_; }

 private:
  CounterRng rng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace walker
