#include "walker/rng.hpp"

#include <cmath>
#include <numbers>

namespace walker {

CounterRng CounterRng::child(std::uint64_t index) const noexcept {
  const std::uint64_t k = mix(key_ ^ mix(index * kGamma + 0xD1B54A32D192ED03ULL));
  return CounterRng(k, 0, 0);
}

double NormalStream::operator()() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = rng_.uniform_pos();
  const double u2 = rng_.uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

}  // namespace walker
