#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "walker/vec2.hpp"

namespace walker {

/// Sliding window of the most recent positions on the step grid.
///
/// Holds up to `capacity()` = window_steps + 1 entries ordered oldest to
/// newest; entry j of `window()` sits at time t - (filled - 1 - j) dt, with
/// the newest entry at the current time t. Each entry is written twice into a
/// mirrored ring so the live window is always one contiguous span.
class HistoryBuffer {
 public:
  HistoryBuffer(std::size_t window_steps, double dt);

  std::size_t window_steps() const noexcept { return window_steps_; }
  std::size_t capacity() const noexcept { return cap_; }
  std::size_t filled() const noexcept { return filled_; }
  double dt() const noexcept { return dt_; }
  bool empty() const noexcept { return filled_ == 0; }

  void push(const Vec2& x) noexcept;
  void clear() noexcept;

  /// Live entries, oldest first.
  std::span<const double> xs() const noexcept { return {xs_.data() + head_, filled_}; }
  std::span<const double> ys() const noexcept { return {ys_.data() + head_, filled_}; }
  /// Entry j steps before the newest (0 = newest).
  Vec2 back(std::size_t j) const noexcept {
    const std::size_t i = head_ + filled_ - 1 - j;
    return {xs_[i], ys_[i]};
  }

 private:
  std::size_t window_steps_;
  std::size_t cap_;
  double dt_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::size_t head_ = 0;  // index of the oldest live entry in [0, cap_)
  std::size_t filled_ = 0;
};

}  // namespace walker
