#include "walker/history.hpp"

#include <stdexcept>

namespace walker {

HistoryBuffer::HistoryBuffer(std::size_t window_steps, double dt)
    : window_steps_(window_steps), cap_(window_steps + 1), dt_(dt), xs_(2 * cap_), ys_(2 * cap_) {
  if (window_steps == 0) throw std::invalid_argument("history window must hold at least one step");
  if (!(dt > 0.0)) throw std::invalid_argument("history dt must be > 0");
}

void HistoryBuffer::push(const Vec2& x) noexcept {
  std::size_t slot;
  if (filled_ < cap_) {
    slot = head_ + filled_;
    ++filled_;
  } else {
    slot = head_;
    head_ = head_ + 1 == cap_ ? 0 : head_ + 1;
  }
  slot %= cap_;
  xs_[slot] = x.x;
  ys_[slot] = x.y;
  xs_[slot + cap_] = x.x;
  ys_[slot + cap_] = x.y;
}

void HistoryBuffer::clear() noexcept {
  head_ = 0;
  filled_ = 0;
}

}  // namespace walker
