#include <doctest.h>

#include "walker/history.hpp"

using namespace walker;

TEST_CASE("history: fills oldest first, then slides") {
  HistoryBuffer h(3, 0.5);
  CHECK(h.capacity() == 4);
  CHECK(h.empty());
  for (int i = 0; i < 3; ++i) h.push(Vec2{static_cast<double>(i), -static_cast<double>(i)});
  CHECK(h.filled() == 3);
  CHECK(h.xs()[0] == 0.0);
  CHECK(h.back(0) == Vec2{2.0, -2.0});
  for (int i = 3; i < 11; ++i) h.push(Vec2{static_cast<double>(i), -static_cast<double>(i)});
  REQUIRE(h.filled() == 4);
  const auto xs = h.xs();
  const auto ys = h.ys();
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(xs[j] == 7.0 + static_cast<double>(j));
    CHECK(ys[j] == -(7.0 + static_cast<double>(j)));
  }
  CHECK(h.back(3) == Vec2{7.0, -7.0});
  h.clear();
  CHECK(h.empty());
}

TEST_CASE("history: contiguous spans survive many wraps") {
  HistoryBuffer h(5, 1.0);
  for (int i = 0; i < 1000; ++i) {
    h.push(Vec2{static_cast<double>(i), 0.0});
    const auto xs = h.xs();
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) CHECK(xs[j + 1] == xs[j] + 1.0);
    CHECK(xs.back() == static_cast<double>(i));
  }
}
