#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "walker/initial_past.hpp"

using namespace walker;

TEST_CASE("initial past: zero and constant") {
  const auto [x, v] = InitialPast::zero().value_at(-3.0);
  CHECK(x == Vec2{});
  CHECK(v == Vec2{});
  const auto [xc, vc] = InitialPast::constant(Vec2{1.0, 2.0}).value_at(-100.0);
  CHECK(xc == Vec2{1.0, 2.0});
  CHECK(vc == Vec2{});
  CHECK_THROWS_AS(InitialPast::zero().value_at(0.5), std::domain_error);
}

TEST_CASE("initial past: orbital value at zero, radius and period") {
  const double r0 = 0.92, w = 0.82;
  const InitialPast p = InitialPast::orbital(r0, w);
  const auto [x0, v0] = p.value_at(0.0);
  CHECK(x0.x == doctest::Approx(r0));
  CHECK(x0.y == doctest::Approx(0.0));
  CHECK(v0.x == doctest::Approx(0.0));
  CHECK(v0.y == doctest::Approx(r0 * w));
  for (double s = -30.0; s <= 0.0; s += 0.37) {
    const auto [x, v] = p.value_at(s);
    CHECK(norm(x) == doctest::Approx(r0).epsilon(1e-14));
    CHECK(norm(v) == doctest::Approx(r0 * w).epsilon(1e-14));
  }
  const auto [xp, vp] = p.value_at(-2.0 * std::numbers::pi / w);
  CHECK(norm(xp - x0) < 1e-13);
}

TEST_CASE("initial past: tabulated interpolation and extension") {
  const InitialPast p = InitialPast::tabulated({-2.0, -1.0, 0.0}, {Vec2{2, 0}, Vec2{1, 0}, Vec2{0, 0}},
                                               {Vec2{-1, 0}, Vec2{-1, 0}, Vec2{-1, 0}}, TailExtension::zero);
  CHECK(p.value_at(-0.5).first.x == doctest::Approx(0.5));
  CHECK(p.value_at(-1.5).first.x == doctest::Approx(1.5));
  CHECK(p.value_at(-5.0).first == Vec2{});
  const InitialPast held = InitialPast::tabulated({-1.0, 0.0}, {Vec2{3, 0}, Vec2{0, 0}}, {Vec2{}, Vec2{}},
                                                  TailExtension::constant);
  CHECK(held.value_at(-9.0).first == Vec2{3, 0});
  CHECK(std::string(p.kind()) == "tabulated");
}

TEST_CASE("initial past: malformed tables are rejected") {
  CHECK_THROWS_AS(InitialPast::tabulated({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(InitialPast::tabulated({-1.0, -0.5}, {Vec2{}, Vec2{}}, {Vec2{}, Vec2{}}), std::invalid_argument);
  CHECK_THROWS_AS(InitialPast::tabulated({0.0, -1.0}, {Vec2{}, Vec2{}}, {Vec2{}, Vec2{}}), std::invalid_argument);
  CHECK_THROWS_AS(InitialPast::tabulated({-1.0, 0.0}, {Vec2{}}, {Vec2{}, Vec2{}}), std::invalid_argument);
}

TEST_CASE("initial past: anchoring translates every variant") {
  const Vec2 x0{0.1, -0.2};
  const Vec2 v0{0.3, 0.0};
  for (const InitialPast& p :
       {InitialPast::zero(), InitialPast::constant(Vec2{1, 1}), InitialPast::orbital(0.9, 0.8),
        InitialPast::tabulated({-1.0, 0.0}, {Vec2{1, 0}, Vec2{2, 0}}, {Vec2{1, 0}, Vec2{1, 0}})}) {
    const InitialPast a = p.anchored_at(x0, v0);
    const auto [x, v] = a.value_at(0.0);
    CHECK(norm(x - x0) < 1e-15);
    CHECK(norm(v - v0) < 1e-15);
  }
  // Shape is kept: differences between two past times are unchanged.
  const InitialPast o = InitialPast::orbital(0.9, 0.8);
  const InitialPast a = o.anchored_at(Vec2{}, Vec2{});
  const Vec2 d1 = o.value_at(-1.0).first - o.value_at(-2.0).first;
  const Vec2 d2 = a.value_at(-1.0).first - a.value_at(-2.0).first;
  CHECK(norm(d1 - d2) < 1e-14);
}
