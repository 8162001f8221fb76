#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "walker/functionals.hpp"
#include "walker/vec2.hpp"

namespace walker {

/// The prescribed path on s <= 0 that seeds the memory integral.
class InitialPast {
 public:
  struct Zero {};
  struct Constant {
    Vec2 point;
  };
  /// Samples at ascending times ending at s = 0, linearly interpolated;
  /// `extension` says what lies before the first sample.
  struct Tabulated {
    std::vector<double> times;
    std::vector<Vec2> positions;
    std::vector<Vec2> velocities;
    TailExtension extension = TailExtension::zero;
  };
  /// x(s) = r0 (cos ws, sin ws) + offset, v(s) = r0 w (-sin ws, cos ws) + velocity_offset.
  struct Orbital {
    double r0 = 0.0;
    double omega = 0.0;
    Vec2 offset;
    Vec2 velocity_offset;
  };

  using Variant = std::variant<Zero, Constant, Tabulated, Orbital>;

  InitialPast() = default;
  static InitialPast zero() { return InitialPast(Zero{}); }
  static InitialPast constant(const Vec2& point) { return InitialPast(Constant{point}); }
  /// Throws std::invalid_argument if the samples are malformed.
  static InitialPast tabulated(std::vector<double> times, std::vector<Vec2> positions, std::vector<Vec2> velocities,
                               TailExtension extension = TailExtension::zero);
  static InitialPast orbital(double r0, double omega);

  const Variant& variant() const noexcept { return v_; }
  const char* kind() const noexcept;

  /// (x(s), v(s)) for s <= 0. Throws std::domain_error for s > 0.
  std::pair<Vec2, Vec2> value_at(double s) const;

  /// Same past translated so that value_at(0) equals (x0, v0).
  InitialPast anchored_at(const Vec2& x0, const Vec2& v0) const;

 private:
  explicit InitialPast(Variant v) : v_(std::move(v)) {}

  Variant v_ = Zero{};
};

}  // namespace walker
