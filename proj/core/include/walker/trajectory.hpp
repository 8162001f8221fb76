#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "walker/model.hpp"
#include "walker/vec2.hpp"

namespace walker {

/// Uniformly sampled path (t_n, x_n, v_n) produced by the integrator.
struct Trajectory {
  int dim = 1;
  std::vector<double> times;
  std::vector<Vec2> positions;
  std::vector<Vec2> velocities;

  // Configuration echo.
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::size_t stride = 1;
  ModelParams params;

  std::size_t size() const noexcept { return times.size(); }
  bool empty() const noexcept { return times.empty(); }

  void reserve(std::size_t n) {
    times.reserve(n);
    positions.reserve(n);
    velocities.reserve(n);
  }
  void push_back(double t, const Vec2& x, const Vec2& v) {
    times.push_back(t);
    positions.push_back(x);
    velocities.push_back(v);
  }
};

}  // namespace walker
