#pragma once

#include <span>

#include "walker/model.hpp"
#include "walker/trajectory.hpp"
#include "walker/vec2.hpp"

namespace walker {

/// Phi(x, v) = U(x) + |v|^2 / 2.
double energy_phi(const Potential& potential, const Vec2& x, const Vec2& v);

/// Phi(x, v) + lambda x.v, lambda in (0, 1); throws std::domain_error otherwise.
double perturbed_energy(const Potential& potential, const Vec2& x, const Vec2& v, double lambda);

/// How a tabulated past continues below its earliest sample.
enum class TailExtension {
  zero,      ///< x(s) = 0 before the first sample
  constant,  ///< x(s) = x(first sample) before the first sample
};

/// Weighted path norm  int_{-inf}^0 |x(s)|^q K(-s) ds  of a past tabulated at
/// ascending times `times` (last entry 0). Trapezoidal on the samples plus
/// the closed-form kernel tail for the declared extension.
/// Throws std::domain_error for q < 0 and std::invalid_argument for a
/// malformed grid.
double weighted_path_norm(std::span<const double> times, std::span<const Vec2> positions, double q,
                          const Kernel& kernel, TailExtension extension = TailExtension::zero);

/// sup_n (|x_n| + |v_n|) / (1 + |t_n|^rho). Throws std::domain_error for rho <= 0
/// and std::invalid_argument for an empty trajectory.
double growth_seminorm(const Trajectory& path, double rho);

}  // namespace walker
