#include "walker/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walker {

double energy_phi(const Potential& potential, const Vec2& x, const Vec2& v) {
  return potential.value(x) + 0.5 * dot(v, v);
}

double perturbed_energy(const Potential& potential, const Vec2& x, const Vec2& v, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("perturbed_energy: lambda must lie in (0, 1)");
  return energy_phi(potential, x, v) + lambda * dot(x, v);
}

double weighted_path_norm(std::span<const double> times, std::span<const Vec2> positions, double q,
                          const Kernel& kernel, TailExtension extension) {
  if (!(q >= 0.0)) throw std::domain_error("weighted_path_norm: q must be >= 0");
  if (times.empty() || times.size() != positions.size()) {
    throw std::invalid_argument("weighted_path_norm: times and positions must be non-empty and equal length");
  }
  if (times.back() != 0.0) throw std::invalid_argument("weighted_path_norm: last sample must be at s = 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("weighted_path_norm: times must increase");
  }

  auto integrand = [&](std::size_t i) { return std::pow(norm(positions[i]), q) * kernel(-times[i]); };

  double sum = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    sum += 0.5 * (times[i] - times[i - 1]) * (integrand(i) + integrand(i - 1));
  }
  if (extension == TailExtension::constant) {
    sum += std::pow(norm(positions.front()), q) * kernel.tail_mass(-times.front());
  }
  return sum;
}

double growth_seminorm(const Trajectory& path, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("growth_seminorm: rho must be > 0");
  if (path.empty()) throw std::invalid_argument("growth_seminorm: empty trajectory");
  double best = 0.0;
  for (std::size_t n = 0; n < path.size(); ++n) {
    const double num = norm(path.positions[n]) + norm(path.velocities[n]);
    best = std::max(best, num / (1.0 + std::pow(std::fabs(path.times[n]), rho)));
  }
  return best;
}

}  // namespace walker
