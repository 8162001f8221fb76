#include "walker/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "walker/bessel.hpp"

namespace walker {

void ModelParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("model.kappa must be > 0");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("model.alpha must be >= 0");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("model.sigma must be >= 0");
  if (!(spring_k >= 0.0) || !std::isfinite(spring_k)) throw std::invalid_argument("model.spring_k must be >= 0");
  if (dim != 1 && dim != 2) throw std::invalid_argument("model.dim must be 1 or 2");
}

Kernel Kernel::exponential(double decay_delta, double amplitude) {
  if (!(decay_delta > 0.0) || !std::isfinite(decay_delta)) {
    throw std::invalid_argument("kernel.delta must be > 0");
  }
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("kernel amplitude must be > 0");
  }
  return Kernel(Family::exponential, decay_delta, amplitude);
}

double Kernel::operator()(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("kernel evaluated at negative time");
  return amplitude_ * std::exp(-decay_ * t);
}

double Kernel::derivative(double t) const { return -decay_ * (*this)(t); }

double Kernel::tail_mass(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("kernel tail mass at negative time");
  return amplitude_ * std::exp(-decay_ * t) / decay_;
}

WaveForce::WaveForce(int dim, double growth_aH, double growth_p1, Family f)
    : family_(f), dim_(dim), growth_aH_(growth_aH), growth_p1_(growth_p1) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("wave force dim must be 1 or 2");
  if (!(growth_aH > 0.0)) throw std::invalid_argument("wave force a_H must be > 0");
  if (!(growth_p1 >= 0.0)) throw std::invalid_argument("wave force p1 must be >= 0");
}

WaveForce WaveForce::bessel_j1(int dim) {
  // max|J1| < 0.582 and max|J1'| = 1/2; the 2D profile J1(2 pi r) has slope
  // up to pi.
  return dim == 1 ? WaveForce(1, 1.0, 0.0) : WaveForce(2, 3.2, 0.0);
}

double WaveForce::profile(double r) const {
  if (!std::isfinite(r)) throw std::domain_error("wave force: non-finite argument");
  return dim_ == 1 ? detail::bessel_j1_unchecked(r)
                   : detail::bessel_j1_unchecked(2.0 * std::numbers::pi * r);
}

Vec2 WaveForce::operator()(const Vec2& d) const {
  if (!is_finite(d)) throw std::domain_error("wave force: non-finite displacement");
  if (dim_ == 1) return {detail::bessel_j1_unchecked(d.x), 0.0};
  const double r = std::hypot(d.x, d.y);
  if (r == 0.0) return {};
  const double s = detail::bessel_j1_unchecked(2.0 * std::numbers::pi * r) / r;
  return {s * d.x, s * d.y};
}

Potential Potential::harmonic(double spring_k, PotentialConstants constants) {
  if (!(spring_k >= 0.0) || !std::isfinite(spring_k)) {
    throw std::invalid_argument("potential spring_k must be >= 0");
  }
  if (constants.a3 == 0.0) constants.a3 = 0.5 * spring_k;
  return Potential(Family::harmonic, spring_k, constants);
}

double Potential::value(const Vec2& x) const noexcept { return 0.5 * spring_k_ * dot(x, x); }

Vec2 Potential::grad(const Vec2& x) const noexcept { return x * spring_k_; }

Model Model::canonical(const ModelParams& params, double kernel_delta) {
  params.validate();
  return Model{params, Kernel::exponential(kernel_delta), WaveForce::bessel_j1(params.dim),
               Potential::harmonic(params.spring_k)};
}

std::string_view to_string(Kernel::Family) noexcept { return "exponential"; }
std::string_view to_string(WaveForce::Family) noexcept { return "bessel_j1"; }
std::string_view to_string(Potential::Family) noexcept { return "harmonic"; }

}  // namespace walker
