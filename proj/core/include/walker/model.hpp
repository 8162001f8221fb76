#pragma once

#include <string>
#include <string_view>

#include "walker/vec2.hpp"

namespace walker {

/// Physical constants of the stroboscopic trajectory equation
///   dx = v dt,
///   kappa dv = (-v - grad U(x) + alpha * int H(x(t)-x(s)) K(t-s) ds) dt + sigma dW.
struct ModelParams {
  double kappa = 0.42;
  double alpha = 4.47;
  double sigma = 0.08;
  double spring_k = 0.35;
  int dim = 2;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Memory kernel K(t) with K'(t) <= -delta K(t).
class Kernel {
 public:
  enum class Family { exponential };

  static Kernel exponential(double decay_delta = 1.0, double amplitude = 1.0);

  Family family() const noexcept { return family_; }
  double decay() const noexcept { return decay_; }
  double amplitude() const noexcept { return amplitude_; }

  /// K(t); throws std::domain_error for t < 0.
  double operator()(double t) const;
  /// K'(t).
  double derivative(double t) const;
  /// Integral of K over [t, infinity).
  double tail_mass(double t) const;

 private:
  Kernel(Family f, double decay, double amplitude) : family_(f), decay_(decay), amplitude_(amplitude) {}

  Family family_;
  double decay_;
  double amplitude_;
};

/// Pilot-wave force H. In 1D H(d) = J1(d); in 2D H(d) = J1(2 pi |d|) d/|d|.
class WaveForce {
 public:
  enum class Family { bessel_j1 };

  WaveForce(int dim, double growth_aH, double growth_p1, Family f = Family::bessel_j1);
  /// Canonical force for `dim` with growth constants that hold for J1.
  static WaveForce bessel_j1(int dim);

  Family family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  double growth_aH() const noexcept { return growth_aH_; }
  double growth_p1() const noexcept { return growth_p1_; }

  /// H(d). Throws std::domain_error for non-finite input.
  Vec2 operator()(const Vec2& displacement) const;
  /// Radial profile h(r) with H(d) = h(|d|) d/|d| (2D) or H(d) = h(d) (1D).
  double profile(double r) const;

 private:
  Family family_;
  int dim_;
  double growth_aH_;
  double growth_p1_;
};

/// Constants entering the growth/coercivity/domination conditions on U.
/// They are only consumed by the assumption verifier.
struct PotentialConstants {
  double a0 = 1.0;
  double n0 = 1.0;
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 0.0;  // 0 selects spring_k / 2
  double eps1 = 0.5;
};

/// External potential U. Harmonic: U(x) = k|x|^2 / 2.
class Potential {
 public:
  enum class Family { harmonic };

  static Potential harmonic(double spring_k, PotentialConstants constants = {});

  Family family() const noexcept { return family_; }
  double spring_k() const noexcept { return spring_k_; }
  const PotentialConstants& verifier_constants() const noexcept { return constants_; }

  double value(const Vec2& x) const noexcept;
  Vec2 grad(const Vec2& x) const noexcept;

 private:
  Potential(Family f, double k, PotentialConstants c) : family_(f), spring_k_(k), constants_(c) {}

  Family family_;
  double spring_k_;
  PotentialConstants constants_;
};

/// Everything the integrator needs to evaluate the drift.
struct Model {
  ModelParams params;
  Kernel kernel = Kernel::exponential();
  WaveForce force = WaveForce::bessel_j1(2);
  Potential potential = Potential::harmonic(0.35);

  /// Canonical model: exponential kernel, J1 force, harmonic potential.
  static Model canonical(const ModelParams& params, double kernel_delta = 1.0);
};

std::string_view to_string(Kernel::Family f) noexcept;
std::string_view to_string(WaveForce::Family f) noexcept;
std::string_view to_string(Potential::Family f) noexcept;

}  // namespace walker
