#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "walker/orbit.hpp"

using namespace walker;

TEST_CASE("orbit residual: origin is a trivial root") {
  const OrbitResidual f = orbit_residual(0.0, 0.7, ModelParams{});
  CHECK(f.radial == 0.0);
  CHECK(f.tangential == 0.0);
}

TEST_CASE("orbit residual: without memory the balance is contradictory") {
  ModelParams p;
  p.alpha = 0.0;
  const double w = std::sqrt(p.spring_k / p.kappa);
  const OrbitResidual f = orbit_residual(1.0, w, p);
  CHECK(std::fabs(f.radial) < 1e-14);
  CHECK(f.tangential == doctest::Approx(w));
  CHECK(solve_orbit(p).empty());
}

TEST_CASE("orbit residual: parity in omega") {
  const ModelParams p;
  const OrbitResidual a = orbit_residual(0.8, 0.6, p);
  const OrbitResidual b = orbit_residual(0.8, -0.6, p);
  CHECK(a.radial == doctest::Approx(b.radial).epsilon(1e-13));
  CHECK(a.tangential == doctest::Approx(-b.tangential).epsilon(1e-13));
}

TEST_CASE("orbit integrals: Gauss-Laguerre agrees with the trapezoid oracle") {
  for (auto [r0, w] : {std::pair{0.92, 0.82}, std::pair{0.3, 1.7}, std::pair{1.5, 0.4}}) {
    const OrbitIntegrals gl = orbit_integrals(r0, w);
    CHECK(gl.converged);
    const auto tr = oracle::orbit_integrals_trapezoid(r0, w);
    CHECK(std::fabs(gl.sin_part - tr.sin_part) < 1e-8);
    CHECK(std::fabs(gl.cos_part - tr.cos_part) < 1e-8);
  }
}

TEST_CASE("orbit integrals: non-convergence is reported, and residual throws") {
  OrbitQuadrature tight;
  tight.max_nodes = 64;
  CHECK_FALSE(orbit_integrals(0.92, 0.82, tight).converged);
  CHECK_THROWS_AS(orbit_residual(0.92, 0.82, ModelParams{}, tight), NumericalError);
}

TEST_CASE("solve_orbit: paper parameters give a single orbit") {
  const auto start = std::chrono::steady_clock::now();
  const auto sols = solve_orbit(ModelParams{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(sols.size() == 1);
  const OrbitSolution& s = sols.front();
  CHECK(s.r0 == doctest::Approx(0.92039186).epsilon(1e-6));
  CHECK(s.omega == doctest::Approx(0.82115619).epsilon(1e-6));
  CHECK(s.residual_norm < 1e-10);
  CHECK(orbit_residual(s.r0, s.omega, ModelParams{}).max_abs() < 1e-10);
  MESSAGE("solve_orbit wall time " << secs << " s");

  // Independent check of the balance with the trapezoid oracle.
  const ModelParams p;
  const auto tr = oracle::orbit_integrals_trapezoid(s.r0, s.omega);
  const double f1 = p.kappa * s.r0 * s.omega * s.omega - p.spring_k * s.r0 + p.alpha * tr.sin_part;
  const double f2 = s.r0 * s.omega - p.alpha * tr.cos_part;
  CHECK(std::fabs(f1) < 1e-7);
  CHECK(std::fabs(f2) < 1e-7);
}

TEST_CASE("orbital_past: samples on the circle with the right speed") {
  const OrbitSolution s{0.92, 0.82, 0.0, 0};
  const InitialPast p = orbital_past(s, 20.0, 1.0 / 64, 19.0);
  const auto& tab = std::get<InitialPast::Tabulated>(p.variant());
  CHECK(tab.times.front() == doctest::Approx(-20.0));
  CHECK(tab.times.back() == 0.0);
  for (std::size_t i = 0; i < tab.times.size(); i += 17) {
    CHECK(norm(tab.positions[i]) == doctest::Approx(0.92).epsilon(1e-14));
    CHECK(norm(tab.velocities[i]) == doctest::Approx(0.92 * 0.82).epsilon(1e-14));
  }
  CHECK_THROWS_AS(orbital_past(s, 10.0, 1.0 / 64, 19.0), std::invalid_argument);
}
