#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "walker/initial_past.hpp"
#include "walker/model.hpp"

namespace walker {

/// Quadrature refinement failed to settle.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Noiseless circular orbit x(t) = r0 (cos wt, sin wt).
struct OrbitSolution {
  double r0 = 0.0;
  double omega = 0.0;
  double residual_norm = 0.0;
  std::size_t quadrature_nodes = 0;
};

/// The two memory integrals of a circular orbit,
///   I_s = int_0^inf J1(4 pi r0 sin(wz/2)) sin(wz/2) e^{-z} dz,
///   I_c = int_0^inf J1(4 pi r0 sin(wz/2)) cos(wz/2) e^{-z} dz.
struct OrbitIntegrals {
  double sin_part = 0.0;
  double cos_part = 0.0;
  std::size_t nodes = 0;
  bool converged = false;
};

struct OrbitQuadrature {
  std::size_t initial_nodes = 64;
  std::size_t max_nodes = 1024;
  double tolerance = 1e-12;
};

/// Gauss-Laguerre evaluation, doubling the node count until successive
/// values differ by less than `tolerance`. Never throws; check `converged`.
OrbitIntegrals orbit_integrals(double r0, double omega, const OrbitQuadrature& quad = {});

struct OrbitResidual {
  double radial = 0.0;      ///< kappa r0 w^2 - k r0 + alpha I_s
  double tangential = 0.0;  ///< r0 w - alpha I_c
  std::size_t nodes = 0;

  double max_abs() const noexcept;
};

/// Residual of the circular-orbit balance. Throws NumericalError if the
/// quadrature does not converge within `quad.max_nodes`.
OrbitResidual orbit_residual(double r0, double omega, const ModelParams& params, const OrbitQuadrature& quad = {});

struct OrbitScan {
  double r_min = 0.05;
  double r_max = 3.0;
  double omega_min = 0.05;
  double omega_max = 3.0;
  int r_points = 60;
  int omega_points = 60;
  double tolerance = 1e-10;
  int max_newton_iterations = 60;
  double fd_step = 1e-6;
  double dedup_tolerance = 1e-6;
};

/// Grid scan for cells where both residual components change sign, then
/// damped Newton (central-difference Jacobian) from each cell. Solutions are
/// deduplicated and sorted by r0; only omega > 0 is reported. An empty list
/// means no orbit in the scanned box.
std::vector<OrbitSolution> solve_orbit(const ModelParams& params, const OrbitScan& scan = {},
                                       const OrbitQuadrature& quad = {});

/// Tabulated circular past on s in [-duration, 0] at spacing dt.
/// Throws std::invalid_argument if duration < horizon.
InitialPast orbital_past(const OrbitSolution& solution, double duration, double dt, double horizon);

}  // namespace walker
