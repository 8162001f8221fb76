#include "walker/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <tuple>
#include <sstream>

#include "walker/bessel.hpp"
#include "walker/quadrature.hpp"

namespace walker {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

std::pair<double, double> integrals_at(const GaussLaguerreRule& rule, double r0, double omega) {
  double is = 0.0;
  double ic = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double half = 0.5 * omega * rule.nodes[i];
    const double s = std::sin(half);
    const double c = std::cos(half);
    const double j = detail::bessel_j1_unchecked(kFourPi * r0 * s);
    is += rule.weights[i] * j * s;
    ic += rule.weights[i] * j * c;
  }
  return {is, ic};
}

OrbitResidual residual_from(const OrbitIntegrals& in, double r0, double omega, const ModelParams& p) {
  return {p.kappa * r0 * omega * omega - p.spring_k * r0 + p.alpha * in.sin_part,
          r0 * omega - p.alpha * in.cos_part, in.nodes};
}

}  // namespace

OrbitIntegrals orbit_integrals(double r0, double omega, const OrbitQuadrature& quad) {
  OrbitIntegrals out;
  std::size_t n = quad.initial_nodes;
  auto [is, ic] = integrals_at(gauss_laguerre(n), r0, omega);
  out = {is, ic, n, false};
  while (n < quad.max_nodes) {
    n *= 2;
    const auto [is2, ic2] = integrals_at(gauss_laguerre(n), r0, omega);
    const bool settled = std::fabs(is2 - out.sin_part) < quad.tolerance && std::fabs(ic2 - out.cos_part) < quad.tolerance;
    out = {is2, ic2, n, settled};
    if (settled) break;
  }
  return out;
}

double OrbitResidual::max_abs() const noexcept { return std::max(std::fabs(radial), std::fabs(tangential)); }

OrbitResidual orbit_residual(double r0, double omega, const ModelParams& params, const OrbitQuadrature& quad) {
  if (!std::isfinite(r0) || !std::isfinite(omega)) throw std::domain_error("orbit_residual: non-finite input");
  const OrbitIntegrals in = orbit_integrals(r0, omega, quad);
  if (!in.converged) {
    std::ostringstream msg;
    msg << "orbit quadrature did not converge at r0 = " << r0 << ", omega = " << omega << " with " << in.nodes
        << " nodes";
    throw NumericalError(msg.str());
  }
  return residual_from(in, r0, omega, params);
}

std::vector<OrbitSolution> solve_orbit(const ModelParams& params, const OrbitScan& scan, const OrbitQuadrature& quad) {
  if (!(scan.r_min > 0.0) || !(scan.r_max > scan.r_min) || !(scan.omega_max > scan.omega_min) || scan.r_points < 2 ||
      scan.omega_points < 2) {
    throw std::invalid_argument("solve_orbit: invalid scan box");
  }
  const int nr = scan.r_points;
  const int nw = scan.omega_points;
  auto r_at = [&](int i) { return scan.r_min + (scan.r_max - scan.r_min) * i / (nr - 1); };
  auto w_at = [&](int j) { return scan.omega_min + (scan.omega_max - scan.omega_min) * j / (nw - 1); };

  std::vector<OrbitResidual> grid(static_cast<std::size_t>(nr * nw));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nw; ++j) {
      grid[static_cast<std::size_t>(i * nw + j)] = residual_from(orbit_integrals(r_at(i), w_at(j), quad), r_at(i), w_at(j), params);
    }
  }

  auto eval = [&](double r, double w) { return orbit_residual(r, w, params, quad); };
  auto newton = [&](double r, double w) -> std::optional<OrbitSolution> {
    OrbitResidual f = eval(r, w);
    const double h = scan.fd_step;
    for (int it = 0; it < scan.max_newton_iterations && f.max_abs() > 1e-14; ++it) {
      const OrbitResidual fr_p = eval(r + h, w), fr_m = eval(r - h, w);
      const OrbitResidual fw_p = eval(r, w + h), fw_m = eval(r, w - h);
      const double a = (fr_p.radial - fr_m.radial) / (2 * h);
      const double b = (fw_p.radial - fw_m.radial) / (2 * h);
      const double c = (fr_p.tangential - fr_m.tangential) / (2 * h);
      const double d = (fw_p.tangential - fw_m.tangential) / (2 * h);
      const double det = a * d - b * c;
      if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
      const double dr = (d * f.radial - b * f.tangential) / det;
      const double dw = (-c * f.radial + a * f.tangential) / det;

      double lambda = 1.0;
      bool improved = false;
      for (int k = 0; k < 30; ++k, lambda *= 0.5) {
        const double rn = r - lambda * dr;
        const double wn = w - lambda * dw;
        if (!(rn > 0.0)) continue;
        const OrbitResidual fn = eval(rn, wn);
        if (fn.max_abs() < f.max_abs()) {
          r = rn;
          w = wn;
          f = fn;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    if (!(f.max_abs() <= scan.tolerance)) return std::nullopt;
    return OrbitSolution{r, std::fabs(w), f.max_abs(), f.nodes};
  };

  std::vector<OrbitSolution> found;
  for (int i = 0; i + 1 < nr; ++i) {
    for (int j = 0; j + 1 < nw; ++j) {
      std::array<const OrbitResidual*, 4> corners = {
          &grid[static_cast<std::size_t>(i * nw + j)], &grid[static_cast<std::size_t>(i * nw + j + 1)],
          &grid[static_cast<std::size_t>((i + 1) * nw + j)], &grid[static_cast<std::size_t>((i + 1) * nw + j + 1)]};
      auto mixed = [&](auto field) {
        bool pos = false, neg = false;
        for (const auto* c : corners) {
          const double v = field(*c);
          pos = pos || v >= 0.0;
          neg = neg || v <= 0.0;
        }
        return pos && neg;
      };
      if (!mixed([](const OrbitResidual& f) { return f.radial; }) ||
          !mixed([](const OrbitResidual& f) { return f.tangential; })) {
        continue;
      }
      std::optional<OrbitSolution> sol;
      try {
        sol = newton(0.5 * (r_at(i) + r_at(i + 1)), 0.5 * (w_at(j) + w_at(j + 1)));
      } catch (const NumericalError&) {
        continue;
      }
      if (!sol) continue;
      if (sol->r0 < scan.r_min || sol->r0 > scan.r_max || sol->omega < scan.omega_min || sol->omega > scan.omega_max) {
        continue;
      }
      const bool dup = std::any_of(found.begin(), found.end(), [&](const OrbitSolution& s) {
        return std::fabs(s.r0 - sol->r0) <= scan.dedup_tolerance && std::fabs(s.omega - sol->omega) <= scan.dedup_tolerance;
      });
      if (!dup) found.push_back(*sol);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.r0 < b.r0; });
  return found;
}

InitialPast orbital_past(const OrbitSolution& solution, double duration, double dt, double horizon) {
  if (!(dt > 0.0)) throw std::invalid_argument("orbital_past: dt must be > 0");
  if (!(duration >= horizon)) throw std::invalid_argument("orbital_past: duration shorter than the memory horizon");
  const auto steps = static_cast<std::size_t>(std::ceil(duration / dt - 1e-9));
  const InitialPast analytic = InitialPast::orbital(solution.r0, solution.omega);
  std::vector<double> times(steps + 1);
  std::vector<Vec2> xs(steps + 1);
  std::vector<Vec2> vs(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double s = -static_cast<double>(steps - i) * dt;
    times[i] = s;
    std::tie(xs[i], vs[i]) = analytic.value_at(s);
  }
  return InitialPast::tabulated(std::move(times), std::move(xs), std::move(vs), TailExtension::zero);
}

}  // namespace walker
