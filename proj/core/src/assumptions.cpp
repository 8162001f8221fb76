#include "walker/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace walker {
namespace {

// Relative slack for inequalities that hold with equality in exact arithmetic.
constexpr double kRoundoff = 1e-12;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

template <class Lhs, class Rhs>
CheckResult check_grid(const std::vector<double>& grid, Lhs lhs, Rhs rhs) {
  CheckResult res{true, std::numeric_limits<double>::infinity(), 0.0};
  for (double s : grid) {
    const double l = lhs(s);
    const double r = rhs(s);
    const double margin = l - r;
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_at = s;
    }
    if (margin < -kRoundoff * std::max({1.0, std::fabs(l), std::fabs(r)})) res.ok = false;
  }
  return res;
}

}  // namespace

AssumptionReport verify_assumptions(const Model& model, const GridSpec& grid, double potential_shift) {
  AssumptionReport rep;
  rep.potential_shift = potential_shift;

  const auto ts = linspace(grid.t_min, grid.t_max, grid.t_points);
  const auto xs = linspace(grid.x_min, grid.x_max, grid.x_points);
  const Kernel& K = model.kernel;
  const WaveForce& H = model.force;
  const Potential& U = model.potential;
  const PotentialConstants& c = U.verifier_constants();

  rep.kernel = check_grid(ts, [&](double t) { return -K.decay() * K(t); },
                          [&](double t) { return K.derivative(t); });

  const double fd_h = 1e-6;
  rep.h_growth = check_grid(
      xs, [&](double x) { return H.growth_aH() * (std::pow(std::fabs(x), H.growth_p1()) + 1.0); },
      [&](double x) {
        const double h = H.profile(x);
        const double dh = (H.profile(x + fd_h) - H.profile(x - fd_h)) / (2.0 * fd_h);
        return std::max(std::fabs(h), std::fabs(dh));
      });

  auto u = [&](double x) { return U.value({x, 0.0}) + potential_shift; };
  auto du = [&](double x) { return U.grad({x, 0.0}).x; };

  rep.u_growth = check_grid(xs, [&](double x) { return c.a0 * (std::pow(u(x), c.n0) + 1.0); },
                            [&](double x) { return std::fabs(du(x)); });
  rep.u_coercive = check_grid(xs, [&](double x) { return x * du(x); },
                              [&](double x) { return c.a1 * u(x) - c.a2; });

  const double expo = 2.0 * std::max(1.0, H.growth_p1() + c.eps1);
  rep.u_dominates = check_grid(xs, u, [&](double x) { return c.a3 * std::pow(std::fabs(x), expo); });
  const CheckResult range = check_grid(xs, u, [](double) { return 1.0; });
  if (!range.ok) {
    rep.u_dominates.ok = false;
    if (range.worst_margin < rep.u_dominates.worst_margin) {
      rep.u_dominates.worst_margin = range.worst_margin;
      rep.u_dominates.worst_at = range.worst_at;
    }
    std::ostringstream msg;
    msg << "potential leaves [1, inf): min U + shift = " << 1.0 + range.worst_margin << " at x = " << range.worst_at
        << " (shift = " << potential_shift << "; a constant shift leaves the drift unchanged)";
    rep.notes.push_back(msg.str());
  }
  if (potential_shift != 0.0) {
    std::ostringstream msg;
    msg << "potential checked as U + " << potential_shift << "; dynamics use U unshifted";
    rep.notes.push_back(msg.str());
  }

  // Phi + lambda x v >= lambda1 Phi on a square grid; lambda = 2^-k, k = 1..20.
  const auto box = linspace(-grid.lambda_box, grid.lambda_box, grid.lambda_points);
  for (int k = 1; k <= 20 && !rep.lambda; ++k) {
    const double lambda = std::ldexp(1.0, -k);
    double worst = std::numeric_limits<double>::infinity();
    bool degenerate = false;
    for (double x : box) {
      for (double v : box) {
        const double phi = u(x) + 0.5 * v * v;
        if (!(phi > 0.0)) {
          degenerate = true;
          continue;
        }
        worst = std::min(worst, (phi + lambda * x * v) / phi);
      }
    }
    if (degenerate && k == 1) rep.notes.push_back("Phi vanishes on the lambda grid; ratio skipped there");
    if (worst > 0.0) {
      rep.lambda = lambda;
      rep.lambda1 = std::min(worst, 1.0);
    }
  }
  if (!rep.lambda) rep.notes.push_back("no lambda in {2^-k : k = 1..20} gives a positive grid margin");
  return rep;
}

}  // namespace walker
