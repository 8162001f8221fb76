#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "walker/model.hpp"
#include "walker/trajectory.hpp"

namespace walker {

/// Piecewise-constant density of r = |x| over post-burn-in samples.
struct RadialPdf {
  std::vector<double> edges;    // bins + 1 increasing edges
  std::vector<double> density;  // per bin, integrates to 1
  std::size_t sample_count = 0;
  std::size_t overflow = 0;     // samples outside [edges.front(), edges.back()]
  double burn_in_time = 0.0;

  std::size_t bins() const noexcept { return density.size(); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
  double midpoint(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

/// `bins` equal bins on [r_lo, r_hi].
std::vector<double> uniform_edges(double r_lo, double r_hi, std::size_t bins);

/// Histogram of |x_n| for t_n >= burn_in_fraction * t_end, normalized over
/// in-range samples. Throws std::invalid_argument for fewer than 2 bins,
/// non-increasing edges, or no in-range post-burn-in samples.
RadialPdf radial_pdf(const Trajectory& traj, double burn_in_fraction, std::span<const double> edges);
/// Same from raw radius samples (no burn-in).
RadialPdf radial_pdf(std::span<const double> radii, std::span<const double> edges);

/// sum |p_i - q_i| width_i in [0, 2]. Throws std::invalid_argument for
/// mismatched edges.
double pdf_l1_distance(const RadialPdf& p, const RadialPdf& q);

/// Midpoint of the largest bin (ties toward smaller r), shifted by the vertex
/// of the parabola through it and its neighbours. Throws
/// std::invalid_argument for an all-zero density.
double peak_location(const RadialPdf& pdf);

/// Sample standard deviation of r = |x| after burn-in.
double radial_spread(const Trajectory& traj, double burn_in_fraction);

/// Ensemble means of Phi = U + |v|^2/2 at each output time.
struct MomentSeries {
  std::vector<double> times;
  std::vector<double> mean_phi;
  std::vector<double> mean_phi_p;
  /// Mean of exp(beta Phi), beta = `beta`; watched only for finiteness.
  std::vector<double> mean_exp_phi;
  double p = 2.0;
  double beta = 0.01;
  std::size_t members = 0;
};

/// Throws std::invalid_argument for fewer than 2 members or mismatched grids.
MomentSeries ensemble_energy_moments(std::span<const Trajectory> members, const Potential& potential, double p,
                                     double beta = 0.01);

/// Fourth-order (or `order`) structure functions over lags given in time units.
struct StructureFunction {
  std::vector<double> lags;
  std::vector<double> sx;
  std::vector<double> sv;
  double slope_x = 0.0;  // NaN when some value is not positive
  double slope_v = 0.0;
  int order = 4;
};

/// Time averages of |x(t+tau) - x(t)|^order and |v(t+tau) - v(t)|^order with
/// log-log least-squares slopes. Lags must be positive multiples of the
/// sample spacing and at most a tenth of the span; at least three lags.
StructureFunction structure_function(const Trajectory& traj, std::span<const double> lags, int order = 4);

enum class Observable { position, velocity, radius, speed };

/// The observable sampled along the trajectory at the nearest grid point to
/// each time in `t_grid`. These samples represent the time-averaged measure's
/// marginal. Throws std::out_of_range for times outside the run.
std::vector<double> time_averaged_measure(const Trajectory& traj, Observable obs, std::span<const double> t_grid);
/// All samples with t >= t_from.
std::vector<double> time_averaged_measure(const Trajectory& traj, Observable obs, double t_from);

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and `cdf`.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);

/// Least-squares line with a 95% interval on the slope. The slope error is
/// inflated by the lag-1 autocorrelation of the residuals (effective sample
/// size n (1 - rho) / (1 + rho)).
struct TrendFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double lag1_autocorrelation = 0.0;
  double effective_samples = 0.0;

  bool ci_contains(double v) const noexcept { return ci_low <= v && v <= ci_high; }
};
TrendFit fit_trend(std::span<const double> x, std::span<const double> y);

}  // namespace walker
