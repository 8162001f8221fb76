#include "walker/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "walker/functionals.hpp"

namespace walker {
namespace {

void check_edges(std::span<const double> edges) {
  if (edges.size() < 3) throw std::invalid_argument("radial_pdf: need at least 2 bins");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) throw std::invalid_argument("radial_pdf: edges must increase");
  }
}

std::size_t first_after_burn_in(const Trajectory& traj, double burn_in_fraction, double& burn_in_time) {
  if (traj.empty()) throw std::invalid_argument("empty trajectory");
  if (!(burn_in_fraction >= 0.0 && burn_in_fraction < 1.0)) {
    throw std::invalid_argument("burn-in fraction must lie in [0, 1)");
  }
  const double t0 = traj.times.front();
  burn_in_time = t0 + burn_in_fraction * (traj.times.back() - t0);
  const auto it = std::lower_bound(traj.times.begin(), traj.times.end(), burn_in_time);
  return static_cast<std::size_t>(it - traj.times.begin());
}

double observe(const Trajectory& traj, Observable obs, std::size_t n) {
  switch (obs) {
    case Observable::position: return traj.positions[n].x;
    case Observable::velocity: return traj.velocities[n].x;
    case Observable::radius: return norm(traj.positions[n]);
    case Observable::speed: return norm(traj.velocities[n]);
  }
  return 0.0;
}

double student_t975(double df) {
  constexpr double z = 1.959963984540054;
  if (!(df > 0.0)) return std::numeric_limits<double>::infinity();
  const double z3 = z * z * z;
  const double z5 = z3 * z * z;
  return z + (z3 + z) / (4.0 * df) + (5.0 * z5 + 16.0 * z3 + 3.0 * z) / (96.0 * df * df);
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

std::vector<double> uniform_edges(double r_lo, double r_hi, std::size_t bins) {
  if (bins < 2 || !(r_hi > r_lo)) throw std::invalid_argument("uniform_edges: need bins >= 2 and r_hi > r_lo");
  std::vector<double> e(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) e[i] = r_lo + (r_hi - r_lo) * static_cast<double>(i) / static_cast<double>(bins);
  return e;
}

RadialPdf radial_pdf(std::span<const double> radii, std::span<const double> edges) {
  check_edges(edges);
  RadialPdf pdf;
  pdf.edges.assign(edges.begin(), edges.end());
  const std::size_t bins = edges.size() - 1;
  std::vector<std::size_t> counts(bins, 0);
  for (double r : radii) {
    if (r < edges.front() || r > edges.back() || !std::isfinite(r)) {
      ++pdf.overflow;
      continue;
    }
    auto it = std::upper_bound(edges.begin(), edges.end(), r);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin());
    bin = bin == 0 ? 0 : std::min(bin - 1, bins - 1);
    ++counts[bin];
    ++pdf.sample_count;
  }
  if (pdf.sample_count == 0) throw std::invalid_argument("radial_pdf: no samples inside the bin range");
  pdf.density.resize(bins);
  const auto total = static_cast<double>(pdf.sample_count);
  for (std::size_t i = 0; i < bins; ++i) pdf.density[i] = static_cast<double>(counts[i]) / (total * pdf.width(i));
  return pdf;
}

RadialPdf radial_pdf(const Trajectory& traj, double burn_in_fraction, std::span<const double> edges) {
  double burn_in_time = 0.0;
  const std::size_t first = first_after_burn_in(traj, burn_in_fraction, burn_in_time);
  if (first >= traj.size()) throw std::invalid_argument("radial_pdf: nothing left after burn-in");
  std::vector<double> radii;
  radii.reserve(traj.size() - first);
  for (std::size_t n = first; n < traj.size(); ++n) radii.push_back(norm(traj.positions[n]));
  RadialPdf pdf = radial_pdf(radii, edges);
  pdf.burn_in_time = burn_in_time;
  return pdf;
}

double pdf_l1_distance(const RadialPdf& p, const RadialPdf& q) {
  if (p.edges != q.edges) throw std::invalid_argument("pdf_l1_distance: bin edges differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.bins(); ++i) sum += std::fabs(p.density[i] - q.density[i]) * p.width(i);
  return sum;
}

double peak_location(const RadialPdf& pdf) {
  if (pdf.bins() == 0) throw std::invalid_argument("peak_location: empty pdf");
  const auto it = std::max_element(pdf.density.begin(), pdf.density.end());  // first max wins ties
  if (!(*it > 0.0)) throw std::invalid_argument("peak_location: density is identically zero");
  const auto k = static_cast<std::size_t>(it - pdf.density.begin());
  const double mid = pdf.midpoint(k);
  if (k == 0 || k + 1 == pdf.bins()) return mid;

  // Parabola through the three bin midpoints.
  const double x0 = pdf.midpoint(k - 1), x1 = mid, x2 = pdf.midpoint(k + 1);
  const double y0 = pdf.density[k - 1], y1 = pdf.density[k], y2 = pdf.density[k + 1];
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double curv = (d12 - d01) / (x2 - x0);
  if (!(curv < 0.0)) return mid;
  const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curv);
  return std::clamp(vertex, pdf.edges[k], pdf.edges[k + 1]);
}

double radial_spread(const Trajectory& traj, double burn_in_fraction) {
  double burn_in_time = 0.0;
  const std::size_t first = first_after_burn_in(traj, burn_in_fraction, burn_in_time);
  std::vector<double> r;
  for (std::size_t n = first; n < traj.size(); ++n) r.push_back(norm(traj.positions[n]));
  if (r.size() < 2) throw std::invalid_argument("radial_spread: too few samples");
  return std::sqrt(variance(r));
}

MomentSeries ensemble_energy_moments(std::span<const Trajectory> members, const Potential& potential, double p,
                                     double beta) {
  if (members.size() < 2) throw std::invalid_argument("ensemble_energy_moments: need at least 2 members");
  const std::size_t len = members.front().size();
  for (const auto& m : members) {
    if (m.size() != len) throw std::invalid_argument("ensemble_energy_moments: members have different lengths");
  }
  MomentSeries out;
  out.p = p;
  out.beta = beta;
  out.members = members.size();
  out.times = members.front().times;
  out.mean_phi.assign(len, 0.0);
  out.mean_phi_p.assign(len, 0.0);
  out.mean_exp_phi.assign(len, 0.0);
  // Each time slot sums members in index order, so the result does not depend
  // on which worker produced which member.
  for (std::size_t n = 0; n < len; ++n) {
    double s1 = 0.0, sp = 0.0, se = 0.0;
    for (const auto& m : members) {
      const double phi = energy_phi(potential, m.positions[n], m.velocities[n]);
      s1 += phi;
      sp += std::pow(phi, p);
      se += std::exp(beta * phi);
    }
    const auto k = static_cast<double>(members.size());
    out.mean_phi[n] = s1 / k;
    out.mean_phi_p[n] = sp / k;
    out.mean_exp_phi[n] = se / k;
  }
  return out;
}

StructureFunction structure_function(const Trajectory& traj, std::span<const double> lags, int order) {
  if (lags.size() < 3) throw std::invalid_argument("structure_function: need at least 3 lags");
  if (traj.size() < 2) throw std::invalid_argument("structure_function: trajectory too short");
  const double spacing = traj.times[1] - traj.times[0];
  const double span = traj.times.back() - traj.times.front();
  StructureFunction out;
  out.order = order;
  for (double tau : lags) {
    const double steps = tau / spacing;
    if (!(tau > 0.0) || std::fabs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
      throw std::invalid_argument("structure_function: lags must be positive multiples of the sample spacing");
    }
    if (tau > span / 10.0 * (1.0 + 1e-12)) throw std::invalid_argument("structure_function: lag exceeds span / 10");
    const auto k = static_cast<std::size_t>(std::llround(steps));
    double sx = 0.0, sv = 0.0;
    const std::size_t count = traj.size() - k;
    for (std::size_t n = 0; n < count; ++n) {
      sx += std::pow(norm(traj.positions[n + k] - traj.positions[n]), order);
      sv += std::pow(norm(traj.velocities[n + k] - traj.velocities[n]), order);
    }
    out.lags.push_back(tau);
    out.sx.push_back(sx / static_cast<double>(count));
    out.sv.push_back(sv / static_cast<double>(count));
  }
  auto slope_of = [&](const std::vector<double>& vals) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!(vals[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
      lx.push_back(std::log(out.lags[i]));
      ly.push_back(std::log(vals[i]));
    }
    return ls_slope(lx, ly);
  };
  out.slope_x = slope_of(out.sx);
  out.slope_v = slope_of(out.sv);
  return out;
}

std::vector<double> time_averaged_measure(const Trajectory& traj, Observable obs, std::span<const double> t_grid) {
  if (traj.empty()) throw std::invalid_argument("time_averaged_measure: empty trajectory");
  const double t0 = traj.times.front();
  const double t1 = traj.times.back();
  const double spacing = traj.size() > 1 ? traj.times[1] - traj.times[0] : 1.0;
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (t < t0 - 1e-12 || t > t1 + 1e-12) throw std::out_of_range("time_averaged_measure: time outside the run");
    const auto n = std::min(traj.size() - 1, static_cast<std::size_t>(std::llround((t - t0) / spacing)));
    out.push_back(observe(traj, obs, n));
  }
  return out;
}

std::vector<double> time_averaged_measure(const Trajectory& traj, Observable obs, double t_from) {
  std::vector<double> out;
  for (std::size_t n = 0; n < traj.size(); ++n) {
    if (traj.times[n] >= t_from) out.push_back(observe(traj, obs, n));
  }
  return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance needs at least 2 samples");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

TrendFit fit_trend(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("fit_trend: need >= 3 paired samples");
  const std::size_t n = x.size();
  TrendFit fit;
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0;
  for (double xi : x) sxx += (xi - mx) * (xi - mx);
  fit.slope = ls_slope(x, y);
  fit.intercept = my - fit.slope * mx;

  std::vector<double> res(n);
  for (std::size_t i = 0; i < n; ++i) res[i] = y[i] - fit.intercept - fit.slope * x[i];
  double s0 = 0.0, s1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s0 += res[i] * res[i];
    if (i + 1 < n) s1 += res[i] * res[i + 1];
  }
  const double rho = s0 > 0.0 ? std::clamp(s1 / s0, 0.0, 0.999) : 0.0;
  fit.lag1_autocorrelation = rho;
  fit.effective_samples = std::max(3.0, static_cast<double>(n) * (1.0 - rho) / (1.0 + rho));

  const double resid_var = s0 / static_cast<double>(n - 2);
  const double naive_se = std::sqrt(resid_var / sxx);
  fit.slope_stderr = naive_se * std::sqrt(static_cast<double>(n) / fit.effective_samples);
  const double t = student_t975(fit.effective_samples - 2.0);
  fit.ci_low = fit.slope - t * fit.slope_stderr;
  fit.ci_high = fit.slope + t * fit.slope_stderr;
  return fit;
}

}  // namespace walker
