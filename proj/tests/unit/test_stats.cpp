#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "walker/stats.hpp"

using namespace walker;

namespace {

RadialPdf from_radii(const std::vector<double>& r, const std::vector<double>& edges) { return radial_pdf(r, edges); }

double total_mass(const RadialPdf& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.bins(); ++i) s += p.density[i] * p.width(i);
  return s;
}

Trajectory line(double slope, int n, double dt) {
  Trajectory t;
  t.dim = 1;
  for (int i = 0; i < n; ++i) t.push_back(i * dt, Vec2{slope * i * dt, 0.0}, Vec2{slope, 0.0});
  return t;
}

}  // namespace

TEST_CASE("radial_pdf: zero path puts all mass in the first bin") {
  Trajectory t;
  for (int i = 0; i < 100; ++i) t.push_back(i * 0.1, Vec2{}, Vec2{});
  const RadialPdf p = radial_pdf(t, 0.0, uniform_edges(0.0, 1.0, 10));
  CHECK(p.density[0] == doctest::Approx(10.0));
  for (std::size_t i = 1; i < 10; ++i) CHECK(p.density[i] == 0.0);
}

TEST_CASE("radial_pdf: uniform midpoints give unit density") {
  std::vector<double> r;
  for (int i = 0; i < 10; ++i) r.push_back(0.05 + 0.1 * i);
  const RadialPdf p = from_radii(r, uniform_edges(0.0, 1.0, 10));
  for (double d : p.density) CHECK(d == doctest::Approx(1.0));
}

TEST_CASE("radial_pdf: burn-in, overflow and normalization") {
  Trajectory t;
  for (int i = 0; i <= 100; ++i) t.push_back(i, Vec2{i < 50 ? 5.0 : 0.5, 0.0}, Vec2{});
  const RadialPdf p = radial_pdf(t, 0.5, uniform_edges(0.0, 1.0, 4));
  CHECK(p.burn_in_time == doctest::Approx(50.0));
  CHECK(p.overflow == 0);
  CHECK(p.sample_count == 51);
  CHECK(total_mass(p) == doctest::Approx(1.0).epsilon(1e-12));
  const RadialPdf q = radial_pdf(t, 0.0, uniform_edges(0.0, 1.0, 4));
  CHECK(q.overflow == 50);
  CHECK_THROWS_AS(radial_pdf(t, 0.0, uniform_edges(0.0, 1.0, 1)), std::invalid_argument);
  std::vector<double> bad{0.0, 0.5, 0.4};
  CHECK_THROWS_AS(radial_pdf(t, 0.0, bad), std::invalid_argument);
}

TEST_CASE("radial_pdf: normalization holds for random input") {
  std::mt19937_64 g(3);
  std::lognormal_distribution<double> d(0.0, 0.7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> r(1000);
    for (auto& x : r) x = d(g);
    const RadialPdf p = from_radii(r, uniform_edges(0.0, 3.0, 37));
    CHECK(std::fabs(total_mass(p) - 1.0) < 1e-12);
  }
}

TEST_CASE("pdf_l1_distance: worked values and metric properties") {
  const auto e = uniform_edges(0.0, 2.0, 4);
  const RadialPdf a = from_radii({0.1}, e);
  const RadialPdf b = from_radii({1.9}, e);
  CHECK(pdf_l1_distance(a, a) == 0.0);
  CHECK(pdf_l1_distance(a, b) == doctest::Approx(2.0));
  // Top hats on [0, 1] and [0.5, 1.5].
  const RadialPdf h1 = from_radii({0.25, 0.75}, e);
  const RadialPdf h2 = from_radii({0.75, 1.25}, e);
  CHECK(pdf_l1_distance(h1, h2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pdf_l1_distance(a, from_radii({0.1}, uniform_edges(0.0, 2.0, 5))), std::invalid_argument);

  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  const auto edges = uniform_edges(0.0, 2.0, 20);
  auto random_pdf = [&] {
    std::vector<double> r(50);
    for (auto& x : r) x = u(g) * u(g);
    return from_radii(r, edges);
  };
  for (int t = 0; t < 100; ++t) {
    const RadialPdf p = random_pdf(), q = random_pdf(), s = random_pdf();
    CHECK(pdf_l1_distance(p, q) == doctest::Approx(pdf_l1_distance(q, p)).epsilon(1e-15));
    CHECK(pdf_l1_distance(p, s) <= pdf_l1_distance(p, q) + pdf_l1_distance(q, s) + 1e-12);
    CHECK(pdf_l1_distance(p, q) <= 2.0 + 1e-12);
  }
}

TEST_CASE("peak_location: single bin, triangle and ties") {
  const auto e = uniform_edges(0.0, 1.0, 10);
  CHECK(peak_location(from_radii({0.55}, e)) == doctest::Approx(0.55));
  // Symmetric triangular density on [0, 2].
  std::vector<double> r;
  for (int i = 0; i < 200000; ++i) {
    const double u = (i + 0.5) / 200000.0;
    r.push_back(u < 0.5 ? std::sqrt(2.0 * u) : 2.0 - std::sqrt(2.0 * (1.0 - u)));
  }
  CHECK(peak_location(from_radii(r, uniform_edges(0.0, 2.0, 41))) == doctest::Approx(1.0).epsilon(1e-3));
  // Plateau: first of equal bins wins.
  const RadialPdf flat = from_radii({0.15, 0.25}, e);
  const double tie = peak_location(flat);
  CHECK(tie >= 0.1);
  CHECK(tie <= 0.2 + 1e-12);
}

TEST_CASE("structure_function: linear path and time translation") {
  const Trajectory t = line(1.0, 2000, 0.01);
  std::vector<double> lags{0.01, 0.02, 0.04, 0.08};
  const StructureFunction sf = structure_function(t, lags);
  for (std::size_t i = 0; i < lags.size(); ++i) {
    CHECK(sf.sx[i] == doctest::Approx(std::pow(lags[i], 4)).epsilon(1e-9));
    CHECK(sf.sv[i] == 0.0);
  }
  CHECK(sf.slope_x == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(std::isnan(sf.slope_v));

  Trajectory shifted = t;
  for (auto& time : shifted.times) time += 123.0;
  const StructureFunction s2 = structure_function(shifted, lags);
  CHECK(s2.slope_x == doctest::Approx(sf.slope_x).epsilon(1e-12));
  CHECK_THROWS_AS(structure_function(t, std::vector<double>{0.01, 0.02}), std::invalid_argument);
}

TEST_CASE("structure_function: Brownian velocity has exponent 2") {
  std::mt19937_64 g(17);
  std::normal_distribution<double> z;
  const double dt = 1.0 / 64;
  Trajectory t;
  double v = 0.0;
  for (int i = 0; i < 400000; ++i) {
    t.push_back(i * dt, Vec2{}, Vec2{v, 0.0});
    v += 0.1 * std::sqrt(dt) * z(g);
  }
  std::vector<double> lags;
  for (int k = 1; k <= 32; ++k) lags.push_back(k * dt);
  const StructureFunction sf = structure_function(t, lags);
  CHECK(sf.slope_v == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("energy moments: zero ensemble and permutation invariance") {
  std::vector<Trajectory> z(3);
  for (auto& t : z)
    for (int i = 0; i < 10; ++i) t.push_back(i, Vec2{}, Vec2{});
  const Potential u = Potential::harmonic(0.35);
  const MomentSeries s = ensemble_energy_moments(z, u, 2.0);
  for (double m : s.mean_phi) CHECK(m == 0.0);
  for (double m : s.mean_exp_phi) CHECK(m == 1.0);

  std::vector<Trajectory> e(4);
  for (std::size_t k = 0; k < 4; ++k)
    for (int i = 0; i < 10; ++i) e[k].push_back(i, Vec2{0.1 * k * i, 0.0}, Vec2{0.0, 0.3 * k});
  const MomentSeries a = ensemble_energy_moments(e, u, 1.5);
  std::reverse(e.begin(), e.end());
  const MomentSeries b = ensemble_energy_moments(e, u, 1.5);
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    CHECK(a.mean_phi[i] == doctest::Approx(b.mean_phi[i]).epsilon(1e-15));
    CHECK(a.mean_phi_p[i] == doctest::Approx(b.mean_phi_p[i]).epsilon(1e-15));
  }
  CHECK_THROWS_AS(ensemble_energy_moments(std::span(e).first(1), u, 2.0), std::invalid_argument);
}

TEST_CASE("time_averaged_measure and ks_distance") {
  Trajectory t;
  for (int i = 0; i < 10; ++i) t.push_back(i, Vec2{3.0, 4.0}, Vec2{});
  const auto r = time_averaged_measure(t, Observable::radius, 0.0);
  CHECK(r.size() == 10);
  for (double x : r) CHECK(x == 5.0);
  std::vector<double> grid{0.0, 4.4, 9.0};
  CHECK(time_averaged_measure(t, Observable::position, grid).size() == 3);
  std::vector<double> out{20.0};
  CHECK_THROWS_AS(time_averaged_measure(t, Observable::position, out), std::out_of_range);

  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back((i + 0.5) / 1000.0);
  CHECK(ks_distance(u, [](double x) { return std::clamp(x, 0.0, 1.0); }) == doctest::Approx(0.0005));
}

TEST_CASE("fit_trend: exact line, flat noise, and autocorrelation inflation") {
  std::vector<double> x, y;
  for (int i = 0; i < 100; ++i) {
    x.push_back(i);
    y.push_back(2.0 + 0.5 * i);
  }
  const TrendFit f = fit_trend(x, y);
  CHECK(f.slope == doctest::Approx(0.5));
  CHECK(f.intercept == doctest::Approx(2.0));

  std::mt19937_64 g(1);
  std::normal_distribution<double> z;
  int covered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> yy;
    double ar = 0.0;
    for (int i = 0; i < 400; ++i) {
      ar = 0.9 * ar + z(g);
      yy.push_back(ar);
    }
    std::vector<double> xx(400);
    for (int i = 0; i < 400; ++i) xx[static_cast<std::size_t>(i)] = i;
    covered += fit_trend(xx, yy).ci_contains(0.0) ? 1 : 0;
  }
  // Nominal 95%; the AR(1) correction should keep coverage well above the
  // roughly 50% an uncorrected interval would give for rho = 0.9.
  CHECK(covered >= 170);
}
