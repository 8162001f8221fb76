#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walker/history.hpp"
#include "walker/initial_past.hpp"
#include "walker/model.hpp"
#include "walker/rng.hpp"
#include "walker/trajectory.hpp"

namespace walker {

/// Non-finite state encountered while stepping.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t step, const std::string& what) : std::runtime_error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

struct SimConfig {
  Model model;
  double dt = 0.015625;
  double t_max = 1.0;
  std::uint64_t seed = 0;
  /// Index of this trajectory's RNG child stream under `seed`.
  std::uint64_t stream_index = 0;
  /// Memory window T_w. Zero selects the default derived from `tail_tol`.
  double truncation_horizon = 0.0;
  double tail_tol = 1e-8;
  InitialPast past;
  std::size_t stride = 1;
  /// Normal draws summed into each Brownian increment (power of two). A run
  /// at (dt, 2^m) walks the same Brownian path as one at (dt / 2^m, 1).
  std::size_t noise_substeps = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::size_t steps() const;
  /// T_w actually used: ceil(ln(K(0) / (delta tail_tol)) / delta) unless set.
  double horizon() const;
  std::size_t window_steps() const;
};

/// Per-run diagnostics.
struct RunStats {
  std::size_t steps = 0;
  double horizon = 0.0;
  /// Largest |H| met inside the memory integral.
  double h_sup = 0.0;
  /// window_error_bound(horizon, h_sup, kernel).
  double truncation_bound = 0.0;
  double wall_seconds = 0.0;
};

/// Trapezoidal contribution of the prescribed past to the memory integral,
/// precomputed for a given step grid and window.
class PastContribution {
 public:
  PastContribution(const InitialPast& past, const Model& model, double dt, std::size_t window_steps);

  /// int_{max(-inf, t - T_w)}^0 H(x_now - x(s)) K(t - s) ds at step n (zero once
  /// the window has moved past s = 0). Updates `h_sup` with every |H| used.
  Vec2 operator()(std::size_t n, const Vec2& x_now, double& h_sup) const;

 private:
  enum class Kind { none, point, samples };

  const Model* model_;
  double dt_;
  std::size_t window_steps_;
  double horizon_;
  Kind kind_ = Kind::none;
  Vec2 point_;
  // Samples at s_i <= 0 with trapezoid cell widths.
  std::vector<double> s_;
  std::vector<Vec2> x_;
  std::vector<double> cell_;
  bool tail_held_ = false;
  Vec2 tail_point_;
};

/// Memory force T_n: trapezoidal sum of H(x_n - x_{n-j}) K(j dt) over the
/// live window plus the past contribution. Returns the force; `h_sup` is
/// raised to the largest |H| seen.
Vec2 memory_force(std::size_t n, const HistoryBuffer& history, const PastContribution& past, const Model& model,
                  double& h_sup);
Vec2 memory_force(std::size_t n, const HistoryBuffer& history, const PastContribution& past, const Model& model);

/// One Euler-Maruyama step
///   x' = x + v dt,
///   v' = v + (dt / kappa)(-v - grad U(x) + alpha T_n) + (sigma / kappa) sqrt(dt) noise.
/// Throws BlowUpError tagged with `step` if the result is non-finite.
std::pair<Vec2, Vec2> em_step(const Model& model, double dt, const Vec2& x, const Vec2& v, const Vec2& memory,
                              const Vec2& noise, std::size_t step = 0);

/// Step-by-step driver owning the history window and RNG stream of one path.
class Stepper {
 public:
  explicit Stepper(const SimConfig& config);
  Stepper(const Stepper&) = delete;
  Stepper& operator=(const Stepper&) = delete;

  std::size_t step_index() const noexcept { return n_; }
  double time() const noexcept { return static_cast<double>(n_) * dt_; }
  const Vec2& position() const noexcept { return x_; }
  const Vec2& velocity() const noexcept { return v_; }
  double h_sup() const noexcept { return h_sup_; }
  const HistoryBuffer& history() const noexcept { return history_; }

  /// Advance one step using the internal noise stream.
  void advance();

 private:
  Model model_;
  double dt_;
  double noise_scale_;
  std::size_t substeps_;
  HistoryBuffer history_;
  PastContribution past_;
  NormalStream noise_;
  std::size_t n_ = 0;
  Vec2 x_;
  Vec2 v_;
  double h_sup_ = 0.0;
};

/// Integrate on [0, t_max]; rows every `stride` steps including t = 0.
/// Deterministic in (config, seed).
Trajectory simulate(const SimConfig& config);
Trajectory simulate(const SimConfig& config, RunStats& stats);

/// Two runs sharing one noise stream, differing only in their pasts.
/// Throws std::invalid_argument if value_at(0) differs.
std::pair<Trajectory, Trajectory> couple_simulate(const SimConfig& config, const InitialPast& past_a,
                                                  const InitialPast& past_b);

/// `members` runs with stream indices 0..members-1 under one seed, spread over
/// `threads` workers (0 = hardware concurrency). Output order is by member.
std::vector<Trajectory> simulate_ensemble(const SimConfig& config, std::size_t members, unsigned threads = 0);

/// h_sup * int_{T_w}^inf K: bound on the neglected memory-force magnitude.
double window_error_bound(double horizon, double h_sup, const Kernel& kernel);

}  // namespace walker
