#include "walker/integrator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <future>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "walker/bessel.hpp"

namespace walker {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Whole-number test for t_max / dt and friends.
bool near_integer(double r) { return std::fabs(r - std::round(r)) <= 1e-9 * std::max(1.0, std::fabs(r)); }

double j1_abs_update(double h, double& h_sup) {
  const double a = std::fabs(h);
  if (a > h_sup) h_sup = a;
  return h;
}

}  // namespace

void SimConfig::validate() const {
  model.params.validate();
  if (model.force.dim() != model.params.dim) throw std::invalid_argument("model.dim does not match the force dimension");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("sim.dt must be > 0");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("sim.t_max must be > 0");
  if (!near_integer(t_max / dt)) throw std::invalid_argument("sim.t_max must be a whole number of sim.dt steps");
  if (stride == 0) throw std::invalid_argument("sim.stride must be >= 1");
  if (!is_power_of_two(noise_substeps)) throw std::invalid_argument("sim.noise_substeps must be a power of two");
  if (truncation_horizon != 0.0 && !(truncation_horizon > 0.0)) {
    throw std::invalid_argument("sim.horizon must be > 0");
  }
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw std::invalid_argument("sim.tail_tol must lie in (0, 1)");
  if (horizon() < 10.0 / model.kernel.decay() * (1.0 - 1e-12)) {
    throw std::invalid_argument("sim.horizon must be >= 10 / kernel.delta");
  }
  const auto [x0, v0] = past.value_at(0.0);
  if (!is_finite(x0) || !is_finite(v0)) throw std::invalid_argument("past value at s = 0 is not finite");
  if (model.params.dim == 1 && (x0.y != 0.0 || v0.y != 0.0)) {
    throw std::invalid_argument("past has a y component in a 1D model");
  }
}

std::size_t SimConfig::steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }

double SimConfig::horizon() const {
  if (truncation_horizon > 0.0) return truncation_horizon;
  const Kernel& k = model.kernel;
  return std::ceil(std::log(k.amplitude() / (k.decay() * tail_tol)) / k.decay());
}

std::size_t SimConfig::window_steps() const {
  const double w = horizon() / dt;
  const double r = std::round(w);
  return static_cast<std::size_t>(near_integer(w) ? r : std::ceil(w));
}

double window_error_bound(double horizon, double h_sup, const Kernel& kernel) {
  if (!(h_sup >= 0.0)) throw std::invalid_argument("window_error_bound: h_sup must be >= 0");
  return h_sup * kernel.tail_mass(horizon);
}

// --- past contribution -------------------------------------------------------

PastContribution::PastContribution(const InitialPast& past, const Model& model, double dt, std::size_t window_steps)
    : model_(&model), dt_(dt), window_steps_(window_steps), horizon_(static_cast<double>(window_steps) * dt) {
  const auto& v = past.variant();
  if (std::holds_alternative<InitialPast::Zero>(v)) {
    kind_ = Kind::point;
  } else if (const auto* c = std::get_if<InitialPast::Constant>(&v)) {
    kind_ = Kind::point;
    point_ = c->point;
  } else if (const auto* tab = std::get_if<InitialPast::Tabulated>(&v)) {
    kind_ = Kind::samples;
    s_ = tab->times;
    x_ = tab->positions;
    tail_held_ = tab->extension == TailExtension::constant;
    tail_point_ = x_.front();
  } else {
    // Orbital: sample on the step grid one node beyond the window so the
    // (zero) extension is never reached.
    kind_ = Kind::samples;
    const std::size_t nodes = window_steps + 2;
    s_.resize(nodes);
    x_.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      const std::size_t j = nodes - 1 - i;
      s_[i] = -static_cast<double>(j) * dt;
      x_[i] = past.value_at(s_[i]).first;
    }
  }
}

Vec2 PastContribution::operator()(std::size_t n, const Vec2& x_now, double& h_sup) const {
  const double t = static_cast<double>(n) * dt_;
  const Kernel& K = model_->kernel;
  const WaveForce& H = model_->force;

  auto force = [&](const Vec2& d) {
    const Vec2 f = H(d);
    h_sup = std::max(h_sup, std::fabs(H.profile(norm(d))));
    return f;
  };

  if (kind_ == Kind::none) return {};
  if (kind_ == Kind::point) {
    if (n >= window_steps_) return {};
    return force(x_now - point_) * K.tail_mass(t);
  }

  // Nodes with t - s_i <= T_w, walked from s = 0 backwards.
  const double cutoff = t - horizon_ * (1.0 + 1e-12);
  std::size_t first = s_.size() - 1;
  if (s_[first] < cutoff) return {};
  while (first > 0 && s_[first - 1] >= cutoff) --first;

  Vec2 acc;
  const std::size_t last = s_.size() - 1;
  for (std::size_t i = first; i <= last; ++i) {
    double w = 0.0;
    if (i > first) w += 0.5 * (s_[i] - s_[i - 1]);
    if (i < last) w += 0.5 * (s_[i + 1] - s_[i]);
    if (w == 0.0) continue;
    acc += force(x_now - x_[i]) * (w * K(t - s_[i]));
  }
  if (first == 0) {
    const Vec2 held = tail_held_ ? tail_point_ : Vec2{};
    acc += force(x_now - held) * K.tail_mass(t - s_.front());
  }
  return acc;
}

// --- memory force ------------------------------------------------------------

Vec2 memory_force(std::size_t n, const HistoryBuffer& history, const PastContribution& past, const Model& model,
                  double& h_sup) {
  if (history.empty()) throw std::logic_error("memory_force: empty history");
  const auto xs = history.xs();
  const auto ys = history.ys();
  const std::size_t m = history.filled() - 1;
  const Vec2 now = history.back(0);
  const double dt = history.dt();
  const Kernel& K = model.kernel;

  // Weights dt K(j dt) by recurrence; the oldest node takes the trapezoid 1/2.
  const double ratio = std::exp(-K.decay() * dt);
  double w = dt * K.amplitude() * ratio;
  double ax = 0.0;
  double ay = 0.0;
  double hs = h_sup;

  if (model.params.dim == 1) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double wj = j == m ? 0.5 * w : w;
      const double h = detail::bessel_j1_unchecked(now.x - xs[m - j]);
      ax += wj * j1_abs_update(h, hs);
      w *= ratio;
    }
  } else {
    for (std::size_t j = 1; j <= m; ++j) {
      const double wj = j == m ? 0.5 * w : w;
      const double dx = now.x - xs[m - j];
      const double dy = now.y - ys[m - j];
      const double r = std::sqrt(dx * dx + dy * dy);
      if (r > 0.0) {
        const double s = wj * j1_abs_update(detail::bessel_j1_unchecked(kTwoPi * r), hs) / r;
        ax += s * dx;
        ay += s * dy;
      }
      w *= ratio;
    }
  }
  h_sup = hs;
  return Vec2{ax, ay} + past(n, now, h_sup);
}

Vec2 memory_force(std::size_t n, const HistoryBuffer& history, const PastContribution& past, const Model& model) {
  double h_sup = 0.0;
  return memory_force(n, history, past, model, h_sup);
}

std::pair<Vec2, Vec2> em_step(const Model& model, double dt, const Vec2& x, const Vec2& v, const Vec2& memory,
                              const Vec2& noise, std::size_t step) {
  const ModelParams& p = model.params;
  const Vec2 drift = -v - model.potential.grad(x) + memory * p.alpha;
  const Vec2 x_next = x + v * dt;
  const Vec2 v_next = v + drift * (dt / p.kappa) + noise * (p.sigma / p.kappa * std::sqrt(dt));
  if (!is_finite(x_next) || !is_finite(v_next)) {
    std::ostringstream msg;
    msg << "integration blew up at step " << step;
    throw BlowUpError(step, msg.str());
  }
  return {x_next, v_next};
}

// --- stepper -----------------------------------------------------------------

Stepper::Stepper(const SimConfig& config)
    : model_(config.model),
      dt_(config.dt),
      noise_scale_(1.0 / std::sqrt(static_cast<double>(config.noise_substeps))),
      substeps_(config.noise_substeps),
      history_(config.window_steps(), config.dt),
      past_(config.past, model_, config.dt, config.window_steps()),
      noise_(CounterRng(config.seed).child(config.stream_index)) {
  const auto [x0, v0] = config.past.value_at(0.0);
  x_ = x0;
  v_ = v0;
  history_.push(x_);
}

void Stepper::advance() {
  // With alpha = 0 the memory term drops out of the drift; skip the window sum.
  const Vec2 memory = model_.params.alpha == 0.0 ? Vec2{} : memory_force(n_, history_, past_, model_, h_sup_);
  Vec2 xi;
  for (std::size_t k = 0; k < substeps_; ++k) {
    xi.x += noise_();
    if (model_.params.dim == 2) xi.y += noise_();
  }
  xi *= noise_scale_;
  const auto [x, v] = em_step(model_, dt_, x_, v_, memory, xi, n_);
  x_ = x;
  v_ = v;
  ++n_;
  history_.push(x_);
}

// --- drivers -----------------------------------------------------------------

Trajectory simulate(const SimConfig& config, RunStats& stats) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t steps = config.steps();

  Trajectory out;
  out.dim = config.model.params.dim;
  out.seed = config.seed;
  out.dt = config.dt;
  out.stride = config.stride;
  out.params = config.model.params;
  out.reserve(steps / config.stride + 1);

  Stepper stepper(config);
  out.push_back(0.0, stepper.position(), stepper.velocity());
  for (std::size_t n = 1; n <= steps; ++n) {
    stepper.advance();
    if (n % config.stride == 0) out.push_back(stepper.time(), stepper.position(), stepper.velocity());
  }

  stats.steps = steps;
  stats.horizon = static_cast<double>(config.window_steps()) * config.dt;
  stats.h_sup = stepper.h_sup();
  stats.truncation_bound = window_error_bound(stats.horizon, stats.h_sup, config.model.kernel);
  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Trajectory simulate(const SimConfig& config) {
  RunStats stats;
  return simulate(config, stats);
}

std::pair<Trajectory, Trajectory> couple_simulate(const SimConfig& config, const InitialPast& past_a,
                                                  const InitialPast& past_b) {
  const auto [xa, va] = past_a.value_at(0.0);
  const auto [xb, vb] = past_b.value_at(0.0);
  auto close = [](const Vec2& a, const Vec2& b) { return norm(a - b) <= 1e-12 * (1.0 + norm(a)); };
  if (!close(xa, xb) || !close(va, vb)) {
    throw std::invalid_argument("couple: initial pasts disagree at s = 0 (anchor mismatch)");
  }
  SimConfig a = config;
  SimConfig b = config;
  a.past = past_a;
  b.past = past_b;
  a.validate();
  b.validate();
  auto fut = std::async(std::launch::async, [&b] { return simulate(b); });
  Trajectory ta = simulate(a);
  return {std::move(ta), fut.get()};
}

std::vector<Trajectory> simulate_ensemble(const SimConfig& config, std::size_t members, unsigned threads) {
  config.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(members, 1)));

  std::vector<Trajectory> out(members);
  std::vector<std::exception_ptr> errors(members);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < members; i = next++) {
      SimConfig c = config;
      c.stream_index = i;
      try {
        out[i] = simulate(c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < members; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const BlowUpError& e) {
      std::ostringstream msg;
      msg << "ensemble member " << i << ": " << e.what();
      throw BlowUpError(e.step(), msg.str());
    }
  }
  return out;
}

}  // namespace walker
