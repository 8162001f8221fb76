#include "walker/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <vector>

#include "walker/csv.hpp"
#include "walker/orbit.hpp"

namespace walker {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError(key, key + ": expected a finite number, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t to_uint(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(key, key + ": expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

std::string num(double v) { return format_double(v); }

struct Entry {
  const char* key;
  std::function<void(RunConfig&, const std::string&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class T>
Entry real_entry(const char* key, T RunConfig::*member) {
  return {key, [member](RunConfig& c, const std::string& k, std::string_view v) { c.*member = to_double(k, v); },
          [member](const RunConfig& c) { return num(c.*member); }};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"model.kappa", [](RunConfig& c, const std::string& k, std::string_view v) { c.model.kappa = to_double(k, v); },
       [](const RunConfig& c) { return num(c.model.kappa); }},
      {"model.alpha", [](RunConfig& c, const std::string& k, std::string_view v) { c.model.alpha = to_double(k, v); },
       [](const RunConfig& c) { return num(c.model.alpha); }},
      {"model.sigma", [](RunConfig& c, const std::string& k, std::string_view v) { c.model.sigma = to_double(k, v); },
       [](const RunConfig& c) { return num(c.model.sigma); }},
      {"model.spring_k",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.model.spring_k = to_double(k, v); },
       [](const RunConfig& c) { return num(c.model.spring_k); }},
      {"model.dim",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.model.dim = static_cast<int>(to_uint(k, v)); },
       [](const RunConfig& c) { return std::to_string(c.model.dim); }},
      {"model.kernel.family", [](RunConfig& c, const std::string&, std::string_view v) { c.kernel_family = v; },
       [](const RunConfig& c) { return c.kernel_family; }},
      real_entry("model.kernel.delta", &RunConfig::kernel_delta),
      {"model.force.family", [](RunConfig& c, const std::string&, std::string_view v) { c.force_family = v; },
       [](const RunConfig& c) { return c.force_family; }},
      {"model.potential.family", [](RunConfig& c, const std::string&, std::string_view v) { c.potential_family = v; },
       [](const RunConfig& c) { return c.potential_family; }},
      real_entry("sim.dt", &RunConfig::dt),
      real_entry("sim.t_max", &RunConfig::t_max),
      real_entry("sim.full_t_max", &RunConfig::full_t_max),
      {"sim.seed", [](RunConfig& c, const std::string& k, std::string_view v) { c.seed = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.seed); }},
      {"sim.stride", [](RunConfig& c, const std::string& k, std::string_view v) { c.stride = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.stride); }},
      real_entry("sim.tail_tol", &RunConfig::tail_tol),
      real_entry("sim.horizon", &RunConfig::horizon),
      {"sim.noise_substeps",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.noise_substeps = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.noise_substeps); }},
      {"past.kind",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         if (v == "zero") c.past.kind = PastKind::zero;
         else if (v == "constant") c.past.kind = PastKind::constant;
         else if (v == "orbital") c.past.kind = PastKind::orbital;
         else if (v == "file") c.past.kind = PastKind::file;
         else throw ConfigError(k, k + ": expected zero|constant|orbital|file, got '" + std::string(v) + "'");
       },
       [](const RunConfig& c) -> std::string {
         switch (c.past.kind) {
           case PastKind::zero: return "zero";
           case PastKind::constant: return "constant";
           case PastKind::orbital: return "orbital";
           case PastKind::file: return "file";
         }
         return "zero";
       }},
      {"past.x", [](RunConfig& c, const std::string& k, std::string_view v) { c.past.point.x = to_double(k, v); },
       [](const RunConfig& c) { return num(c.past.point.x); }},
      {"past.y", [](RunConfig& c, const std::string& k, std::string_view v) { c.past.point.y = to_double(k, v); },
       [](const RunConfig& c) { return num(c.past.point.y); }},
      {"past.duration",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.past.duration = to_double(k, v); },
       [](const RunConfig& c) { return num(c.past.duration); }},
      {"past.anchor",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         if (v == "none") c.past.anchor = PastAnchor::none;
         else if (v == "origin") c.past.anchor = PastAnchor::origin;
         else throw ConfigError(k, k + ": expected none|origin, got '" + std::string(v) + "'");
       },
       [](const RunConfig& c) { return std::string(c.past.anchor == PastAnchor::origin ? "origin" : "none"); }},
      {"past.file", [](RunConfig& c, const std::string&, std::string_view v) { c.past.file = v; },
       [](const RunConfig& c) { return c.past.file; }},
      {"stats.bins", [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.bins = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.stats.bins); }},
      {"stats.r_max", [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.r_max = to_double(k, v); },
       [](const RunConfig& c) { return num(c.stats.r_max); }},
      {"stats.burn_in",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.burn_in = to_double(k, v); },
       [](const RunConfig& c) { return num(c.stats.burn_in); }},
      {"stats.members",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.members = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.stats.members); }},
      {"stats.moment_p",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.moment_p = to_double(k, v); },
       [](const RunConfig& c) { return num(c.stats.moment_p); }},
      {"stats.threads",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.stats.threads = static_cast<unsigned>(to_uint(k, v));
       },
       [](const RunConfig& c) { return std::to_string(c.stats.threads); }},
      {"stats.max_lag_steps",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.stats.max_lag_steps = to_uint(k, v); },
       [](const RunConfig& c) { return std::to_string(c.stats.max_lag_steps); }},
      {"output.dir", [](RunConfig& c, const std::string&, std::string_view v) { c.out_dir = v; },
       [](const RunConfig& c) { return c.out_dir; }},
      {"output.prefix", [](RunConfig& c, const std::string&, std::string_view v) { c.out_prefix = v; },
       [](const RunConfig& c) { return c.out_prefix; }},
  };
  return table;
}

const Entry& find_entry(const std::string& key) {
  for (const auto& e : entries()) {
    if (key == e.key) return e;
  }
  throw ConfigError(key, "unknown config key '" + key + "'");
}

bool whole_steps(double t, double dt) {
  const double r = t / dt;
  return std::fabs(r - std::round(r)) <= 1e-9 * std::max(1.0, r);
}

void validate(const RunConfig& c) {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(key, std::string(key) + ": " + what);
  };
  require(c.model.kappa > 0.0, "model.kappa", "must be > 0");
  require(c.model.alpha >= 0.0, "model.alpha", "must be >= 0");
  require(c.model.sigma >= 0.0, "model.sigma", "must be >= 0");
  require(c.model.spring_k >= 0.0, "model.spring_k", "must be >= 0");
  require(c.model.dim == 1 || c.model.dim == 2, "model.dim", "must be 1 or 2");
  require(c.kernel_family == "exponential", "model.kernel.family", "only 'exponential' is available");
  require(c.kernel_delta > 0.0, "model.kernel.delta", "must be > 0");
  require(c.force_family == "bessel_j1", "model.force.family", "only 'bessel_j1' is available");
  require(c.potential_family == "harmonic", "model.potential.family", "only 'harmonic' is available");
  require(c.dt > 0.0, "sim.dt", "must be > 0");
  require(c.t_max > 0.0, "sim.t_max", "must be > 0");
  require(whole_steps(c.t_max, c.dt), "sim.t_max", "must be a whole number of sim.dt steps");
  require(c.full_t_max > 0.0 && whole_steps(c.full_t_max, c.dt), "sim.full_t_max",
          "must be > 0 and a whole number of sim.dt steps");
  require(c.stride >= 1, "sim.stride", "must be >= 1");
  require(c.tail_tol > 0.0 && c.tail_tol < 1.0, "sim.tail_tol", "must lie in (0, 1)");
  require(c.horizon == 0.0 || c.horizon >= 10.0 / c.kernel_delta, "sim.horizon",
          "must be 0 (auto) or >= 10 / model.kernel.delta");
  require(c.noise_substeps >= 1 && (c.noise_substeps & (c.noise_substeps - 1)) == 0, "sim.noise_substeps",
          "must be a power of two");
  require(c.past.duration >= 0.0, "past.duration", "must be >= 0");
  require(c.past.kind != PastKind::orbital || c.model.dim == 2, "past.kind", "orbital pasts need model.dim = 2");
  require(c.past.kind != PastKind::file || !c.past.file.empty(), "past.file", "required when past.kind = file");
  require(c.model.dim == 2 || c.past.point.y == 0.0, "past.y", "must be 0 when model.dim = 1");
  require(c.stats.bins >= 2, "stats.bins", "must be >= 2");
  require(c.stats.r_max >= 0.0, "stats.r_max", "must be >= 0");
  require(c.stats.burn_in >= 0.0 && c.stats.burn_in < 1.0, "stats.burn_in", "must lie in [0, 1)");
  require(c.stats.members >= 2, "stats.members", "must be >= 2");
  require(c.stats.moment_p > 0.0, "stats.moment_p", "must be > 0");
  require(c.stats.max_lag_steps >= 3, "stats.max_lag_steps", "must be >= 3");
}

}  // namespace

Model RunConfig::build_model() const {
  Model m = Model::canonical(model, kernel_delta);
  return m;
}

SimConfig RunConfig::build_sim() const {
  SimConfig sim;
  sim.model = build_model();
  sim.dt = dt;
  sim.t_max = t_max;
  sim.seed = seed;
  sim.stride = stride;
  sim.tail_tol = tail_tol;
  sim.truncation_horizon = horizon;
  sim.noise_substeps = noise_substeps;

  switch (past.kind) {
    case PastKind::zero: sim.past = InitialPast::zero(); break;
    case PastKind::constant: sim.past = InitialPast::constant(past.point); break;
    case PastKind::orbital: {
      const auto orbits = solve_orbit(model);
      if (orbits.empty()) throw ConfigError("past.kind", "past.kind: no circular orbit exists for these parameters");
      const double duration = past.duration > 0.0 ? past.duration : sim.horizon();
      sim.past = orbital_past(orbits.front(), duration, dt, sim.horizon());
      break;
    }
    case PastKind::file: {
      std::ifstream in(past.file);
      if (!in) throw ConfigError("past.file", "past.file: cannot open '" + past.file + "'");
      Trajectory t = read_trajectory_csv(in);
      sim.past = InitialPast::tabulated(t.times, t.positions, t.velocities, TailExtension::zero);
      break;
    }
  }
  if (past.anchor == PastAnchor::origin) sim.past = sim.past.anchored_at({}, {});
  return sim;
}

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    find_entry(key).set(cfg, key, value);
  }
  validate(cfg);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string serialize_run_config(const RunConfig& config) {
  std::ostringstream os;
  for (const auto& e : entries()) os << e.key << " = " << e.get(config) << '\n';
  return os.str();
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("", "override '" + assignment + "' is not key=value");
  const std::string key(trim(std::string_view(assignment).substr(0, eq)));
  find_entry(key).set(config, key, trim(std::string_view(assignment).substr(eq + 1)));
}

void validate_run_config(const RunConfig& config) { validate(config); }

}  // namespace walker
