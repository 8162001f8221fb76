#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "walker/integrator.hpp"
#include "walker/model.hpp"

namespace walker {

/// Invalid or unknown configuration entry; `key()` names it.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

enum class PastKind { zero, constant, orbital, file };
enum class PastAnchor { none, origin };

struct PastSpec {
  PastKind kind = PastKind::zero;
  Vec2 point;                         // constant
  double duration = 0.0;              // orbital; 0 = memory horizon
  PastAnchor anchor = PastAnchor::none;
  std::string file;                   // tabulated samples, trajectory CSV with t <= 0

  friend bool operator==(const PastSpec&, const PastSpec&) = default;
};

struct StatsSpec {
  std::size_t bins = 200;
  double r_max = 0.0;  // 0 = twice the orbit radius
  double burn_in = 0.1;
  std::size_t members = 64;
  double moment_p = 2.0;
  unsigned threads = 0;
  std::size_t max_lag_steps = 32;

  friend bool operator==(const StatsSpec&, const StatsSpec&) = default;
};

/// Declarative run description (flat `section.key = value` file).
struct RunConfig {
  ModelParams model;
  double kernel_delta = 1.0;
  std::string kernel_family = "exponential";
  std::string force_family = "bessel_j1";
  std::string potential_family = "harmonic";

  double dt = 0.015625;
  double t_max = 1e4;
  double full_t_max = 1e5;
  std::uint64_t seed = 1;
  std::size_t stride = 1;
  double tail_tol = 1e-8;
  double horizon = 0.0;
  std::size_t noise_substeps = 1;

  PastSpec past;
  StatsSpec stats;

  std::string out_dir = ".";
  std::string out_prefix = "walker";

  Model build_model() const;
  /// Simulation config with the past resolved (orbital pasts call the orbit
  /// solver; file pasts are read from disk).
  SimConfig build_sim() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, malformed
/// values and constraint violations throw ConfigError naming the key.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);
/// Every key, in a fixed order, with shortest round-trip numbers.
std::string serialize_run_config(const RunConfig& config);
/// Applies one `key=value` assignment without re-validating, so several
/// overrides can be applied before one validate_run_config() call.
void apply_override(RunConfig& config, const std::string& assignment);
/// Throws ConfigError naming the first offending key.
void validate_run_config(const RunConfig& config);

}  // namespace walker
