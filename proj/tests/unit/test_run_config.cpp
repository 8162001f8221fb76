#include <doctest.h>

#include <ios>
#include <string>

#include "walker/run_config.hpp"

using namespace walker;

namespace {
std::string key_of(const std::string& text) {
  try {
    parse_run_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}
}  // namespace

TEST_CASE("run config: defaults are the paper configuration") {
  const RunConfig c = parse_run_config("");
  CHECK(c.model.kappa == 0.42);
  CHECK(c.model.alpha == 4.47);
  CHECK(c.model.sigma == 0.08);
  CHECK(c.model.spring_k == 0.35);
  CHECK(c.model.dim == 2);
  CHECK(c.dt == 0.015625);
  CHECK(c.t_max == 1e4);
  CHECK(c.full_t_max == 1e5);
}

TEST_CASE("run config: parsing, comments and whitespace") {
  const RunConfig c = parse_run_config(
      "# comment\n"
      "model.alpha = 0   # trailing\n"
      "  sim.dt=0.0078125\n"
      "\n"
      "sim.t_max = 10\n"
      "past.kind = constant\n"
      "past.x = 0.5\n"
      "stats.bins = 50\n"
      "output.prefix = run7\n");
  CHECK(c.model.alpha == 0.0);
  CHECK(c.dt == 0.0078125);
  CHECK(c.t_max == 10.0);
  CHECK(c.past.kind == PastKind::constant);
  CHECK(c.past.point.x == 0.5);
  CHECK(c.stats.bins == 50);
  CHECK(c.out_prefix == "run7");
}

TEST_CASE("run config: errors name the offending key") {
  CHECK(key_of("sim.dt = 0\n") == "sim.dt");
  CHECK(key_of("sim.dt = -1\n") == "sim.dt");
  CHECK(key_of("model.kappa = abc\n") == "model.kappa");
  CHECK(key_of("model.dim = 3\n") == "model.dim");
  CHECK(key_of("model.frobnicate = 1\n") == "model.frobnicate");
  CHECK(key_of("sim.t_max = 10.001\n") == "sim.t_max");
  CHECK(key_of("past.kind = spiral\n") == "past.kind");
  CHECK(key_of("model.kernel.family = gaussian\n") == "model.kernel.family");
  CHECK(key_of("sim.horizon = 3\n") == "sim.horizon");
  CHECK(key_of("stats.burn_in = 1\n") == "stats.burn_in");
  CHECK_THROWS_AS(parse_run_config("just words\n"), ConfigError);
}

TEST_CASE("run config: serialize round trip") {
  RunConfig c;
  c.model.sigma = 0.03;
  c.seed = 12345678901234ULL;
  c.past.kind = PastKind::orbital;
  c.past.anchor = PastAnchor::origin;
  c.stats.r_max = 1.7;
  c.out_dir = "out/x";
  CHECK(parse_run_config(serialize_run_config(c)) == c);
}

TEST_CASE("run config: overrides apply in order and validate once") {
  RunConfig c;
  apply_override(c, "sim.dt=0");
  apply_override(c, "sim.dt=0.0078125");
  CHECK_NOTHROW(validate_run_config(c));
  CHECK(c.dt == 0.0078125);
  CHECK_THROWS_AS(apply_override(c, "sim.dt"), ConfigError);
  CHECK_THROWS_AS(apply_override(c, "nope=1"), ConfigError);
}

TEST_CASE("run config: build_sim resolves pasts") {
  RunConfig c;
  c.t_max = 1.0;
  CHECK(std::string(c.build_sim().past.kind()) == "zero");
  c.past.kind = PastKind::orbital;
  const SimConfig s = c.build_sim();
  CHECK(std::string(s.past.kind()) == "tabulated");
  const auto [x0, v0] = s.past.value_at(0.0);
  CHECK(norm(x0) == doctest::Approx(0.9203918630795).epsilon(1e-9));
  c.past.anchor = PastAnchor::origin;
  const auto [xa, va] = c.build_sim().past.value_at(0.0);
  CHECK(xa == Vec2{});
  CHECK(va == Vec2{});
  c.model.alpha = 0.0;
  CHECK_THROWS_AS(c.build_sim(), ConfigError);
}

TEST_CASE("run config: shipped default file equals the built-in defaults") {
  CHECK(load_run_config(WALKER_SOURCE_DIR "/configs/default.cfg") == RunConfig{});
  CHECK_THROWS_AS(load_run_config("/nonexistent/walker.cfg"), std::ios_base::failure);
}
