#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "walker/assumptions.hpp"
#include "walker/csv.hpp"
#include "walker/integrator.hpp"
#include "walker/orbit.hpp"
#include "walker/run_config.hpp"
#include "walker/stats.hpp"

namespace walker::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool full = false;
  std::vector<std::string> trajectories;
  std::string past_b = "orbital";
  std::string anchor_b = "origin";
  double shift = 1.0;
};

RunConfig resolve_config(const GlobalOptions& g) {
  RunConfig cfg = g.config_path.empty() ? RunConfig{} : load_run_config(g.config_path);
  for (const auto& o : g.overrides) apply_override(cfg, o);
  if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
  if (g.seed) cfg.seed = *g.seed;
  if (g.full) cfg.t_max = cfg.full_t_max;
  validate_run_config(cfg);
  return cfg;
}

std::filesystem::path output_path(const RunConfig& cfg, const std::string& suffix) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
  return std::filesystem::path(cfg.out_dir) / (cfg.out_prefix + suffix);
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(os);
  os.flush();
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

Trajectory read_trajectory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trajectory '" + path + "'");
  try {
    return read_trajectory_csv(in);
  } catch (const std::runtime_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

Trajectory run_simulation(const RunConfig& cfg, std::ostream& err, const SimConfig* prepared = nullptr) {
  const SimConfig sim = prepared ? *prepared : cfg.build_sim();
  RunStats stats;
  Trajectory traj = simulate(sim, stats);
  err << "steps=" << stats.steps << " horizon=" << format_double(stats.horizon)
      << " h_sup=" << format_double(stats.h_sup) << " truncation_bound=" << format_double(stats.truncation_bound)
      << " wall_s=" << format_double(stats.wall_seconds) << '\n';
  return traj;
}

std::vector<double> pdf_edges(const RunConfig& cfg, const Trajectory& traj, std::ostream& err) {
  double r_max = cfg.stats.r_max;
  if (r_max <= 0.0 && cfg.model.dim == 2) {
    const auto orbits = solve_orbit(cfg.model);
    if (!orbits.empty()) {
      r_max = 2.0 * orbits.front().r0;
      err << "orbit r0=" << format_double(orbits.front().r0) << '\n';
    }
  }
  if (r_max <= 0.0) {
    for (const auto& x : traj.positions) r_max = std::max(r_max, norm(x));
    if (r_max <= 0.0) r_max = 1.0;
  }
  return uniform_edges(0.0, r_max, cfg.stats.bins);
}

int cmd_simulate(const GlobalOptions& g, std::ostream&, std::ostream& err) {
  const RunConfig cfg = resolve_config(g);
  const Trajectory traj = run_simulation(cfg, err);
  const auto path = output_path(cfg, "_traj.csv");
  write_file(path, [&](std::ostream& os) { write_trajectory_csv(os, traj); });
  err << "wrote " << path.string() << " rows=" << traj.size() << '\n';
  return kOk;
}

int cmd_orbit(const GlobalOptions& g, std::ostream& out, std::ostream&) {
  const RunConfig cfg = resolve_config(g);
  const auto orbits = solve_orbit(cfg.model);
  write_orbits_csv(out, orbits);
  return kOk;
}

int cmd_pdf(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve_config(g);
  const Trajectory traj = g.trajectories.empty() ? run_simulation(cfg, err) : read_trajectory_file(g.trajectories.front());
  const auto edges = pdf_edges(cfg, traj, err);
  const RadialPdf pdf = radial_pdf(traj, cfg.stats.burn_in, edges);
  const auto path = output_path(cfg, "_pdf.csv");
  write_file(path, [&](std::ostream& os) { write_pdf_csv(os, pdf); });
  out << "peak=" << format_double(peak_location(pdf)) << " samples=" << pdf.sample_count
      << " overflow=" << pdf.overflow << '\n';
  err << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_moments(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve_config(g);
  std::vector<Trajectory> members;
  if (g.trajectories.empty()) {
    const auto start = std::chrono::steady_clock::now();
    members = simulate_ensemble(cfg.build_sim(), cfg.stats.members, cfg.stats.threads);
    err << "ensemble members=" << members.size() << " wall_s="
        << format_double(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) << '\n';
  } else {
    for (const auto& p : g.trajectories) members.push_back(read_trajectory_file(p));
  }
  const MomentSeries series = ensemble_energy_moments(members, cfg.build_model().potential, cfg.stats.moment_p);
  const auto mpath = output_path(cfg, "_moments.csv");
  write_file(mpath, [&](std::ostream& os) { write_moments_csv(os, series); });

  const Trajectory& first = members.front();
  std::vector<double> lags;
  const double spacing = first.size() > 1 ? first.times[1] - first.times[0] : 0.0;
  for (std::size_t k = 1; k <= cfg.stats.max_lag_steps; ++k) {
    if (spacing * static_cast<double>(k) <= (first.times.back() - first.times.front()) / 10.0) {
      lags.push_back(spacing * static_cast<double>(k));
    }
  }
  if (lags.size() >= 3) {
    const StructureFunction sf = structure_function(first, lags);
    const auto spath = output_path(cfg, "_structure.csv");
    write_file(spath, [&](std::ostream& os) { write_structure_csv(os, sf); });
    out << "slope_x=" << format_double(sf.slope_x) << " slope_v=" << format_double(sf.slope_v) << '\n';
  }
  const std::size_t half = series.times.size() / 2;
  if (series.times.size() - half >= 3) {
    const TrendFit fit = fit_trend(std::span(series.times).subspan(half), std::span(series.mean_phi).subspan(half));
    out << "trend_slope=" << format_double(fit.slope) << " ci95=[" << format_double(fit.ci_low) << ','
        << format_double(fit.ci_high) << "]\n";
  }
  err << "wrote " << mpath.string() << '\n';
  return kOk;
}

int cmd_couple(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve_config(g);
  const SimConfig sim = cfg.build_sim();

  RunConfig cfg_b = cfg;
  apply_override(cfg_b, "past.kind=" + g.past_b);
  apply_override(cfg_b, "past.anchor=" + g.anchor_b);
  validate_run_config(cfg_b);
  const SimConfig sim_b = cfg_b.build_sim();

  const auto [a, b] = couple_simulate(sim, sim.past, sim_b.past);
  write_file(output_path(cfg, "_couple_a.csv"), [&](std::ostream& os) { write_trajectory_csv(os, a); });
  write_file(output_path(cfg, "_couple_b.csv"), [&](std::ostream& os) { write_trajectory_csv(os, b); });

  const auto edges = pdf_edges(cfg, a, err);
  const RadialPdf pa = radial_pdf(a, cfg.stats.burn_in, edges);
  const RadialPdf pb = radial_pdf(b, cfg.stats.burn_in, edges);
  double gap = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) gap = std::max(gap, norm(a.positions[n] - b.positions[n]));
  out << "pdf_l1=" << format_double(pdf_l1_distance(pa, pb)) << " final_gap=" << format_double(norm(a.positions.back() - b.positions.back()))
      << " max_gap=" << format_double(gap) << '\n';
  return kOk;
}

void print_check(std::ostream& out, const char* name, const CheckResult& c) {
  out << name << ": " << (c.ok ? "ok" : "FAIL") << " worst_margin=" << format_double(c.worst_margin)
      << " at=" << format_double(c.worst_at) << '\n';
}

int cmd_verify(const GlobalOptions& g, std::ostream& out, std::ostream&) {
  const RunConfig cfg = resolve_config(g);
  const AssumptionReport rep = verify_assumptions(cfg.build_model(), GridSpec{}, g.shift);
  print_check(out, "kernel", rep.kernel);
  print_check(out, "h_growth", rep.h_growth);
  print_check(out, "u_growth", rep.u_growth);
  print_check(out, "u_coercive", rep.u_coercive);
  print_check(out, "u_dominates", rep.u_dominates);
  if (rep.lambda) {
    out << "lambda: ok lambda=" << format_double(*rep.lambda) << " lambda1=" << format_double(*rep.lambda1) << '\n';
  } else {
    out << "lambda: FAIL\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << '\n';
  return rep.all_ok() ? kOk : kAssumptionFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic pilot-wave walker: simulation, orbits and invariant-measure statistics", "walker"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Run configuration file (key = value lines)");
  app.add_option("--set", g.overrides, "Override a config entry, key=value (repeatable)")->take_all();
  app.add_option("--out", g.out_dir, "Output directory");
  app.add_option("--seed", g.seed, "Override sim.seed");
  app.add_flag("--full", g.full, "Use sim.full_t_max as the final time");

  auto* sim = app.add_subcommand("simulate", "Integrate one trajectory and write it as CSV");
  auto* orbit = app.add_subcommand("orbit", "Solve for circular orbits (r0, omega); CSV on stdout");
  auto* pdf = app.add_subcommand("pdf", "Radial position density from a run or a trajectory CSV");
  pdf->add_option("--trajectory", g.trajectories, "Existing trajectory CSV");
  auto* moments = app.add_subcommand("moments", "Ensemble energy moments and structure functions");
  moments->add_option("--trajectory", g.trajectories, "Existing trajectory CSVs (ensemble members)");
  auto* couple = app.add_subcommand("couple", "Two runs with shared noise from different pasts");
  couple->add_option("--past-b", g.past_b, "Past of the second run: zero|constant|orbital|file");
  couple->add_option("--anchor-b", g.anchor_b, "Anchor of the second past: none|origin");
  auto* verify = app.add_subcommand("verify", "Grid-check the kernel, force and potential conditions");
  verify->add_option("--shift", g.shift, "Constant added to U for the checks");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*sim) return cmd_simulate(g, out, err);
    if (*orbit) return cmd_orbit(g, out, err);
    if (*pdf) return cmd_pdf(g, out, err);
    if (*moments) return cmd_moments(g, out, err);
    if (*couple) return cmd_couple(g, out, err);
    if (*verify) return cmd_verify(g, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const BlowUpError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace walker::cli
