#include "walker/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace walker {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(std::string_view s, std::size_t line_no) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    std::ostringstream msg;
    msg << "line " << line_no << ": cannot parse number '" << s << "'";
    throw std::runtime_error(msg.str());
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << (traj.dim == 1 ? "t,x,vx\n" : "t,x,y,vx,vy\n");
  std::string row;
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const Vec2& x = traj.positions[n];
    const Vec2& v = traj.velocities[n];
    row.clear();
    row += format_double(traj.times[n]);
    row += ',';
    row += format_double(x.x);
    if (traj.dim == 2) {
      row += ',';
      row += format_double(x.y);
    }
    row += ',';
    row += format_double(v.x);
    if (traj.dim == 2) {
      row += ',';
      row += format_double(v.y);
    }
    row += '\n';
    os << row;
  }
}

Trajectory read_trajectory_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) throw std::runtime_error("trajectory CSV: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Trajectory traj;
  if (line == "t,x,vx") {
    traj.dim = 1;
  } else if (line == "t,x,y,vx,vy") {
    traj.dim = 2;
  } else {
    throw std::runtime_error("trajectory CSV: unexpected header '" + line + "'");
  }
  const std::size_t cols = traj.dim == 1 ? 3 : 5;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split(line);
    if (f.size() != cols) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected " << cols << " columns, got " << f.size();
      throw std::runtime_error(msg.str());
    }
    const double t = parse_double(f[0], line_no);
    if (traj.dim == 1) {
      traj.push_back(t, {parse_double(f[1], line_no), 0.0}, {parse_double(f[2], line_no), 0.0});
    } else {
      traj.push_back(t, {parse_double(f[1], line_no), parse_double(f[2], line_no)},
                     {parse_double(f[3], line_no), parse_double(f[4], line_no)});
    }
  }
  traj.params.dim = traj.dim;
  if (traj.size() > 1) traj.dt = traj.times[1] - traj.times[0];
  return traj;
}

void write_pdf_csv(std::ostream& os, const RadialPdf& pdf) {
  os << "r_lo,r_hi,density\n";
  for (std::size_t i = 0; i < pdf.bins(); ++i) {
    os << format_double(pdf.edges[i]) << ',' << format_double(pdf.edges[i + 1]) << ','
       << format_double(pdf.density[i]) << '\n';
  }
}

void write_moments_csv(std::ostream& os, const MomentSeries& series) {
  os << "t,mean_phi,mean_phi_p\n";
  for (std::size_t n = 0; n < series.times.size(); ++n) {
    os << format_double(series.times[n]) << ',' << format_double(series.mean_phi[n]) << ','
       << format_double(series.mean_phi_p[n]) << '\n';
  }
}

void write_structure_csv(std::ostream& os, const StructureFunction& sf) {
  os << "# slope_x=" << format_double(sf.slope_x) << ", slope_v=" << format_double(sf.slope_v) << '\n';
  os << "lag,sx" << sf.order << ",sv" << sf.order << '\n';
  for (std::size_t i = 0; i < sf.lags.size(); ++i) {
    os << format_double(sf.lags[i]) << ',' << format_double(sf.sx[i]) << ',' << format_double(sf.sv[i]) << '\n';
  }
}

void write_orbits_csv(std::ostream& os, std::span<const OrbitSolution> orbits) {
  os << "r0,omega,residual\n";
  for (const auto& o : orbits) {
    os << format_double(o.r0) << ',' << format_double(o.omega) << ',' << format_double(o.residual_norm) << '\n';
  }
}

}  // namespace walker
