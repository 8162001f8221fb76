#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "walker/orbit.hpp"
#include "walker/stats.hpp"
#include "walker/trajectory.hpp"

namespace walker {

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

/// Header `t,x,y,vx,vy` (2D) or `t,x,vx` (1D), one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
/// Parses the format above; throws std::runtime_error with a line number on
/// malformed input. Config echo fields other than dim/dt are left default.
Trajectory read_trajectory_csv(std::istream& is);

/// `r_lo,r_hi,density`
void write_pdf_csv(std::ostream& os, const RadialPdf& pdf);
/// `t,mean_phi,mean_phi_p`
void write_moments_csv(std::ostream& os, const MomentSeries& series);
/// `# slope_x=..., slope_v=...` then `lag,sx4,sv4`
void write_structure_csv(std::ostream& os, const StructureFunction& sf);
/// `r0,omega,residual`
void write_orbits_csv(std::ostream& os, std::span<const OrbitSolution> orbits);

}  // namespace walker
