#include "walker/initial_past.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walker {

InitialPast InitialPast::tabulated(std::vector<double> times, std::vector<Vec2> positions,
                                   std::vector<Vec2> velocities, TailExtension extension) {
  if (times.empty()) throw std::invalid_argument("tabulated past: no samples");
  if (positions.size() != times.size() || velocities.size() != times.size()) {
    throw std::invalid_argument("tabulated past: times, positions and velocities differ in length");
  }
  if (times.back() != 0.0) throw std::invalid_argument("tabulated past: last sample must be at s = 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("tabulated past: times must increase");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!is_finite(positions[i]) || !is_finite(velocities[i])) {
      throw std::invalid_argument("tabulated past: non-finite sample");
    }
  }
  return InitialPast(Tabulated{std::move(times), std::move(positions), std::move(velocities), extension});
}

InitialPast InitialPast::orbital(double r0, double omega) {
  if (!(r0 >= 0.0) || !std::isfinite(omega)) throw std::invalid_argument("orbital past: need r0 >= 0, finite omega");
  return InitialPast(Orbital{r0, omega, {}, {}});
}

const char* InitialPast::kind() const noexcept {
  switch (v_.index()) {
    case 0: return "zero";
    case 1: return "constant";
    case 2: return "tabulated";
    default: return "orbital";
  }
}

std::pair<Vec2, Vec2> InitialPast::value_at(double s) const {
  if (!(s <= 0.0)) throw std::domain_error("initial past evaluated at s > 0");
  if (std::holds_alternative<Zero>(v_)) return {};
  if (const auto* c = std::get_if<Constant>(&v_)) return {c->point, Vec2{}};
  if (const auto* o = std::get_if<Orbital>(&v_)) {
    const double c = std::cos(o->omega * s);
    const double sn = std::sin(o->omega * s);
    return {Vec2{o->r0 * c, o->r0 * sn} + o->offset,
            Vec2{-o->r0 * o->omega * sn, o->r0 * o->omega * c} + o->velocity_offset};
  }
  const auto& tab = std::get<Tabulated>(v_);
  if (s < tab.times.front()) {
    if (tab.extension == TailExtension::zero) return {};
    return {tab.positions.front(), Vec2{}};
  }
  const auto it = std::lower_bound(tab.times.begin(), tab.times.end(), s);
  const auto hi = static_cast<std::size_t>(it - tab.times.begin());
  if (tab.times[hi] == s || hi == 0) return {tab.positions[hi], tab.velocities[hi]};
  const std::size_t lo = hi - 1;
  const double w = (s - tab.times[lo]) / (tab.times[hi] - tab.times[lo]);
  return {tab.positions[lo] * (1.0 - w) + tab.positions[hi] * w,
          tab.velocities[lo] * (1.0 - w) + tab.velocities[hi] * w};
}

InitialPast InitialPast::anchored_at(const Vec2& x0, const Vec2& v0) const {
  const auto [x, v] = value_at(0.0);
  const Vec2 dx = x0 - x;
  const Vec2 dv = v0 - v;
  if (std::holds_alternative<Zero>(v_) || std::holds_alternative<Constant>(v_)) {
    if (!(dv == Vec2{})) {
      // Constant pasts carry zero velocity; a velocity shift needs samples.
      return tabulated({0.0}, {x0}, {v0}, TailExtension::constant);
    }
    return constant(x0);
  }
  if (const auto* o = std::get_if<Orbital>(&v_)) {
    Orbital shifted = *o;
    shifted.offset += dx;
    shifted.velocity_offset += dv;
    return InitialPast(shifted);
  }
  Tabulated tab = std::get<Tabulated>(v_);
  for (auto& p : tab.positions) p += dx;
  for (auto& q : tab.velocities) q += dv;
  // The translated zero extension would no longer be continuous; hold the
  // first sample instead.
  tab.extension = TailExtension::constant;
  return InitialPast(std::move(tab));
}

}  // namespace walker
