#pragma once

namespace walker {

/// Bessel function of the first kind, order one.
///
/// Minimax rational approximations on (0, 4] and (4, 8], Hankel asymptotic
/// form beyond 8. Absolute error stays below 1e-14 on |x| <= 50.
/// Throws std::domain_error for non-finite input.
double bessel_j1(double x);

namespace detail {
/// Unchecked kernel used by inner loops; caller guarantees finite input.
double bessel_j1_unchecked(double x) noexcept;
}  // namespace detail

/// First positive zero of J1.
inline constexpr double kBesselJ1FirstZero = 3.8317059702075123156;

}  // namespace walker
