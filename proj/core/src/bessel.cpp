#include "walker/bessel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

// Coefficients follow the double-precision J1 approximation distributed with
// Boost.Math (Xiaogang Zhang, 2006; Boost Software License 1.0): minimax
// rationals on root-bracketing intervals for |x| <= 8, Hart's Hankel
// asymptotic rationals for |x| > 8.

namespace walker {
namespace {

template <std::size_t N>
constexpr double rational(const std::array<double, N>& p, const std::array<double, N>& q, double z) noexcept {
  double num = p[N - 1];
  double den = q[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) {
    num = num * z + p[i];
    den = den * z + q[i];
  }
  return num / den;
}

constexpr std::array<double, 7> kP1 = {
    -1.4258509801366645672e+11, 6.6781041261492395835e+09, -1.1548696764841276794e+08,
    9.8062904098958257677e+05,  -4.4615792982775076130e+03, 1.0650724020080236441e+01,
    -1.0767857011487300348e-02};
constexpr std::array<double, 7> kQ1 = {
    4.1868604460820175290e+12, 4.2091902282580133541e+10, 2.0228375140097033958e+08,
    5.9117614494174794095e+05, 1.0742272239517380498e+03, 1.0,
    0.0};
constexpr std::array<double, 8> kP2 = {
    -1.7527881995806511112e+16, 1.6608531731299018674e+15, -3.6658018905416665164e+13,
    3.5580665670910619166e+11,  -1.8113931269860667829e+09, 5.0793266148011179143e+06,
    -7.5023342220781607561e+03, 4.6179191852758252278e+00};
constexpr std::array<double, 8> kQ2 = {
    1.7253905888447681194e+18, 1.7128800897135812012e+16, 8.4899346165481429307e+13,
    2.7622777286244082666e+11, 6.4872502899596389593e+08, 1.1267125065029138050e+06,
    1.3886978985861357615e+03, 1.0};
constexpr std::array<double, 7> kPC = {
    -4.4357578167941278571e+06, -9.9422465050776411957e+06, -6.6033732483649391093e+06,
    -1.5235293511811373833e+06, -1.0982405543459346727e+05, -1.6116166443246101165e+03,
    0.0};
constexpr std::array<double, 7> kQC = {
    -4.4357578167941278568e+06, -9.9341243899345856590e+06, -6.5853394797230870728e+06,
    -1.5118095066341608816e+06, -1.0726385991103820119e+05, -1.4550094401904961825e+03,
    1.0};
constexpr std::array<double, 7> kPS = {
    3.3220913409857223519e+04, 8.5145160675335701966e+04, 6.6178836581270835179e+04,
    1.8494262873223866797e+04, 1.7063754290207680021e+03, 3.5265133846636032186e+01,
    0.0};
constexpr std::array<double, 7> kQS = {
    7.0871281941028743574e+05, 1.8194580422439972989e+06, 1.4194606696037208929e+06,
    4.0029443582266975117e+05, 3.7890229745772202641e+04, 8.6383677696049909675e+02,
    1.0};

// Zeros j_{1,1} and j_{1,2}, each split into a coarse part exact in binary
// (numerator / 256) and a correction.
constexpr double kZero1 = 3.8317059702075123156e+00;
constexpr double kZero1Hi = 9.810e+02;
constexpr double kZero1Lo = -3.2527979248768438556e-04;
constexpr double kZero2 = 7.0155866698156187535e+00;
constexpr double kZero2Hi = 1.7960e+03;
constexpr double kZero2Lo = -3.8330184381246462950e-05;

constexpr double kInvSqrtPi = 0.56418958354775628695;

}  // namespace

namespace detail {

double bessel_j1_unchecked(double x) noexcept {
  const double w = std::fabs(x);
  double value;
  if (w == 0.0) {
    return 0.0;
  }
  if (w <= 4.0) {
    const double r = rational(kP1, kQ1, x * x);
    value = w * (w + kZero1) * ((w - kZero1Hi / 256.0) - kZero1Lo) * r;
  } else if (w <= 8.0) {
    const double r = rational(kP2, kQ2, x * x);
    value = w * (w + kZero2) * ((w - kZero2Hi / 256.0) - kZero2Lo) * r;
  } else {
    const double y = 8.0 / w;
    const double y2 = y * y;
    const double rc = rational(kPC, kQC, y2);
    const double rs = rational(kPS, kQS, y2);
    // cos(w - 3pi/4) and sin(w - 3pi/4) expanded so the sqrt(2)/2 factors
    // cancel against the prefactor.
    const double sw = std::sin(w);
    const double cw = std::cos(w);
    value = kInvSqrtPi / std::sqrt(w) * (rc * (sw - cw) + y * rs * (sw + cw));
  }
  return x < 0.0 ? -value : value;
}

}  // namespace detail

double bessel_j1(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("bessel_j1: non-finite argument");
  }
  return detail::bessel_j1_unchecked(x);
}

}  // namespace walker
