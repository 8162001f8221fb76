#include "walker/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace walker {
namespace {

// Eigenvalues of the symmetric tridiagonal matrix (diag d, off-diagonal e with
// e[i] coupling rows i and i+1) by implicit QL with Wilkinson shifts.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  e.resize(n, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("gauss_laguerre: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        std::size_t i = m;
        bool deflated = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// L_n(x) and L_{n-1}(x) sharing a scale factor exp(log_scale). Extended
// precision keeps the polished nodes and weights near double roundoff up to
// n = 1024.
struct LaguerrePair {
  long double ln;
  long double lnm1;
  long double log_scale;
};

LaguerrePair laguerre(std::size_t n, long double x) {
  long double prev = 1.0L;     // L_0
  long double cur = 1.0L - x;  // L_1
  long double log_scale = 0.0L;
  if (n == 0) return {1.0L, 0.0L, 0.0L};
  for (std::size_t k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L - x) * cur - k * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    const long double mag = std::fabs(cur);
    if (mag > 1e150L) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
  }
  return {cur, prev, log_scale};
}

GaussLaguerreRule build(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  std::vector<double> diag(n);
  std::vector<double> off(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = i + 1.0;
  std::vector<double> x = tridiagonal_eigenvalues(diag, off);

  GaussLaguerreRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  const long double dn = static_cast<long double>(n);
  for (double x0 : x) {
    // Newton on L_n with L_n' = n (L_n - L_{n-1}) / x.
    long double xi = x0;
    for (int it = 0; it < 10; ++it) {
      const auto lp = laguerre(n, xi);
      const long double deriv = dn * (lp.ln - lp.lnm1) / xi;
      const long double step = lp.ln / deriv;
      xi -= step;
      if (std::fabs(step) <= 1e-18L * xi) break;
    }
    const auto lp = laguerre(n, xi);
    const long double log_w =
        std::log(xi) - 2.0L * std::log(dn) - 2.0L * (std::log(std::fabs(lp.lnm1)) + lp.log_scale);
    const double w = static_cast<double>(std::exp(log_w));
    if (w == 0.0) continue;
    rule.nodes.push_back(static_cast<double>(xi));
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<GaussLaguerreRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLaguerreRule>(build(n));
  return *slot;
}

}  // namespace walker
