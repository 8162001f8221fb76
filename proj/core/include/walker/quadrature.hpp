#pragma once

#include <cstddef>
#include <vector>

namespace walker {

/// n-point Gauss-Laguerre rule for int_0^inf f(z) e^{-z} dz.
///
/// Nodes are the eigenvalues of the Laguerre Jacobi matrix (implicit QL),
/// polished by Newton on the three-term recurrence; weights come from
/// w_i = x_i / (n^2 L_{n-1}(x_i)^2), evaluated in log scale so rules with
/// hundreds of nodes do not overflow. Weights that underflow are dropped.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Builds (and caches) the n-point rule. Thread-safe.
const GaussLaguerreRule& gauss_laguerre(std::size_t n);

}  // namespace walker
