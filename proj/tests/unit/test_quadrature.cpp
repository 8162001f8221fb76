#include <doctest.h>

#include <cmath>

#include "walker/quadrature.hpp"

using namespace walker;

TEST_CASE("gauss_laguerre: small rules against closed-form nodes") {
  const auto& r1 = gauss_laguerre(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(1.0));
  CHECK(r1.weights[0] == doctest::Approx(1.0));
  const auto& r2 = gauss_laguerre(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-15));
}

TEST_CASE("gauss_laguerre: moments int z^k e^{-z} = k! are exact up to degree 2n-1") {
  const auto& r = gauss_laguerre(10);
  double fact = 1.0;
  for (int k = 0; k < 20; ++k) {
    if (k > 0) fact *= k;
    CHECK(r.integrate([k](double z) { return std::pow(z, k); }) == doctest::Approx(fact).epsilon(1e-11));
  }
}

TEST_CASE("gauss_laguerre: large rules keep unit mass and integrate smooth functions") {
  for (std::size_t n : {64u, 128u, 256u, 512u, 1024u}) {
    const auto& r = gauss_laguerre(n);
    CHECK(r.integrate([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-13));
    // int cos(z) e^{-z} dz = 1/2
    CHECK(std::fabs(r.integrate([](double z) { return std::cos(z); }) - 0.5) < 1e-13);
  }
}

TEST_CASE("gauss_laguerre: cached rules are the same object") {
  CHECK(&gauss_laguerre(64) == &gauss_laguerre(64));
}
