#include <doctest.h>

#include "walker/assumptions.hpp"

using namespace walker;

TEST_CASE("assumptions: canonical model passes with the unit potential shift") {
  const Model m = Model::canonical(ModelParams{});
  const AssumptionReport r = verify_assumptions(m);
  CHECK(r.kernel.ok);
  CHECK(r.kernel.worst_margin == doctest::Approx(0.0).epsilon(1e-12));  // K' = -K holds with equality
  CHECK(r.h_growth.ok);
  CHECK(r.u_growth.ok);
  CHECK(r.u_coercive.ok);
  CHECK(r.u_dominates.ok);
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda > 0.0);
  CHECK(*r.lambda < 1.0);
  CHECK(*r.lambda1 > 0.0);
  CHECK(r.all_ok());
  CHECK(r.potential_shift == 1.0);
}

TEST_CASE("assumptions: 1D force growth with a_H = 1, p1 = 0") {
  ModelParams p;
  p.dim = 1;
  const AssumptionReport r = verify_assumptions(Model::canonical(p));
  CHECK(r.h_growth.ok);
}

TEST_CASE("assumptions: unshifted harmonic potential violates U >= 1 near the origin") {
  const AssumptionReport r = verify_assumptions(Model::canonical(ModelParams{}), GridSpec{}, 0.0);
  CHECK_FALSE(r.u_dominates.ok);
  CHECK_FALSE(r.all_ok());
  CHECK_FALSE(r.notes.empty());
}
