#include <doctest.h>

#include "hsalg/report/acceptance.hpp"

using namespace hsalg;

TEST_CASE("profile names") {
  CHECK(parse_profile("quick") == Profile::Quick);
  CHECK(parse_profile("full") == Profile::Full);
  CHECK(profile_name(Profile::Quick) == "quick");
  CHECK_THROWS_AS(parse_profile("fast"), Error);
  CHECK_THROWS_AS(run_criterion(0, {}), Error);
  CHECK_THROWS_AS(run_criterion(kCriterionCount + 1, {}), Error);
}

TEST_CASE("corrupted structure constant is reported with its triple") {
  AcceptanceOptions opts;
  opts.profile = Profile::Quick;
  CHECK(run_criterion(1, opts).pass);
  opts.faults.corrupt_structure_constant = true;
  auto rep = run_criterion(1, opts);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.counterexample.contains("triple"));
  CHECK(rep.counterexample["triple"].size() == 3);
  CHECK(rep.counterexample["algebra"] == "o(3,2)");
}

TEST_CASE("reports are deterministic") {
  AcceptanceOptions opts;
  opts.profile = Profile::Quick;
  opts.seed = 7;
  for (int id : {3, 10}) CHECK(run_criterion(id, opts).to_json().dump() == run_criterion(id, opts).to_json().dump());
}
