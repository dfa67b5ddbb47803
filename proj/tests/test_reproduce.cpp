#include <doctest.h>

#include "degenloci/correspondence.hpp"
#include "degenloci/reproduce.hpp"

using namespace degenloci;

namespace {

TripleParams triple(int n, int s, int m, const Field& f) {
  TripleParams t;
  t.n = n;
  t.s = s;
  t.m = m;
  t.field = &f;
  return t;
}

}  // namespace

TEST_CASE("criterion selection") {
  CHECK(select_criteria({}).size() == 10);
  CHECK(select_criteria({"invariants"}) == std::vector<int>{1, 2, 3});
  CHECK(select_criteria({"9", "roundtrip", "1"}) == std::vector<int>{1, 7, 9});
  CHECK(select_criteria({"census"}) == std::vector<int>{6, 9});
  CHECK_THROWS_AS(select_criteria({"nothing"}), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(11, {}), std::invalid_argument);
}

TEST_CASE("exact criteria pass and report their values") {
  for (int id : {1, 2, 3, 6}) {
    CheckResult r = run_criterion(id, {});
    CHECK(r.passed);
    CHECK(r.failures == 0);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("round trip counts pairs from a small point set") {
  RoundTripReport r = run_roundtrip(triple(3, 3, 1, Field::prime(101)), 200, 5);
  CHECK(r.pairs_tested == 200);
  CHECK(r.cases[static_cast<int>(ZCase::kA)] == 200);
  CHECK(r.recovered == 200);
  RoundTripReport again = run_roundtrip(triple(3, 3, 1, Field::prime(101)), 200, 5);
  CHECK(again.recovered == r.recovered);
  CHECK(again.sampler == r.sampler);
}

TEST_CASE("tangent points are case c") {
  TangentReport r = run_tangent_points(triple(4, 4, 1, Field::prime(101)), 20, 3);
  CHECK(r.built == 20);
  CHECK(r.case_c == 20);
  CHECK(r.witness_ok == 20);
}

TEST_CASE("parallel runs keep id order and results") {
  ReproduceOptions o;
  o.only = {"1", "2", "3", "6"};
  o.workers = 3;
  auto results = run_reproduction(o);
  REQUIRE(results.size() == 4);
  CHECK(results[0].id == 1);
  CHECK(results[3].id == 6);
  for (const auto& r : results) {
    CHECK(r.passed);
    CHECK(r.lines == run_criterion(r.id, o).lines);
  }
}
