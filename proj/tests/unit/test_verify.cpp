#include "knotarith/errors.hpp"
#include "knotarith/verify/criteria.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace knotarith;

TEST_CASE("suites partition the criteria") {
  std::multiset<int> seen;
  for (const char* s : {"fox", "zeta", "covers", "arith"})
    for (int id : verify::suite_criteria(s)) seen.insert(id);
  CHECK(seen == std::multiset<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(verify::suite_criteria("all").size() == 9);
  CHECK_THROWS_AS(verify::suite_criteria("everything"), ValidationError);
  CHECK_THROWS_AS(verify::run_criterion(0), ValidationError);
  CHECK_THROWS_AS(verify::run_criterion(10), ValidationError);
}

TEST_CASE("criterion results are reported with their limits") {
  const auto r = verify::run_criterion(1);
  CHECK(r.id == 1);
  CHECK(r.passed);
  CHECK(r.limit_seconds == 1.0);
  CHECK(verify::format_result(r).rfind("PASS [1] ", 0) == 0);
  const auto suite = verify::run_suite("covers");
  REQUIRE(suite.size() == 5);
  CHECK(suite.back().id == 0);
  CHECK(std::all_of(suite.begin(), suite.end(), [](const auto& x) { return x.passed; }));
}

TEST_CASE("a wrong knot table makes criteria fail rather than throw") {
  const auto swapped = knots::KnotTable::parse("3_1 4 true X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n");
  verify::Settings s;
  s.table = &swapped;
  const auto r = verify::run_criterion(1, s);
  CHECK_FALSE(r.passed);
  const auto missing = verify::run_criterion(4, s);  // 4_1 is absent
  CHECK_FALSE(missing.passed);
  CHECK(missing.detail.find("unknown knot") != std::string::npos);
}
