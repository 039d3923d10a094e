#include "braidlcs/suites.hpp"
#include "doctest.h"

using namespace braidlcs;

TEST_CASE("theorem1 with explicit parameters has three passing checks") {
  SuiteParams p;
  p.values = {{"n", 3}, {"g", 1}};
  auto r = run_suite("theorem1", p);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.passed());
  CHECK(r.checks[0].name == "theorem1.abelianization_n3_g1");
  CHECK(r.checks[1].computed == "Z/3");
}

TEST_CASE("witt suite with k and c") {
  SuiteParams p;
  p.values = {{"k", 2}, {"c", 5}};
  auto r = run_suite("witt", p);
  CHECK(r.checks.size() == 5);
  CHECK(r.passed());
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nosuchsuite"), UnknownSuite);
}

TEST_CASE("reports are sorted and deterministic") {
  auto a = run_suite("theorem3");
  auto b = run_suite("b2t2");
  CHECK(a.passed());
  for (std::size_t i = 1; i < a.checks.size(); ++i) CHECK(a.checks[i - 1].name < a.checks[i].name);
  CHECK(to_json(a).substr(to_json(a).find("\"checks\"")) ==
        to_json(b).substr(to_json(b).find("\"checks\"")));
  CHECK(to_json(run_suite("theorem3")) == to_json(a));
  CHECK(to_json(a, true).find("elapsed_seconds") != std::string::npos);
  CHECK(to_json(a).find("elapsed_seconds") == std::string::npos);
}

TEST_CASE("a failing check fails the report") {
  SuiteReport r{"x", {Check{"x.a", "", "1", "1", true, 0}, Check{"x.b", "", "1", "2", false, 0}}};
  CHECK_FALSE(r.passed());
  CHECK(to_text(r).find("FAIL x.b") != std::string::npos);
}
