#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/groebner_solver.hpp"
#include "schubert/problem_io.hpp"

using namespace schubert;
using namespace schubert::io;

TEST_CASE("problem files round-trip exactly") {
  auto prob = random_problem(3, 2, {2, 1, 1, 1, 1}, 17);
  const std::string text = dump(problem_to_json(prob));
  auto back = problem_from_json(parse(text));
  CHECK(back.m == 3);
  CHECK(back.p == 2);
  CHECK(back.seed == prob.seed);
  REQUIRE(back.conditions.size() == prob.conditions.size());
  for (std::size_t i = 0; i < prob.conditions.size(); ++i) {
    CHECK(back.conditions[i].k == prob.conditions[i].k);
    CHECK(back.conditions[i].matrix == prob.conditions[i].matrix);
  }
  CHECK(dump(problem_to_json(back)) == text);
  CHECK(dump(problem_to_json(random_problem(3, 2, {2, 1, 1, 1, 1}, 17))) == text);
}

TEST_CASE("complex numbers are two-element arrays") {
  auto j = complex_to_json({1.5, -0.25});
  CHECK(j.dump() == "[1.5,-0.25]");
  CHECK(complex_from_json(j) == Complex(1.5, -0.25));
  CHECK_THROWS_AS(complex_from_json(parse("[1.0]")), SchubertError);
  CHECK_THROWS_AS(complex_from_json(parse("{\"re\": 1}")), SchubertError);
  // doubles survive the text form bit for bit
  const double tricky = 0.1 + 0.2;
  CHECK(complex_from_json(parse(complex_to_json({tricky, 1.0 / 3.0}).dump())) == Complex(tricky, 1.0 / 3.0));
}

TEST_CASE("malformed problem files are rejected") {
  auto good = problem_to_json(random_problem(2, 2, {}, 3));
  auto missing = good;
  missing.erase("m");
  CHECK_THROWS_AS(problem_from_json(missing), SchubertError);

  auto wrong_sum = good;
  wrong_sum["conditions"].erase(wrong_sum["conditions"].size() - 1);
  CHECK_THROWS_AS(problem_from_json(wrong_sum), SchubertError);

  auto wrong_shape = good;
  wrong_shape["conditions"][0]["k"] = 2;
  wrong_shape["conditions"][1]["k"] = 0;
  CHECK_THROWS_AS(problem_from_json(wrong_shape), SchubertError);

  auto ragged = good;
  ragged["conditions"][0]["matrix"][1].erase(0);
  CHECK_THROWS_AS(problem_from_json(ragged), SchubertError);

  auto bad_type = good;
  bad_type["p"] = "two";
  CHECK_THROWS_AS(problem_from_json(bad_type), SchubertError);

  CHECK_THROWS_AS(parse("{not json"), SchubertError);
}

TEST_CASE("solution files") {
  auto prob = random_problem(2, 2, {}, 5);
  auto set = groebner::groebner_solve(prob, 9);
  REQUIRE(set.count() == 2);
  auto file = to_file(set);
  const std::string text = dump(solutions_to_json(file));
  CHECK(text.find("wall_time") == std::string::npos);
  auto back = solutions_from_json(parse(text));
  CHECK(back.solver == "groebner");
  CHECK(back.seed == 9);
  CHECK(back.count == 2);
  CHECK(back.expected == "2");
  CHECK(back.gamma_theta == set.gamma_theta);
  REQUIRE(back.solutions.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.solutions[i].matrix == set.solutions[i].matrix);
    CHECK(back.solutions[i].plucker == set.solutions[i].plucker.coords());
    CHECK(back.solutions[i].residuals == set.solutions[i].residuals);
    CHECK(back.solutions[i].path.steps == set.solutions[i].path.steps);
  }
  CHECK(dump(solutions_to_json(back)) == text);
  // same seed, same bytes
  CHECK(dump(solutions_to_json(to_file(groebner::groebner_solve(prob, 9)))) == text);

  auto timed = dump(solutions_to_json(to_file(set, true)));
  CHECK(timed.find("wall_time") != std::string::npos);
  CHECK(solutions_from_json(parse(timed)).wall_time.has_value());

  auto broken = parse(text);
  broken["solutions"][0]["matrix"].erase(0);
  CHECK_THROWS_AS(solutions_from_json(broken), SchubertError);
}
