#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/groebner_solver.hpp"

using namespace schubert;
using namespace schubert::groebner;
using combinat::ColumnSequence;
using combinat::sequence_rank;

namespace {

// Largest distance from a solution in `a` to its nearest neighbour in `b`, both ways.
double hausdorff(const SolutionSet& a, const SolutionSet& b) {
  auto one = [](const SolutionSet& u, const SolutionSet& v) {
    double worst = 0.0;
    for (const auto& s : u.solutions) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& t : v.solutions) best = std::min(best, plucker::plucker_distance(s.plucker, t.plucker));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one(a, b), one(b, a));
}

void check_solved(const ProblemInstance& prob, const SolutionSet& set) {
  CHECK(set.failed_paths == 0);
  CHECK(set.count_matches());
  CHECK(set.max_residual() < 1e-8);
  for (const auto& s : set.solutions) CHECK(s.relation_residual < 1e-8);
  if (set.count() > 1) CHECK(set.min_distance > 1e-4);
  auto rep = verify_solutions(prob, [&] {
    std::vector<ComplexMatrix> xs;
    for (const auto& s : set.solutions) xs.push_back(s.matrix);
    return xs;
  }(), set.expected, 1e-8);
  CHECK(rep.ok());
}

}  // namespace

TEST_CASE("chain starts satisfy the linear sections and vanish off the chain") {
  for (auto [m, p] : {std::pair{1, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    auto prob = random_problem(m, p, {}, 40 + m + p);
    auto coeffs = plucker::laplace_coeffs(m, p, prob.matrices());
    auto starts = groebner_start_solutions(m, p, coeffs);
    CHECK(starts.size() == static_cast<std::size_t>(combinat::grassmann_degree(m, p)));
    for (const auto& s : starts) {
      std::vector<bool> on(s.point.size(), false);
      for (const auto& n : s.chain.nodes) on[sequence_rank(n)] = true;
      for (std::size_t k = 0; k < s.point.size(); ++k)
        if (!on[k]) CHECK(s.point[k] == Complex(0.0));
      CHECK(std::abs(s.point[s.point.argmax()] - 1.0) < 1e-15);
      for (const auto& c : coeffs.per_condition) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * s.point[k];
        CHECK(std::abs(sum) < 1e-12);
      }
    }
  }
}

TEST_CASE("(3,2) starts are supported on the complements of the t = 0 triples") {
  auto prob = random_problem(3, 2, {}, 5);
  auto starts = groebner_start_solutions(3, 2, plucker::laplace_coeffs(3, 2, prob.matrices()));
  REQUIRE(starts.size() == 5);
  // each start is zero on exactly the three coordinates off its chain
  for (const auto& s : starts) {
    int zeros = 0;
    for (std::size_t k = 0; k < s.point.size(); ++k) zeros += s.point[k] == Complex(0.0);
    CHECK(zeros == 3);
  }
  ColumnSequence a(3, 2, {2, 3}), b(3, 2, {2, 4}), c(3, 2, {3, 4});
  int hit = 0;
  for (const auto& s : starts)
    if (s.point[a] == Complex(0.0) && s.point[b] == Complex(0.0) && s.point[c] == Complex(0.0)) ++hit;
  CHECK(hit == 1);
}

TEST_CASE("(2,2) starts annihilate the monomial lead [14][23]") {
  auto prob = random_problem(2, 2, {}, 8);
  auto starts = groebner_start_solutions(2, 2, plucker::laplace_coeffs(2, 2, prob.matrices()));
  REQUIRE(starts.size() == 2);
  for (const auto& s : starts)
    CHECK(s.point[ColumnSequence(2, 2, {1, 4})] * s.point[ColumnSequence(2, 2, {2, 3})] == Complex(0.0));
}

TEST_CASE("groebner solve on small Grassmannians") {
  for (auto [m, p] : {std::pair{1, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    auto prob = random_problem(m, p, {}, 100 + m * 10 + p);
    auto set = groebner_solve(prob, 7);
    check_solved(prob, set);
  }
}

TEST_CASE("groebner (4,2) gives 14 solutions") {
  auto prob = random_problem(4, 2, {}, 424);
  auto set = groebner_solve(prob, 3);
  CHECK(set.count() == 14);
  check_solved(prob, set);
}

TEST_CASE("solution set does not depend on the seed") {
  auto prob = random_problem(3, 2, {}, 77);
  auto a = groebner_solve(prob, 1);
  auto b = groebner_solve(prob, 2);
  REQUIRE(a.count() == 5);
  REQUIRE(b.count() == 5);
  CHECK(hausdorff(a, b) < 1e-8);
}

TEST_CASE("mixed conditions are rejected") {
  auto prob = random_problem(3, 2, {2, 1, 1, 1, 1}, 1);
  CHECK_THROWS_AS(groebner_solve(prob, 1), SchubertError);
}
