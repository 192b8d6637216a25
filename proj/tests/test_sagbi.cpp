#include <doctest.h>

#include "schubert/groebner_solver.hpp"
#include "schubert/sagbi_solver.hpp"

using namespace schubert;
using namespace schubert::sagbi;

namespace {

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

// The (2,2) toric system eliminated by hand. Unknowns a = x21, b = x31, c = x32, d = x42;
// monomials 1, c, d, ac, ad, bd. The four equations leave a line u0 + l u1 in (c, d, ac, ad, bd),
// and ac * d = ad * c is a quadratic in l.
std::vector<ComplexVector> toric_22_by_elimination(const plucker::LaplaceCoefficients& coeffs) {
  ComplexMatrix a(4, 5);
  ComplexVector rhs(4);
  for (int i = 0; i < 4; ++i) {
    const auto& c = coeffs.per_condition[i];
    rhs(i) = -c[0];
    for (int k = 0; k < 5; ++k) a(i, k) = c[k + 1];
  }
  ComplexVector u0 = a.colPivHouseholderQr().solve(rhs);
  Eigen::FullPivLU<ComplexMatrix> lu(a);
  ComplexVector u1 = lu.kernel().col(0);
  // (u0_2 + l u1_2)(u0_1 + l u1_1) - (u0_3 + l u1_3)(u0_0 + l u1_0) = 0
  Complex qa = u1(2) * u1(1) - u1(3) * u1(0);
  Complex qb = u0(2) * u1(1) + u1(2) * u0(1) - u0(3) * u1(0) - u1(3) * u0(0);
  Complex qc = u0(2) * u0(1) - u0(3) * u0(0);
  Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  std::vector<ComplexVector> out;
  for (Complex l : {(-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa)}) {
    ComplexVector u = u0 + l * u1;
    Complex c = u(0), d = u(1);
    Complex x21 = u(2) / c, x31 = u(4) / d;
    // sagbi chart order: x21, x31, x32, x42
    ComplexVector x(4);
    x << x21, x31, c, d;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("polyhedral start on (2,2) matches elimination") {
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    auto prob = random_problem(2, 2, {}, seed);
    auto coeffs = plucker::laplace_coeffs(2, 2, prob.matrices());
    auto res = polyhedral_start(2, 2, coeffs, seed);
    auto oracle = toric_22_by_elimination(coeffs);
    REQUIRE(res.solutions.size() == 2);
    for (const auto& x : res.solutions) {
      REQUIRE(x.size() == 4);
      double best = std::min((x - oracle[0]).norm(), (x - oracle[1]).norm());
      CHECK(best < 1e-8);
    }
    CHECK((res.solutions[0] - res.solutions[1]).norm() > 1e-4);
  }
}

TEST_CASE("polyhedral start gives torus solutions of the toric system") {
  for (auto [m, p] : {std::pair{1, 1}, {3, 2}, {2, 3}, {4, 2}}) {
    auto prob = random_problem(m, p, {}, 9 + m);
    auto coeffs = plucker::laplace_coeffs(m, p, prob.matrices());
    auto toric = toric_system(m, p, coeffs);
    auto full = plucker::sagbi_homotopy_system(m, p, coeffs);
    auto res = polyhedral_start(m, p, coeffs, 5);
    CHECK(res.solutions.size() == static_cast<std::size_t>(combinat::grassmann_degree(m, p)));
    for (const auto& x : res.solutions) {
      REQUIRE(x.size() == m * p);
      CHECK(x.cwiseAbs().minCoeff() > 1e-8);
      CHECK(toric(x, 0.0).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(full(x, 0.0).cwiseAbs().maxCoeff() < 1e-10);
    }
    for (std::size_t i = 0; i < res.solutions.size(); ++i)
      for (std::size_t j = i + 1; j < res.solutions.size(); ++j)
        CHECK((res.solutions[i] - res.solutions[j]).norm() > 1e-6);
  }
}

TEST_CASE("cell homotopy starts solve the chain system at tau = 0") {
  auto prob = random_problem(3, 2, {}, 31);
  auto coeffs = plucker::laplace_coeffs(3, 2, prob.matrices());
  auto support = plucker::support_and_weights(3, 2);
  CHECK(support.cells.size() == 5);
  for (const auto& cell : support.cells) {
    auto h = cell_homotopy(support, cell, coeffs);
    CHECK(h.system(h.start, 0.0).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(h.scale >= 1);
  }
}

TEST_CASE("sagbi solve counts and agrees with the groebner solver") {
  auto prob = random_problem(3, 2, {}, 55);
  auto s = sagbi_solve(prob, 4);
  auto g = groebner::groebner_solve(prob, 4);
  CHECK(s.count() == 5);
  CHECK(g.count() == 5);
  CHECK(s.max_residual() < 1e-8);
  CHECK(hausdorff(s, g) < 1e-6);
  REQUIRE(s.stages.size() == 2);
  CHECK(s.stages[0].successes == 5);

  auto one = sagbi_solve(random_problem(1, 1, {}, 2), 1);
  CHECK(one.count() == 1);
  CHECK(one.max_residual() < 1e-8);
}

TEST_CASE("sagbi solve on (4,2) and (5,2)") {
  for (auto [m, expected] : {std::pair{4, 14}, {5, 42}}) {
    auto prob = random_problem(m, 2, {}, 600 + m);
    auto set = sagbi_solve(prob, 8);
    CHECK(set.count() == static_cast<std::size_t>(expected));
    CHECK(set.failed_paths == 0);
    CHECK(set.max_residual() < 1e-8);
    CHECK(set.min_distance > 1e-4);
  }
}

TEST_CASE("sagbi solve on (2,3) agrees with groebner") {
  auto prob = random_problem(2, 3, {}, 71);
  auto s = sagbi_solve(prob, 1);
  auto g = groebner::groebner_solve(prob, 1);
  CHECK(s.count() == 5);
  CHECK(hausdorff(s, g) < 1e-6);
}
