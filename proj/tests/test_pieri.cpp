#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/groebner_solver.hpp"
#include "schubert/pieri_solver.hpp"
#include "schubert/random.hpp"

using namespace schubert;
using namespace schubert::pieri;
using combinat::ColumnSequence;

namespace {

ColumnSequence cs(int m, std::vector<int> e) {
  const int p = static_cast<int>(e.size());
  return ColumnSequence(m, p, std::move(e));
}

ComplexMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rng.unit_disc();
  return a;
}

int rank_of(const ComplexMatrix& a, double rel = 1e-9) {
  Eigen::VectorXd sv = singular_values(a);
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > rel * sv(0)) ++r;
  return r;
}

// span(a) inside span(b)
bool contained(const ComplexMatrix& a, const ComplexMatrix& b) { return rank_of(hcat(b, a)) == rank_of(b); }

ComplexMatrix coordinate_span(int n, int lo, int hi) {  // <e_lo..e_hi>, 1-based
  ComplexMatrix e = ComplexMatrix::Zero(n, hi - lo + 1);
  for (int i = lo; i <= hi; ++i) e(i - 1, i - lo) = 1.0;
  return e;
}

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
  CHECK(set.expected == combinat::schubert_count(prob.m, prob.p, prob.ks()));
  CHECK(set.max_residual() < 1e-8);
  if (set.count() > 1) CHECK(set.min_distance > 1e-4);
  // stage conservation
  for (std::size_t s = 0; s < set.stages.size(); ++s) {
    CHECK(set.stages[s].paths == set.stages[s].successes);
    if (s > 0) CHECK(set.stages[s].paths == set.stages[s - 1].successes);
  }
  // [X | K_i] drops rank by exactly one, with a clear gap
  for (const auto& sol : set.solutions)
    for (const auto& c : prob.conditions) {
      Eigen::VectorXd sv = singular_values(hcat(orthonormal_columns(sol.matrix), orthonormal_columns(c.matrix)));
      const auto last = sv.size() - 1;
      CHECK(sv(last) < 1e-8);
      CHECK(sv(last - 1) > 1e6 * sv(last));
    }
  std::vector<ComplexMatrix> xs;
  for (const auto& s : set.solutions) xs.push_back(s.matrix);
  CHECK(verify_solutions(prob, xs, set.expected, 1e-8).ok());
}

}  // namespace

TEST_CASE("normalize_frame puts L_0 and L'_0 in standard position") {
  auto prob = random_problem(5, 2, {2, 2, 2, 2, 2}, 11);
  auto part = combinat::default_partition(prob.ks());
  auto fr = normalize_frame(prob, part, 3);
  const int n = 7;
  const int r0 = part.blocks[0], r0p = part.blocks_prime[0];
  CHECK(contained(fr.l[0], coordinate_span(n, 1, 5 + 1 - r0)));
  CHECK(contained(fr.l_prime[0], coordinate_span(n, 2 + r0p, n)));
  // frame coordinates map back to the problem's conditions
  CHECK(contained(fr.basis * fr.n, prob.conditions[fr.n_source].matrix));
  CHECK(contained(prob.conditions[fr.n_source].matrix, fr.basis * fr.n));

  SUBCASE("subspaces already standard stay standard") {
    ProblemInstance std_prob = prob;
    std_prob.conditions[fr.l_source[0]].matrix = coordinate_span(n, 1, 4);
    std_prob.conditions[fr.l_prime_source[0]].matrix = coordinate_span(n, 4, 7);
    auto f2 = normalize_frame(std_prob, part, 3);
    // the basis preserves both coordinate subspaces
    CHECK(contained(f2.basis.leftCols(4), coordinate_span(n, 1, 4)));
    CHECK(contained(f2.basis.rightCols(4), coordinate_span(n, 4, 7)));
  }
  SUBCASE("disjoint case fills the gap") {
    auto p2 = random_problem(4, 2, {3, 3, 1, 1}, 5);
    auto part2 = combinat::default_partition(p2.ks());
    auto f3 = normalize_frame(p2, part2, 9);
    CHECK(contained(f3.l[0], coordinate_span(6, 1, 4 + 1 - part2.blocks[0])));
    CHECK(contained(f3.l_prime[0], coordinate_span(6, 2 + part2.blocks_prime[0], 6)));
  }
  SUBCASE("mismatched partition") {
    Partition bad{{3}, {2, 2, 2}, 1};
    CHECK_THROWS_AS(normalize_frame(prob, bad, 1), SchubertError);
  }
}

TEST_CASE("triple intersection start") {
  const int m = 5;
  ComplexMatrix n = random_matrix(7, 4, 21);
  auto x = triple_intersection_start(cs(m, {2, 5}), cs(m, {1, 6}), n);
  REQUIRE(x.has_value());
  // first column in <e1,e2,e3> with unit top entry, second column e6
  CHECK(std::abs((*x)(0, 0) - 1.0) < 1e-14);
  for (int i = 3; i < 7; ++i) CHECK((*x)(i, 0) == Complex(0.0));
  for (int i = 0; i < 7; ++i) CHECK((*x)(i, 1) == Complex(i == 5 ? 1.0 : 0.0));
  // meets N
  Eigen::VectorXd sv = singular_values(hcat(orthonormal_columns(*x), orthonormal_columns(n)));
  CHECK(sv(5) < 1e-12);
  CHECK(sv(4) > 1e-3);

  CHECK_FALSE(triple_intersection_start(cs(m, {3, 4}), cs(m, {3, 4}), random_matrix(7, 4, 22)).has_value());
}

TEST_CASE("Lambda families") {
  const int m = 5, p = 2, n = 7;
  ComplexMatrix f = random_flag_matrix(n, 31);
  for (int c = 0; c < n; ++c) {
    CHECK(f(n - 1 - c, c) == Complex(1.0));
    for (int i = n - c; i < n; ++i) CHECK(f(i, c) == Complex(0.0));
  }

  SUBCASE("worked example") {
    ComplexMatrix l = random_matrix(n, 4, 32);
    auto fam = LambdaFamily::build(f, l, cs(m, {1, 4}), 2, 1);
    CHECK(fam.u_pivot == std::vector<int>{6, 5, 1, 2, 3});
    const Complex t(0.3, -0.7);
    ComplexMatrix lam = fam.at(t);
    const auto& u = fam.u;
    CHECK((lam.col(0) - (t * u.col(0) + (1.0 - t) * u.col(1))).norm() < 1e-14);
    CHECK((lam.col(1) - (t * u.col(1) + (1.0 - t) * u.col(4))).norm() < 1e-14);
    CHECK((lam.col(2) - u.col(2)).norm() < 1e-14);
    CHECK((lam.col(3) - u.col(3)).norm() < 1e-14);
    CHECK(lam.row(6).norm() == 0.0);  // inside <e1..e6>
    CHECK(fam.pencil_within(6).constant.cols() == 4);
  }

  SUBCASE("Lambda_0(1) = L and generic rank") {
    for (auto [alpha, r] : {std::pair{cs(m, {1, 4}), 2}, {cs(m, {2, 5}), 1}, {cs(m, {1, 3}), 3}, {cs(m, {2, 3}), 3}}) {
      ComplexMatrix l = random_matrix(n, m + 1 - r, 33 + r);
      CHECK((lambda_family(f, l, alpha, r, 0, 1.0) - l).norm() < 1e-14);
      for (int i = 0; i < r; ++i) {
        CHECK(rank_of(lambda_family(f, l, alpha, r, i, Complex(0.41, 0.27))) == m + 1 - r);
        if (i + 1 < r) {  // consecutive families join up
          ComplexMatrix a = lambda_family(f, l, alpha, r, i, 0.0), b = lambda_family(f, l, alpha, r, i + 1, 1.0);
          CHECK(contained(a, b));
          CHECK(contained(b, a));
        }
      }
    }
  }

  SUBCASE("argument checks") {
    ComplexMatrix l = random_matrix(n, 4, 34);
    CHECK_THROWS_AS(lambda_family(f, l, cs(m, {1, 4}), 2, 2, 0.5), SchubertError);
    CHECK_THROWS_AS(lambda_family(f, l, cs(m, {1, 4}), 3, 0, 0.5), SchubertError);
  }
  (void)p;
}

TEST_CASE("stage systems of the worked (5,2) instance") {
  const int m = 5, p = 2;
  auto prob = random_problem(m, p, {2, 2, 2, 2, 2}, 41);
  auto part = combinat::default_partition(prob.ks());
  REQUIRE(part.blocks == std::vector<int>{2, 2});
  REQUIRE(part.blocks_prime == std::vector<int>{2, 2});
  auto pairs = combinat::sols(m, p, part.blocks, part.blocks_prime, part.q);
  REQUIRE(pairs.size() == 6);
  const combinat::SolsPair* pick = nullptr;
  for (const auto& pr : pairs)
    if (pr.R.endpoint() == cs(m, {2, 5}) && pr.S.endpoint() == cs(m, {1, 6})) pick = &pr;
  REQUIRE(pick != nullptr);
  CHECK(pick->R.nodes == std::vector<ColumnSequence>{cs(m, {1, 2}), cs(m, {1, 3}), cs(m, {1, 4}), cs(m, {2, 4}),
                                                      cs(m, {2, 5})});

  auto fr = normalize_frame(prob, part, 1);
  auto sch = make_schedule(fr, m, p, *pick, random_flag_matrix(7, 1), random_flag_matrix(7, 2));
  REQUIRE(sch.tau == 2);
  CHECK(sch.delta == cs(m, {1, 6}));
  CHECK(sch.stages[1].alpha == cs(m, {2, 4}));
  CHECK(sch.stages[1].alpha_prime == cs(m, {1, 6}));
  CHECK(sch.stages[0].alpha == cs(m, {1, 4}));
  CHECK(sch.stages[0].alpha_prime == cs(m, {1, 4}));

  auto c0 = stage_chart(sch, 0), c1 = stage_chart(sch, 1);
  std::vector<std::pair<int, int>> zeros;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < p; ++j)
      if (c0.slot(i, j) >= 0 && c1.slot(i, j) == plucker::MatrixChart::kZero) zeros.push_back({i + 1, j + 1});
  CHECK(zeros == std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {7, 2}});
  CHECK(c0.num_variables() == 6);
  CHECK(c1.num_variables() == 3);

  CHECK(stage_system(sch, 1).num_equations() == 7);
  CHECK(stage_system(sch, 0).num_equations() == 21);
  for (int k = 0; k <= 2; ++k) {
    int moving = 0;
    for (const auto& c : sch.stages[k].conditions) moving += c.moving;
    CHECK(moving <= 2);
  }

  // the top stage is constant and solved by the triple intersection
  auto top = stage_system(sch, 2);
  CHECK(top.max_t_degree() == 0);
  auto x = triple_intersection_start(sch.stages[2].alpha, sch.stages[2].alpha_prime, fr.n);
  REQUIRE(x.has_value());
  auto chart2 = stage_chart(sch, 2);
  CHECK((chart2.instantiate(chart2.coordinates(*x)) - *x).norm() < 1e-14);
  CHECK(top(chart2.coordinates(*x), 0.0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pieri_solve on (5,2) with five 2-planes") {
  auto prob = random_problem(5, 2, {2, 2, 2, 2, 2}, 51, true);
  auto set = pieri_solve(prob, std::nullopt, 51);
  CHECK(set.count() == 6);
  check_solved(prob, set);
}

TEST_CASE("pieri_solve on small mixed problems") {
  {
    auto prob = random_problem(2, 2, {2, 1, 1}, 61);
    auto set = pieri_solve(prob, std::nullopt, 61);
    CHECK(set.expected == combinat::schubert_count(2, 2, {2, 1, 1}));
    check_solved(prob, set);
  }
  for (auto [m, p, ks] : {std::tuple{4, 2, std::vector<int>{2, 1, 1, 1, 1, 2}}, {3, 3, {3, 2, 2, 1, 1}},
                          {2, 4, {1, 1, 1, 1, 1, 1, 1, 1}}, {4, 2, {3, 2, 1, 1, 1}}}) {
    CAPTURE(m);
    CAPTURE(p);
    auto prob = random_problem(m, p, ks, 62 + m);
    check_solved(prob, pieri_solve(prob, std::nullopt, 62));
  }
}

TEST_CASE("pieri_solve agrees with groebner_solve on hypersurface instances") {
  for (auto [m, p] : {std::pair{3, 2}, {2, 3}}) {
    auto prob = random_problem(m, p, {}, 70 + m);
    auto a = pieri_solve(prob, std::nullopt, 71);
    auto b = groebner::groebner_solve(prob, 72);
    check_solved(prob, a);
    CHECK(a.count() == b.count());
    CHECK(hausdorff(a, b) < 1e-6);
  }
}

TEST_CASE("pieri_solve on (6,2) with six 2-planes and a non-default partition") {
  auto prob = random_problem(6, 2, {2, 2, 2, 2, 2, 2}, 81);
  auto set = pieri_solve(prob, std::nullopt, 81);
  CHECK(set.count() == 15);
  check_solved(prob, set);

  Partition other{{2, 2, 2, 2}, {2}, 2};
  REQUIRE(other != combinat::default_partition(prob.ks()));
  auto again = pieri_solve(prob, other, 82);
  check_solved(prob, again);
  CHECK(hausdorff(set, again) < 1e-6);
}
