#include "schubert/groebner_solver.hpp"

#include <chrono>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert::groebner {

using combinat::sequence_rank;

std::vector<ChainStart> groebner_start_solutions(int m, int p, const plucker::LaplaceCoefficients& coeffs) {
  if (static_cast<int>(coeffs.per_condition.size()) != m * p)
    fail_argument("groebner_start_solutions: expected mp conditions");
  const std::size_t total = combinat::all_sequences(m, p).size();
  std::vector<ChainStart> out;
  for (const auto& chain : combinat::maximal_chains(m, p)) {
    ComplexMatrix a(m * p, m * p + 1);
    for (int i = 0; i < m * p; ++i)
      for (int c = 0; c <= m * p; ++c) a(i, c) = coeffs.per_condition[i][sequence_rank(chain.nodes[c])];
    ComplexMatrix ker = null_space(a);
    if (ker.cols() != 1) {
      std::string desc;
      for (const auto& n : chain.nodes) desc += n.str();
      fail_nongeneric("groebner_start_solutions: kernel of dimension " + std::to_string(ker.cols()) + " on chain " +
                      desc);
    }
    std::vector<Complex> coords(total, 0.0);
    Eigen::Index big = 0;
    ker.col(0).cwiseAbs().maxCoeff(&big);
    ComplexVector v = ker.col(0) / ker(big, 0);
    for (int c = 0; c <= m * p; ++c) coords[sequence_rank(chain.nodes[c])] = v(c);
    out.push_back({chain, plucker::PluckerVector(m, p, std::move(coords))});
  }
  return out;
}

namespace {

SolutionSet solve_once(const ProblemInstance& problem, const ParametricSystem& system,
                       const std::vector<ChainStart>& starts, std::uint64_t seed, const SolveOptions& opts) {
  const int m = problem.m, p = problem.p;
  const tracker::GammaPath path = tracker::gamma_path(seed);

  std::vector<tracker::SquaredHomotopy> hs;
  std::vector<ComplexVector> xs;
  std::vector<int> fixed;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto& pt = starts[i].point;
    const int idx = static_cast<int>(pt.argmax());
    ComplexVector x(static_cast<Eigen::Index>(pt.size() - 1));
    for (std::size_t k = 0, j = 0; k < pt.size(); ++k)
      if (static_cast<int>(k) != idx) x(static_cast<Eigen::Index>(j++)) = pt[k] / pt[idx];
    hs.push_back(tracker::square(system.fix_variable(idx, 1.0), {x}, derive_seed(seed, i, 0)));
    hs.back().path = path;
    xs.push_back(std::move(x));
    fixed.push_back(idx);
  }
  auto results = tracker::track_each(hs, xs, opts.track);

  SolutionSet set;
  set.solver = "groebner";
  set.seed = seed;
  set.gamma_theta = path.theta;
  set.chart = "max-plucker";
  set.m = m;
  set.p = p;
  set.expected = combinat::grassmann_degree(m, p);
  std::vector<std::pair<ComplexMatrix, PathInfo>> endpoints;
  int ok = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    r.path_id = static_cast<int>(i);
    std::string label;
    for (const auto& n : starts[i].chain.nodes) label += n.str();
    PathInfo info = path_info(r, label);
    set.paths.push_back(info);
    if (r.status != tracker::PathStatus::Success) {
      ++set.failed_paths;
      continue;
    }
    ++ok;
    std::vector<Complex> coords(starts[i].point.size());
    for (std::size_t k = 0, j = 0; k < coords.size(); ++k)
      coords[k] = static_cast<int>(k) == fixed[i] ? Complex(1.0) : r.endpoint(static_cast<Eigen::Index>(j++));
    endpoints.push_back({plucker::chart_matrix(plucker::PluckerVector(m, p, std::move(coords))), info});
  }
  set.stages.push_back({"groebner", static_cast<int>(results.size()), ok});
  collect_solutions(set, problem, endpoints, opts);
  return set;
}

}  // namespace

SolutionSet groebner_solve(const ProblemInstance& problem, std::uint64_t seed, const SolveOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  problem.validate();
  if (!problem.all_hypersurface()) fail_argument("groebner_solve: every condition must have k = 1");
  const int m = problem.m, p = problem.p;
  auto coeffs = plucker::laplace_coeffs(m, p, problem.matrices());
  auto system = plucker::groebner_homotopy_system(m, p, coeffs).normalized();
  auto starts = groebner_start_solutions(m, p, coeffs);
  SolutionSet set;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    set = solve_once(problem, system, starts, restart_seed(seed, attempt), opts);
    set.restarts = attempt;
    if (set.failed_paths == 0 && set.duplicates_removed == 0) break;
  }
  set.seed = seed;
  set.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return set;
}

}  // namespace schubert::groebner
