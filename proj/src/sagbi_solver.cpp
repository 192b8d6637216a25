#include "schubert/sagbi_solver.hpp"

#include <chrono>
#include <numeric>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert::sagbi {

namespace {

Monomial monomial_of(const std::vector<int>& exponents) {
  Monomial mono;
  for (std::size_t k = 0; k < exponents.size(); ++k)
    for (int e = 0; e < exponents[k]; ++e) mono.push_back(static_cast<std::uint16_t>(k));
  return mono;
}

std::string chain_label(const combinat::Chain& c) {
  std::string s;
  for (const auto& n : c.nodes) s += n.str();
  return s;
}

}  // namespace

ParametricSystem toric_system(int m, int p, const plucker::LaplaceCoefficients& coeffs) {
  auto support = plucker::support_and_weights(m, p);
  auto chart = plucker::MatrixChart::sagbi(m, p);
  std::vector<Polynomial> eqs;
  for (const auto& c : coeffs.per_condition) {
    Polynomial f;
    for (std::size_t a = 0; a < c.size(); ++a) f.add_term(c[a], monomial_of(support.points[a]), 0);
    eqs.push_back(std::move(f));
  }
  return {chart.names(), std::move(eqs), chart.description()};
}

CellHomotopy cell_homotopy(const plucker::Support& support, const plucker::SupportCell& cell,
                           const plucker::LaplaceCoefficients& coeffs) {
  const int m = support.m, p = support.p;
  const std::size_t np = support.points.size();
  std::vector<plucker::Rational> heights;
  boost::multiprecision::cpp_int scale = 1;
  for (std::size_t a = 0; a < np; ++a) {
    heights.push_back(plucker::lifted_height(support, cell, a));
    if (heights.back() < 0) fail_construction("cell_homotopy: point below the cell");
    scale = boost::multiprecision::lcm(scale, denominator(heights.back()));
  }
  if (scale > 1000) fail_construction("cell_homotopy: lifting denominators too large");
  CellHomotopy out;
  out.scale = static_cast<int>(scale);
  auto chart = plucker::MatrixChart::sagbi(m, p);
  std::vector<Polynomial> eqs;
  for (const auto& c : coeffs.per_condition) {
    Polynomial f;
    for (std::size_t a = 0; a < np; ++a) {
      plucker::Rational k = heights[a] * out.scale;
      f.add_term(c[a], monomial_of(support.points[a]), static_cast<int>(numerator(k)));
    }
    eqs.push_back(std::move(f));
  }
  out.system = ParametricSystem(chart.names(), std::move(eqs), "lifted " + chart.description()).normalized();

  // monomial values on the chain, then the unknowns one cover at a time
  const int n = m * p;
  ComplexMatrix a(n, n + 1);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c <= n; ++c) a(i, c) = coeffs.per_condition[i][cell.points[c]];
  ComplexMatrix ker = null_space(a);
  if (ker.cols() != 1) fail_nongeneric("cell_homotopy: cell system does not have a one-dimensional kernel");
  if (std::abs(ker(0, 0)) < 1e-12 * ker.col(0).norm())
    fail_nongeneric("cell_homotopy: start has a vanishing monomial value");
  ComplexVector y = ker.col(0) / ker(0, 0);
  for (int c = 0; c <= n; ++c)
    if (std::abs(y(c)) < 1e-12 * y.norm()) fail_nongeneric("cell_homotopy: start has a vanishing monomial value");
  auto seqs = combinat::all_sequences(m, p);
  out.start = ComplexVector::Zero(n);
  for (int c = 0; c < n; ++c) {
    const auto& from = seqs[cell.points[c]];
    const auto& to = seqs[cell.points[c + 1]];
    int j = 0;
    while (from[j] == to[j]) ++j;
    int old_slot = chart.slot(from[j] - 1, j);
    Complex prev = old_slot == plucker::MatrixChart::kOne ? Complex(1.0) : out.start(old_slot);
    out.start(chart.slot(to[j] - 1, j)) = y(c + 1) / y(c) * prev;
  }
  return out;
}

PolyhedralResult polyhedral_start(int m, int p, const plucker::LaplaceCoefficients& coeffs, std::uint64_t seed,
                                  const tracker::TrackOptions& opts) {
  auto support = plucker::support_and_weights(m, p);
  auto chains = combinat::maximal_chains(m, p);
  const auto path = tracker::gamma_path(seed);
  std::vector<tracker::SquaredHomotopy> hs;
  std::vector<ComplexVector> starts;
  for (std::size_t c = 0; c < support.cells.size(); ++c) {
    auto cell = cell_homotopy(support, support.cells[c], coeffs);
    hs.push_back(tracker::square(cell.system, {cell.start}, derive_seed(seed, c, 0)));
    hs.back().path = path;
    starts.push_back(cell.start);
  }
  auto results = tracker::track_each(hs, starts, opts);
  PolyhedralResult out;
  for (std::size_t c = 0; c < results.size(); ++c) {
    results[c].path_id = static_cast<int>(c);
    out.paths.push_back(path_info(results[c], chain_label(chains[support.cells[c].chain_index])));
    bool ok = results[c].status == tracker::PathStatus::Success;
    out.solutions.push_back(ok ? results[c].endpoint : ComplexVector());
  }
  return out;
}

namespace {

SolutionSet solve_once(const ProblemInstance& problem, const plucker::LaplaceCoefficients& coeffs,
                       const ParametricSystem& system, std::uint64_t seed, const SolveOptions& opts) {
  const int m = problem.m, p = problem.p;
  auto stage_a = polyhedral_start(m, p, coeffs, derive_seed(seed, 1, 0), opts.track);
  const auto path = tracker::gamma_path(seed);
  auto chart = plucker::MatrixChart::sagbi(m, p);

  SolutionSet set;
  set.solver = "sagbi";
  set.seed = seed;
  set.gamma_theta = path.theta;
  set.chart = chart.description();
  set.m = m;
  set.p = p;
  set.expected = combinat::grassmann_degree(m, p);

  std::vector<tracker::SquaredHomotopy> hs;
  std::vector<ComplexVector> starts;
  std::vector<std::size_t> origin;
  int toric_ok = 0;
  for (std::size_t c = 0; c < stage_a.solutions.size(); ++c) {
    const auto& x = stage_a.solutions[c];
    if (x.size() == 0) {
      ++set.failed_paths;
      set.paths.push_back(stage_a.paths[c]);
      continue;
    }
    ++toric_ok;
    try {
      hs.push_back(tracker::square(system, {x}, derive_seed(seed, c, 2)));
    } catch (const SchubertError&) {
      ++set.failed_paths;
      set.paths.push_back(stage_a.paths[c]);
      continue;
    }
    hs.back().path = path;
    starts.push_back(x);
    origin.push_back(c);
  }
  set.stages.push_back({"polyhedral", static_cast<int>(stage_a.solutions.size()), toric_ok});
  auto results = tracker::track_each(hs, starts, opts.track);
  std::vector<std::pair<ComplexMatrix, PathInfo>> endpoints;
  int ok = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    results[i].path_id = static_cast<int>(origin[i]);
    PathInfo info = path_info(results[i], stage_a.paths[origin[i]].label);
    info.steps += stage_a.paths[origin[i]].steps;
    info.attempts += stage_a.paths[origin[i]].attempts - 1;
    set.paths.push_back(info);
    if (results[i].status != tracker::PathStatus::Success) {
      ++set.failed_paths;
      continue;
    }
    ++ok;
    endpoints.push_back({chart.instantiate(results[i].endpoint), info});
  }
  std::sort(set.paths.begin(), set.paths.end(), [](const auto& a, const auto& b) { return a.path_id < b.path_id; });
  set.stages.push_back({"sagbi", static_cast<int>(results.size()), ok});
  collect_solutions(set, problem, endpoints, opts);
  return set;
}

}  // namespace

SolutionSet sagbi_solve(const ProblemInstance& problem, std::uint64_t seed, const SolveOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  problem.validate();
  if (!problem.all_hypersurface()) fail_argument("sagbi_solve: every condition must have k = 1");
  auto coeffs = plucker::laplace_coeffs(problem.m, problem.p, problem.matrices());
  auto system = plucker::sagbi_homotopy_system(problem.m, problem.p, coeffs).normalized();
  SolutionSet set;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    set = solve_once(problem, coeffs, system, restart_seed(seed, attempt), opts);
    set.restarts = attempt;
    if (set.failed_paths == 0 && set.duplicates_removed == 0) break;
  }
  set.seed = seed;
  set.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return set;
}

}  // namespace schubert::sagbi
