#pragma once

// Problem instances, solution sets and the checks shared by all solvers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/linalg.hpp"
#include "schubert/plucker.hpp"
#include "schubert/tracker.hpp"

namespace schubert {

struct Condition {
  int k = 1;
  ComplexMatrix matrix;  // (m+p) x (m+1-k)
};

struct ProblemInstance {
  int m = 0, p = 0;
  std::vector<Condition> conditions;
  std::optional<std::uint64_t> seed;
  std::string description;

  std::vector<int> ks() const;
  bool all_hypersurface() const;
  std::vector<ComplexMatrix> matrices() const;
  /// Throws InvalidArgument unless sum k = mp and every matrix has the right shape and is finite.
  void validate() const;
};

/// Entries uniform on the complex unit disc, or uniform real in [-1, 1].
ProblemInstance random_problem(int m, int p, std::vector<int> ks, std::uint64_t seed, bool real = false);

struct PathInfo {
  int path_id = 0;
  std::string label;  // chain, cell or leaf the path started from
  std::string status;
  int steps = 0;
  int attempts = 1;
  double final_residual = 0.0;
  double theta = 0.0;
};
PathInfo path_info(const tracker::PathResult& r, std::string label);

struct Solution {
  ComplexMatrix matrix;             // max-Plücker chart representative
  plucker::PluckerVector plucker;   // normalized by its largest coordinate
  std::vector<double> residuals;    // one per condition
  double relation_residual = 0.0;
  PathInfo path;
};

struct StageReport {
  std::string name;
  int paths = 0;
  int successes = 0;
};

struct SolutionSet {
  std::string solver;
  std::uint64_t seed = 0;
  std::string chart;
  double gamma_theta = 0.0;
  int restarts = 0;  // whole-solve reruns with a fresh t-path
  int m = 0, p = 0;
  combinat::BigInt expected = 0;
  std::vector<Solution> solutions;
  std::vector<PathInfo> paths;
  std::vector<StageReport> stages;
  int failed_paths = 0;
  int duplicates_removed = 0;
  double min_distance = 0.0;  // smallest pairwise Plücker distance among solutions
  double wall_time = 0.0;

  std::size_t count() const { return solutions.size(); }
  double max_residual() const;
  bool count_matches() const { return combinat::BigInt(solutions.size()) == expected; }
};

/// Seed of the shared t-path for the given whole-solve attempt (attempt 0 uses the seed itself).
std::uint64_t restart_seed(std::uint64_t seed, int attempt);

struct SolveOptions {
  tracker::TrackOptions track;
  double tol = 1e-8;
  double distinct_tol = 1e-4;
  int max_restarts = 3;
};

/// Incidence of span X with span K: Hadamard-normalized det when [X|K] is square, otherwise the
/// smallest singular value of [orth X | orth K].
double incidence_residual(const ComplexMatrix& x, const ComplexMatrix& k);
std::vector<double> condition_residuals(const ComplexMatrix& x, const ProblemInstance& problem);

/// Fills set.solutions from endpoint representatives, dropping duplicates (Plücker distance
/// below distinct_tol) and recording residuals.
void collect_solutions(SolutionSet& set, const ProblemInstance& problem,
                       const std::vector<std::pair<ComplexMatrix, PathInfo>>& endpoints, const SolveOptions& opts);

struct VerifyReport {
  bool residuals_ok = true;
  bool count_ok = true;
  bool distinct_ok = true;
  double max_residual = 0.0;
  double max_relation = 0.0;
  double min_distance = 0.0;
  std::vector<std::string> messages;
  bool ok() const { return residuals_ok && count_ok && distinct_ok; }
};

VerifyReport verify_solutions(const ProblemInstance& problem, const std::vector<ComplexMatrix>& solutions,
                              const combinat::BigInt& expected, double tol, double distinct_tol = 1e-4);

}  // namespace schubert
