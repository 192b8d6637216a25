#pragma once

// Predictor-corrector continuation for ParametricSystem homotopies.
// Overdetermined systems are squared with a random unit-modulus matrix.

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/linalg.hpp"
#include "schubert/polynomial.hpp"

namespace schubert::tracker {

/// t(s) = s g / (1 + s (g - 1)) with g = exp(i theta); optionally traversed backwards.
struct GammaPath {
  double theta = 0.0;
  bool reversed = false;

  Complex at(double s) const;
  Complex derivative(double s) const;
  GammaPath reverse() const { return {theta, !reversed}; }
};

/// theta uniform in (0.1, pi - 0.1).
GammaPath gamma_path(std::uint64_t seed);

struct SquaredHomotopy {
  ParametricSystem base;
  ComplexMatrix m;  // N x n; identity when the base system is square
  GammaPath path;
  std::uint64_t seed = 0;

  std::size_t dimension() const { return base.num_variables(); }
  void evaluate(const ComplexVector& x, double s, ComplexVector* value, ComplexMatrix* jac,
                ComplexVector* d_s) const;
  /// Max-norm of the unsquared system at t(s).
  double full_residual(const ComplexVector& x, double s) const;
  SquaredHomotopy reverse() const;
};

/// Draw M (and the path) from `seed`; checks rank N of the squared Jacobian at every start,
/// resampling M up to 5 times. Throws NonGeneric naming the failing start.
SquaredHomotopy square(const ParametricSystem& system, const std::vector<ComplexVector>& starts,
                       std::uint64_t seed);

struct TrackOptions {
  double newton_tol = 1e-12;  // relative step size for endpoint refinement
  int max_newton_iters = 8;
  double min_step = 1e-7;
  double max_step = 0.1;
  double initial_step = 0.05;
  double end_refine_tol = 1e-14;
  int max_steps = 10000;
  double divergence_norm = 1e8;
  // beyond the basic set
  double path_tol = 1e-8;             // relative corrector step accepted along the path
  int corrector_iters = 3;
  double underflow_divergence_norm = 1e4;  // step underflow this far out counts as divergence
  double success_residual = 1e-8;
  int max_retries = 3;
  unsigned threads = 0;  // 0: hardware concurrency
};

enum class PathStatus { Success, Diverged, StepUnderflow, MaxSteps, ResidualTooLarge };
std::string to_string(PathStatus s);

struct PathResult {
  PathStatus status = PathStatus::MaxSteps;
  ComplexVector endpoint;
  int steps = 0;
  double final_residual = 0.0;
  int path_id = 0;
  int attempts = 1;
  double theta = 0.0;
  double worst_rcond = 1.0;  // smallest reciprocal condition estimate met along the path
};

PathResult track(const SquaredHomotopy& h, const ComplexVector& start, const TrackOptions& opts = {});

/// Tracks every start (possibly concurrently). A failed path is retried with a fresh M drawn from
/// derive_seed(h.seed, pathId, attempt) and smaller steps; the t-path is kept, since endpoints
/// depend on its homotopy class. Results are ordered by pathId.
std::vector<PathResult> track_all(const SquaredHomotopy& h, const std::vector<ComplexVector>& starts,
                                  const TrackOptions& opts = {});

/// As track_all, with a separate homotopy for every path (hs[i] tracks starts[i]).
std::vector<PathResult> track_each(const std::vector<SquaredHomotopy>& hs, const std::vector<ComplexVector>& starts,
                                   const TrackOptions& opts = {});

}  // namespace schubert::tracker
