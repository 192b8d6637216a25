#pragma once

// Pole placement by static output feedback, and instances built from
// planes osculating the rational normal curve.

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/linalg.hpp"
#include "schubert/problem.hpp"

namespace schubert::apps {

/// Columns gamma(s), gamma'(s), ..., gamma^(dim-1)(s) of gamma(s) = (1, s, ..., s^(m+p-1)).
ComplexMatrix osculating_plane(double s, int dim, int m, int p);

struct OsculatingInstance {
  int m = 0, p = 0;
  std::vector<int> k;
  std::vector<double> s;

  /// Condition i is osculating_plane(s_i, m+1-k_i); throws unless the s_i are distinct and sum k = mp.
  ProblemInstance problem() const;
};

/// `count` distinct reals in [-4, 4], pairwise at least 0.05 apart.
std::vector<double> distinct_reals(int count, std::uint64_t seed);

/// Solves g*K_i for a seeded random real g in GL(m+p) and maps the solutions back by g^-1.
/// Realness and the solution count are preserved; structured inputs (osculating flags, plants)
/// stop being special for the start systems. Solver as in shapiro_check.
SolutionSet solve_general_position(const ProblemInstance& problem, std::uint64_t seed, const SolveOptions& opts = {},
                                   const std::string& solver = "auto");

struct ShapiroReport {
  bool all_real = false;
  double max_imag = 0.0;  // over normalized Plücker coordinates of all solutions
  int real_count = 0;
  SolutionSet solutions;  // in the original coordinates
};

/// Solves the osculating instance after a random real change of coordinates (which preserves
/// realness); solver is "groebner", "sagbi", "pieri" or "auto" (groebner when every k_i = 1).
ShapiroReport shapiro_check(int m, int p, const std::vector<int>& k, const std::vector<double>& s, std::uint64_t seed,
                            const SolveOptions& opts = {}, const std::string& solver = "auto");

/// Largest |Im| of the Plücker vector after scaling its largest coordinate to be real positive.
double imaginary_part(const ComplexMatrix& x);

/// Top m x p block of X after making the bottom p x p block the identity.
/// Throws NonGeneric when the bottom block is singular (no static feedback law).
ComplexMatrix extract_feedback(const ComplexMatrix& x, int m, int p);

struct FeedbackProblem {
  int m = 0, p = 0;  // inputs, outputs
  std::vector<Complex> poles;          // mp of them
  std::vector<ComplexMatrix> k;        // [D(s_i); N(s_i)], (m+p) x m

  ProblemInstance problem() const;
};

/// Random strictly proper real plant: D(s) = s^p I + sum_{l<p} D_l s^l, N(s) = sum_{l<p} N_l s^l
/// (McMillan degree mp), with mp distinct real poles.
FeedbackProblem random_feedback_problem(int m, int p, std::uint64_t seed);

struct FeedbackSolution {
  SolutionSet set;
  std::vector<ComplexMatrix> laws;  // one per solution inside the feedback chart
  int outside_chart = 0;
  double max_residual = 0.0;  // incidence of [F; I] with every K(s_i)
};

/// Solved after a random real change of coordinates, as in shapiro_check.
FeedbackSolution solve_feedback(const FeedbackProblem& fp, std::uint64_t seed, const SolveOptions& opts = {},
                                const std::string& solver = "groebner");

}  // namespace schubert::apps
