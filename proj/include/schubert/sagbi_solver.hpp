#pragma once

#include <cstdint>
#include <vector>

#include "schubert/plucker.hpp"
#include "schubert/problem.hpp"

namespace schubert::sagbi {

/// The binomial-free system at t = 0: sum_alpha C^i_alpha prod_j x_{alpha_j, j} in the sagbi chart.
ParametricSystem toric_system(int m, int p, const plucker::LaplaceCoefficients& coeffs);

/// The lifted system for one chain cell, in y = x / s^normal, with s = tau^scale.
struct CellHomotopy {
  ParametricSystem system;
  ComplexVector start;  // solution at tau = 0
  int scale = 1;
};
CellHomotopy cell_homotopy(const plucker::Support& support, const plucker::SupportCell& cell,
                           const plucker::LaplaceCoefficients& coeffs);

struct PolyhedralResult {
  std::vector<ComplexVector> solutions;  // by chain index; empty vector for a failed path
  std::vector<PathInfo> paths;
};

/// Solutions of the toric system, one per maximal chain, by the polyhedral homotopy.
PolyhedralResult polyhedral_start(int m, int p, const plucker::LaplaceCoefficients& coeffs, std::uint64_t seed,
                                  const tracker::TrackOptions& opts = {});

SolutionSet sagbi_solve(const ProblemInstance& problem, std::uint64_t seed, const SolveOptions& opts = {});

}  // namespace schubert::sagbi
