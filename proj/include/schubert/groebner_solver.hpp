#pragma once

#include <cstdint>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/plucker.hpp"
#include "schubert/problem.hpp"

namespace schubert::groebner {

struct ChainStart {
  combinat::Chain chain;
  plucker::PluckerVector point;  // zero off the chain, largest coordinate 1
};

/// One start per maximal chain: the kernel of the linear sections restricted to the chain's coordinates.
std::vector<ChainStart> groebner_start_solutions(int m, int p, const plucker::LaplaceCoefficients& coeffs);

SolutionSet groebner_solve(const ProblemInstance& problem, std::uint64_t seed, const SolveOptions& opts = {});

}  // namespace schubert::groebner
