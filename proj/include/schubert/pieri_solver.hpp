#pragma once

// Pieri homotopies for intersections of special Schubert varieties.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/plucker.hpp"
#include "schubert/problem.hpp"

namespace schubert::pieri {

using combinat::Chain;
using combinat::ColumnSequence;
using combinat::Partition;
using plucker::LinearPencil;

/// Conditions assigned to the two lists and N, with coordinates in which L_0 = <e_1..e_{m+1-r_0}>
/// and L'_0 = <e_{p+r'_0}..e_{m+p}>. Solutions map back by X = basis * X_frame.
struct Frame {
  Partition partition;
  ComplexMatrix basis;
  std::vector<ComplexMatrix> l;        // L_0..L_a in frame coordinates
  std::vector<ComplexMatrix> l_prime;  // L'_0..L'_a'
  ComplexMatrix n;
  std::vector<int> l_source, l_prime_source;  // condition indices in the problem
  int n_source = -1;
};

/// Condition indices are matched to blocks by k, in order.
Frame normalize_frame(const ProblemInstance& problem, const Partition& partition, std::uint64_t seed);

/// The unique p-plane in Omega_alpha, Omega'_alpha_prime and Omega_N, or nullopt when Pieri's condition fails.
std::optional<ComplexMatrix> triple_intersection_start(const ColumnSequence& alpha, const ColumnSequence& alpha_prime,
                                                       const ComplexMatrix& n);

/// Upper triangular with respect to the anti-diagonal: column c has a 1 in row m+p+1-c and
/// random unit-modulus entries above it.
ComplexMatrix random_flag_matrix(int size, std::uint64_t seed);

struct LambdaFamily {
  ComplexMatrix f, l;
  ColumnSequence alpha = ColumnSequence::bottom(1, 1);
  int r = 1, i = 0;
  ComplexMatrix u;           // (m+p) x m
  std::vector<int> u_pivot;  // row (1-based) of the unit entry of each u column

  static LambdaFamily build(const ComplexMatrix& f, const ComplexMatrix& l, const ColumnSequence& alpha, int r, int i);
  int columns() const { return static_cast<int>(l.cols()); }
  LinearPencil pencil() const;
  ComplexMatrix at(Complex t) const { return pencil().at(t); }
  /// The columns lying in <e_1..e_e>; their span is Lambda_i(t) meet <e_1..e_e> for generic t.
  LinearPencil pencil_within(int e) const;
};

ComplexMatrix lambda_family(const ComplexMatrix& f, const ComplexMatrix& l, const ColumnSequence& alpha, int r, int i,
                            Complex t);

struct ConditionDescriptor {
  std::string label;
  LinearPencil pencil;
  bool moving = false;
};

struct StageDescriptor {
  int k = 0;
  ColumnSequence alpha = ColumnSequence::bottom(1, 1);
  ColumnSequence alpha_prime = ColumnSequence::bottom(1, 1);
  std::string r_case, s_case;
  std::vector<ConditionDescriptor> conditions;  // N last
};

struct PieriSchedule {
  int m = 0, p = 0;
  Partition partition;
  combinat::SolsPair pair{Chain(ColumnSequence::bottom(1, 1)), Chain(ColumnSequence::bottom(1, 1))};
  int tau = 0;
  ColumnSequence delta = ColumnSequence::bottom(1, 1);
  std::vector<StageDescriptor> stages;  // stages[k], k = 0..tau
};

PieriSchedule make_schedule(const Frame& frame, int m, int p, const combinat::SolsPair& pair, const ComplexMatrix& f,
                            const ComplexMatrix& f_prime);

plucker::MatrixChart stage_chart(const PieriSchedule& schedule, int k);
/// All non-trivial maximal minors of [X | M_i(t)] in the stage chart.
ParametricSystem stage_system(const PieriSchedule& schedule, int k);

SolutionSet pieri_solve(const ProblemInstance& problem, const std::optional<Partition>& partition, std::uint64_t seed,
                        const SolveOptions& opts = {});

}  // namespace schubert::pieri
