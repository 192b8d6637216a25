#pragma once

// Plücker coordinates, incidence equations and the homotopy systems built on
// them: the weighted Gröbner deformation of the Plücker ideal and the
// t-scaled minor expansion in local coordinates.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/combinat.hpp"
#include "schubert/linalg.hpp"
#include "schubert/polynomial.hpp"

namespace schubert::plucker {

using combinat::ColumnSequence;
using Rational = boost::multiprecision::cpp_rational;

/// Coordinates indexed by the lexicographic rank of their ColumnSequence.
class PluckerVector {
 public:
  PluckerVector(int m, int p, std::vector<Complex> coords);

  int m() const { return m_; }
  int p() const { return p_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](std::size_t rank) const { return coords_[rank]; }
  Complex operator[](const ColumnSequence& a) const;

  std::size_t argmax() const;
  /// Divided by the coordinate of largest modulus.
  PluckerVector normalized() const;
  ComplexVector as_vector() const;

 private:
  int m_, p_;
  std::vector<Complex> coords_;
};

/// All maximal minors of an (m+p) x p matrix. Throws on (numerically) rank-deficient input.
PluckerVector plucker_coords(const ComplexMatrix& x);

/// max_i |a_i/a_k - b_i/b_k| with k the largest coordinate of a; symmetrized.
double plucker_distance(const PluckerVector& a, const PluckerVector& b);

/// Representative with rows of the largest coordinate's sequence equal to the identity.
ComplexMatrix chart_matrix(const PluckerVector& v);

/// Coefficients C_a with sum_a C_a [a](X) = det[X | K] for an (m+p) x m matrix K.
std::vector<Complex> laplace_coeffs(const ComplexMatrix& k, int p);

struct LaplaceCoefficients {
  int m = 0, p = 0;
  std::vector<std::vector<Complex>> per_condition;
};
LaplaceCoefficients laplace_coeffs(int m, int p, const std::vector<ComplexMatrix>& ks);

/// An (m+p) x p matrix whose entries are zero, one, or a named unknown.
class MatrixChart {
 public:
  static constexpr int kZero = -1;
  static constexpr int kOne = -2;

  MatrixChart(int rows, int cols, std::vector<int> slots, std::string description);

  /// x_ii = 1, x_ij = 0 for i < j or i > m + j.
  static MatrixChart sagbi(int m, int p);
  /// x_ij = 0 for i < a'_j or a^v_j < i, x_{d_j, j} = 1.
  static MatrixChart schubert_cell(const ColumnSequence& alpha, const ColumnSequence& alpha_prime,
                                   const ColumnSequence& delta);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int slot(int i, int j) const { return slots_[i * cols_ + j]; }
  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& description() const { return description_; }

  Polynomial entry(int i, int j) const;
  ComplexMatrix instantiate(const ComplexVector& x) const;
  /// Unknown values read from a matrix already in chart form.
  ComplexVector coordinates(const ComplexMatrix& x) const;

 private:
  int rows_, cols_;
  std::vector<int> slots_;
  std::vector<std::string> names_;
  std::string description_;
};

/// M(t) = constant + t * slope.
struct LinearPencil {
  ComplexMatrix constant;
  ComplexMatrix slope;

  static LinearPencil fixed(ComplexMatrix m);
  ComplexMatrix at(Complex t) const { return constant + t * slope; }
  bool depends_on_t() const { return slope.size() > 0 && slope.cwiseAbs().maxCoeff() > 0.0; }
};

/// Determinant of [X | M(t)] restricted to `rows` (sorted, size X.cols + M.cols), as a polynomial.
Polynomial bordered_minor(const MatrixChart& x, const LinearPencil& m, const std::vector<int>& rows);

/// Maximal minors of [X | M(t)] that are not identically zero.
std::vector<Polynomial> all_maximal_minors(const MatrixChart& x, const LinearPencil& m);

/// Reduced generators: minors of [X | K] containing a row set on which K is best conditioned.
std::vector<Polynomial> equations_for_special_condition(const MatrixChart& x, const ComplexMatrix& k);

struct StraighteningRelation {
  struct TailTerm {
    ColumnSequence gamma, delta;
    Rational coeff;
  };
  ColumnSequence alpha, beta;  // incomparable lead pair, alpha < beta lexicographically
  std::vector<TailTerm> tail;
};

/// [a][b] - sum E [g][d] = 0 for every incomparable pair (a, b). p = 2 uses the closed form
/// unless `force_interpolation` is set.
std::vector<StraighteningRelation> plucker_relations(int m, int p, bool force_interpolation = false);

/// max |relation| over all relations, for a normalized vector.
double relation_residual(const PluckerVector& v, const std::vector<StraighteningRelation>& relations);

struct WeightTable {
  int m = 0, p = 0;
  std::vector<Rational> v;  // -(1/2) sum_{i<j} (a_j - a_i - 1)^2
  std::vector<int> w;       // sum_j (a_j - 1)(p - j)
};
WeightTable weight_table(int m, int p);

/// Exponents v_g + v_d - v_a - v_b of each tail term; throws unless they are positive integers.
std::vector<std::vector<int>> groebner_exponents(const std::vector<StraighteningRelation>& relations,
                                                 const WeightTable& weights);

/// Weighted relations plus the linear sections; unknowns are all Plücker coordinates.
ParametricSystem groebner_homotopy_system(int m, int p, const LaplaceCoefficients& coeffs);

/// The t-scaled, t^{-w}-rescaled minor expansion in the sagbi() chart.
ParametricSystem sagbi_homotopy_system(int m, int p, const LaplaceCoefficients& coeffs);

struct SupportCell {
  std::size_t chain_index;
  std::vector<std::size_t> points;  // ranks of the chain's sequences
  std::vector<Rational> normal;     // inner normal (length mp)
  Rational height;
};

struct Support {
  int m = 0, p = 0;
  std::vector<std::vector<int>> points;  // exponent vectors over sagbi() chart unknowns, by rank
  std::vector<Rational> lifting;         // orientation * (-v)
  int orientation = 1;                   // +1: lifting is -v; -1: lifting is +v
  std::vector<SupportCell> cells;        // one per maximal chain
  /// sum of |det| over cells
  std::size_t normalized_volume() const;
};

/// Support of the t = 0 system with the lifting induced by the Gröbner weights; verifies that the
/// lower facets through each maximal chain are cells of the induced subdivision.
Support support_and_weights(int m, int p);

/// Exponent of `point` above the cell's facet: <a, normal> + lifting - height (zero on the cell).
Rational lifted_height(const Support& s, const SupportCell& cell, std::size_t point);

}  // namespace schubert::plucker
