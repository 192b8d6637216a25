#pragma once

// Sparse multivariate polynomials whose coefficients are polynomials in a
// homotopy parameter t, and systems of them.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/linalg.hpp"

namespace schubert {

/// Multiset of variable indices, sorted ascending (x0^2 x3 is {0, 0, 3}).
using Monomial = std::vector<std::uint16_t>;

struct Term {
  Complex coeff;
  Monomial mono;
  int t_degree = 0;
};

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Complex c, int t_degree = 0);
  static Polynomial variable(int index);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_t_degree() const;
  double max_abs_coeff() const;

  /// Merge like terms; drop terms with |coeff| <= threshold.
  void compact(double threshold = 0.0);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  /// Multiply by t^k.
  Polynomial shifted(int k) const;

  void add_term(Complex c, Monomial mono, int t_degree);

 private:
  std::vector<Term> terms_;
};

/// Equations in named unknowns x with coefficients polynomial in t.
class ParametricSystem {
 public:
  ParametricSystem() = default;
  ParametricSystem(std::vector<std::string> variables, std::vector<Polynomial> equations, std::string chart = {});

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_equations() const { return equations_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  const std::string& chart() const { return chart_; }
  int max_t_degree() const;

  /// Values, Jacobian in x and partial derivative in t; any output may be null.
  void evaluate(const ComplexVector& x, Complex t, ComplexVector* value, ComplexMatrix* jac_x,
                ComplexVector* d_t) const;
  ComplexVector operator()(const ComplexVector& x, Complex t) const;

  /// Substitute a value for one unknown, removing it from the variable list.
  ParametricSystem fix_variable(int index, Complex value) const;
  /// Scale each equation so that its largest coefficient has modulus 1.
  ParametricSystem normalized() const;

 private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> equations_;
  std::string chart_;
};

}  // namespace schubert
