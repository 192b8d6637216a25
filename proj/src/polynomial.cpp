#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "schubert/error.hpp"

namespace schubert {

Polynomial Polynomial::constant(Complex c, int t_degree) {
  Polynomial p;
  if (c != Complex(0.0)) p.add_term(c, {}, t_degree);
  return p;
}

Polynomial Polynomial::variable(int index) {
  Polynomial p;
  p.add_term(1.0, {static_cast<std::uint16_t>(index)}, 0);
  return p;
}

void Polynomial::add_term(Complex c, Monomial mono, int t_degree) {
  if (t_degree < 0) fail_construction("negative t-exponent in polynomial term");
  std::sort(mono.begin(), mono.end());
  terms_.push_back({c, std::move(mono), t_degree});
}

int Polynomial::max_t_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.t_degree);
  return d;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

void Polynomial::compact(double threshold) {
  std::map<std::pair<Monomial, int>, Complex> acc;
  for (auto& t : terms_) acc[{t.mono, t.t_degree}] += t.coeff;
  terms_.clear();
  for (auto& [key, c] : acc)
    if (std::abs(c) > threshold) terms_.push_back({c, key.first, key.second});
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  compact();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Monomial mono;
      mono.reserve(ta.mono.size() + tb.mono.size());
      std::merge(ta.mono.begin(), ta.mono.end(), tb.mono.begin(), tb.mono.end(), std::back_inserter(mono));
      out.terms_.push_back({ta.coeff * tb.coeff, std::move(mono), ta.t_degree + tb.t_degree});
    }
  out.compact();
  return out;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  Polynomial nb = b;
  nb *= -1.0;
  return a += nb;
}

Polynomial Polynomial::shifted(int k) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    t.t_degree += k;
    if (t.t_degree < 0) fail_construction("negative t-exponent after shift");
  }
  return out;
}

ParametricSystem::ParametricSystem(std::vector<std::string> variables, std::vector<Polynomial> equations,
                                   std::string chart)
    : variables_(std::move(variables)), equations_(std::move(equations)), chart_(std::move(chart)) {
  for (const auto& eq : equations_)
    for (const auto& t : eq.terms()) {
      if (t.t_degree < 0) fail_construction("negative t-exponent in system");
      for (auto v : t.mono)
        if (v >= variables_.size()) fail_construction("term references an unknown variable");
    }
}

int ParametricSystem::max_t_degree() const {
  int d = 0;
  for (const auto& eq : equations_) d = std::max(d, eq.max_t_degree());
  return d;
}

void ParametricSystem::evaluate(const ComplexVector& x, Complex t, ComplexVector* value, ComplexMatrix* jac_x,
                                ComplexVector* d_t) const {
  const auto n = static_cast<Eigen::Index>(equations_.size());
  const auto nv = static_cast<Eigen::Index>(variables_.size());
  if (x.size() != nv) fail_argument("ParametricSystem::evaluate: wrong number of unknowns");
  const int maxd = max_t_degree();
  std::vector<Complex> tpow(maxd + 1, 1.0);
  for (int k = 1; k <= maxd; ++k) tpow[k] = tpow[k - 1] * t;
  if (value) value->setZero(n);
  if (jac_x) jac_x->setZero(n, nv);
  if (d_t) d_t->setZero(n);
  std::vector<Complex> prefix, suffix;
  for (Eigen::Index e = 0; e < n; ++e) {
    for (const auto& term : equations_[e].terms()) {
      const std::size_t deg = term.mono.size();
      prefix.assign(deg + 1, 1.0);
      suffix.assign(deg + 1, 1.0);
      for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * x(term.mono[i]);
      const Complex mono_val = prefix[deg];
      const Complex ct = term.coeff * tpow[term.t_degree];
      if (value) (*value)(e) += ct * mono_val;
      if (d_t && term.t_degree > 0)
        (*d_t)(e) += term.coeff * static_cast<double>(term.t_degree) * tpow[term.t_degree - 1] * mono_val;
      if (jac_x && deg > 0) {
        for (std::size_t i = deg; i-- > 0;) suffix[i] = suffix[i + 1] * x(term.mono[i]);
        for (std::size_t i = 0; i < deg; ++i) (*jac_x)(e, term.mono[i]) += ct * prefix[i] * suffix[i + 1];
      }
    }
  }
}

ComplexVector ParametricSystem::operator()(const ComplexVector& x, Complex t) const {
  ComplexVector v;
  evaluate(x, t, &v, nullptr, nullptr);
  return v;
}

ParametricSystem ParametricSystem::fix_variable(int index, Complex value) const {
  if (index < 0 || static_cast<std::size_t>(index) >= variables_.size()) fail_argument("fix_variable: bad index");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (static_cast<int>(i) != index) vars.push_back(variables_[i]);
  std::vector<Polynomial> eqs;
  for (const auto& eq : equations_) {
    Polynomial out;
    for (const auto& term : eq.terms()) {
      Complex c = term.coeff;
      Monomial mono;
      for (auto v : term.mono) {
        if (v == index)
          c *= value;
        else
          mono.push_back(static_cast<std::uint16_t>(v > index ? v - 1 : v));
      }
      out.add_term(c, std::move(mono), term.t_degree);
    }
    out.compact();
    eqs.push_back(std::move(out));
  }
  return {std::move(vars), std::move(eqs), chart_};
}

ParametricSystem ParametricSystem::normalized() const {
  std::vector<Polynomial> eqs = equations_;
  for (auto& eq : eqs) {
    double s = eq.max_abs_coeff();
    if (s > 0.0) eq *= 1.0 / s;
  }
  return {variables_, std::move(eqs), chart_};
}

}  // namespace schubert
