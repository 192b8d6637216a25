#include "schubert/plucker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert::plucker {

namespace {

using combinat::all_sequences;
using combinat::sequence_rank;

int parity(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Exact Gaussian elimination on an augmented system; returns the solution when
// the coefficient part has full column rank and the system is consistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) return std::nullopt;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k <= unknowns; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots.size() != unknowns) return std::nullopt;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[i] = rows[i][unknowns] / rows[i][i];
  return x;
}

// Fraction-free determinant of a small integer matrix.
long long bareiss(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Polynomial chart_determinant(const MatrixChart& x, const std::vector<int>& rows) {
  const int p = x.cols();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det;
  do {
    Polynomial term = Polynomial::constant(static_cast<double>(parity(perm)));
    bool zero = false;
    for (int j = 0; j < p && !zero; ++j) {
      int slot = x.slot(rows[perm[j]], j);
      if (slot == MatrixChart::kZero) zero = true;
      else if (slot >= 0) term = term * Polynomial::variable(slot);
    }
    if (!zero) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Coefficients of det(M(t)[rows]) in t, by interpolation at roots of unity.
std::vector<Complex> pencil_determinant(const LinearPencil& m, const std::vector<int>& rows) {
  ComplexMatrix a = select_rows(m.constant, rows);
  if (!m.depends_on_t()) return {determinant(a)};
  ComplexMatrix b = select_rows(m.slope, rows);
  const int d = static_cast<int>(a.cols());
  const int n = d + 1;
  std::vector<Complex> values(n), coeffs(n);
  for (int k = 0; k < n; ++k) {
    Complex w = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    values[k] = determinant(a + w * b);
  }
  for (int e = 0; e < n; ++e) {
    Complex s = 0.0;
    for (int k = 0; k < n; ++k) s += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * k * e / n);
    coeffs[e] = s / static_cast<double>(n);
  }
  return coeffs;
}

std::vector<int> content_of(const ColumnSequence& a, const ColumnSequence& b) {
  std::vector<int> c = a.entries();
  c.insert(c.end(), b.entries().begin(), b.entries().end());
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

PluckerVector::PluckerVector(int m, int p, std::vector<Complex> coords) : m_(m), p_(p), coords_(std::move(coords)) {
  auto expected = combinat::all_sequences(m, p).size();
  if (coords_.size() != expected) fail_argument("PluckerVector: wrong number of coordinates");
}

Complex PluckerVector::operator[](const ColumnSequence& a) const { return coords_[sequence_rank(a)]; }

std::size_t PluckerVector::argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (std::abs(coords_[i]) > std::abs(coords_[best])) best = i;
  return best;
}

PluckerVector PluckerVector::normalized() const {
  Complex s = coords_[argmax()];
  if (s == Complex(0.0)) fail_argument("PluckerVector: zero vector");
  std::vector<Complex> c = coords_;
  for (auto& v : c) v /= s;
  return {m_, p_, std::move(c)};
}

ComplexVector PluckerVector::as_vector() const {
  ComplexVector v(static_cast<Eigen::Index>(coords_.size()));
  for (std::size_t i = 0; i < coords_.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords_[i];
  return v;
}

PluckerVector plucker_coords(const ComplexMatrix& x) {
  const int p = static_cast<int>(x.cols());
  const int m = static_cast<int>(x.rows()) - p;
  if (p < 1 || m < 1) fail_argument("plucker_coords: expected an (m+p) x p matrix with m, p >= 1");
  if (!all_finite(x)) fail_argument("plucker_coords: non-finite entries");
  auto s = singular_values(x);
  if (s(0) == 0.0 || s(p - 1) < 1e-13 * s(0)) fail_argument("plucker_coords: matrix is rank deficient");
  auto seqs = all_sequences(m, p);
  std::vector<Complex> coords;
  coords.reserve(seqs.size());
  for (const auto& a : seqs) {
    std::vector<int> rows(p);
    for (int j = 0; j < p; ++j) rows[j] = a[j] - 1;
    coords.push_back(determinant(select_rows(x, rows)));
  }
  return {m, p, std::move(coords)};
}

double plucker_distance(const PluckerVector& a, const PluckerVector& b) {
  if (a.size() != b.size()) fail_argument("plucker_distance: ambient mismatch");
  auto one_way = [](const PluckerVector& u, const PluckerVector& v) {
    std::size_t k = u.argmax();
    if (v[k] == Complex(0.0)) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] / u[k] - v[i] / v[k]));
    return d;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

ComplexMatrix chart_matrix(const PluckerVector& v) {
  const int m = v.m(), p = v.p(), n = m + p;
  auto seqs = all_sequences(m, p);
  const ColumnSequence& pivot = seqs[v.argmax()];
  const Complex base = v[v.argmax()];
  ComplexMatrix x = ComplexMatrix::Zero(n, p);
  for (int j = 0; j < p; ++j) x(pivot[j] - 1, j) = 1.0;
  for (int i = 1; i <= n; ++i) {
    if (std::find(pivot.entries().begin(), pivot.entries().end(), i) != pivot.entries().end()) continue;
    for (int j = 0; j < p; ++j) {
      std::vector<int> e = pivot.entries();
      e[j] = i;
      std::sort(e.begin(), e.end());
      int pos = static_cast<int>(std::find(e.begin(), e.end(), i) - e.begin());
      double sign = ((pos + j) % 2 == 0) ? 1.0 : -1.0;
      x(i - 1, j) = sign * v[ColumnSequence(m, p, e)] / base;
    }
  }
  return x;
}

std::vector<Complex> laplace_coeffs(const ComplexMatrix& k, int p) {
  const int n = static_cast<int>(k.rows());
  const int m = n - p;
  if (m < 1 || p < 1 || k.cols() != m) fail_argument("laplace_coeffs: K must be (m+p) x m");
  auto seqs = all_sequences(m, p);
  std::vector<Complex> c;
  c.reserve(seqs.size());
  for (const auto& a : seqs) {
    std::vector<int> comp;
    int sum = 0;
    for (int j = 0; j < p; ++j) sum += a[j];
    for (int i = 1; i <= n; ++i)
      if (std::find(a.entries().begin(), a.entries().end(), i) == a.entries().end()) comp.push_back(i - 1);
    double sign = ((sum - p * (p + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    c.push_back(sign * determinant(select_rows(k, comp)));
  }
  return c;
}

LaplaceCoefficients laplace_coeffs(int m, int p, const std::vector<ComplexMatrix>& ks) {
  LaplaceCoefficients out{m, p, {}};
  for (const auto& k : ks) {
    if (k.rows() != m + p || k.cols() != m) fail_argument("laplace_coeffs: each K must be (m+p) x m");
    out.per_condition.push_back(laplace_coeffs(k, p));
  }
  return out;
}

// ---------------------------------------------------------------------------

MatrixChart::MatrixChart(int rows, int cols, std::vector<int> slots, std::string description)
    : rows_(rows), cols_(cols), slots_(std::move(slots)), description_(std::move(description)) {
  if (static_cast<int>(slots_.size()) != rows * cols) fail_argument("MatrixChart: slot count mismatch");
  int next = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int& s = slots_[i * cols + j];
      if (s >= 0) {
        s = next++;
        names_.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
    }
}

MatrixChart MatrixChart::sagbi(int m, int p) {
  std::vector<int> slots((m + p) * p);
  for (int i = 1; i <= m + p; ++i)
    for (int j = 1; j <= p; ++j) {
      int s = 0;
      if (i == j) s = kOne;
      else if (i < j || i > m + j) s = kZero;
      slots[(i - 1) * p + (j - 1)] = s;
    }
  return {m + p, p, std::move(slots), "sagbi: x_ii = 1, x_ij = 0 for i < j or i > m + j"};
}

MatrixChart MatrixChart::schubert_cell(const ColumnSequence& alpha, const ColumnSequence& alpha_prime,
                                       const ColumnSequence& delta) {
  const int n = alpha.n(), p = alpha.p();
  const ColumnSequence dual = alpha.dual();
  std::vector<int> slots(n * p);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= p; ++j) {
      int s = 0;
      if (i < alpha_prime[j - 1] || dual[j - 1] < i) s = kZero;
      else if (i == delta[j - 1]) s = kOne;
      slots[(i - 1) * p + (j - 1)] = s;
    }
  for (int j = 1; j <= p; ++j)
    if (slots[(delta[j - 1] - 1) * p + (j - 1)] != kOne)
      fail_argument("schubert_cell: pivot row outside the column's window");
  return {n, p, std::move(slots),
          "cell " + alpha.str() + " / " + alpha_prime.str() + ", pivots " + delta.str()};
}

Polynomial MatrixChart::entry(int i, int j) const {
  int s = slot(i, j);
  if (s == kZero) return {};
  if (s == kOne) return Polynomial::constant(1.0);
  return Polynomial::variable(s);
}

ComplexMatrix MatrixChart::instantiate(const ComplexVector& x) const {
  if (x.size() != static_cast<Eigen::Index>(names_.size())) fail_argument("MatrixChart: wrong number of unknowns");
  ComplexMatrix out = ComplexMatrix::Zero(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      int s = slot(i, j);
      if (s == kOne) out(i, j) = 1.0;
      else if (s >= 0) out(i, j) = x(s);
    }
  return out;
}

ComplexVector MatrixChart::coordinates(const ComplexMatrix& x) const {
  ComplexVector out(static_cast<Eigen::Index>(names_.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (slot(i, j) >= 0) out(slot(i, j)) = x(i, j);
  return out;
}

LinearPencil LinearPencil::fixed(ComplexMatrix m) {
  ComplexMatrix zero = ComplexMatrix::Zero(m.rows(), m.cols());
  return {std::move(m), std::move(zero)};
}

Polynomial bordered_minor(const MatrixChart& x, const LinearPencil& m, const std::vector<int>& rows) {
  const int p = x.cols();
  const int d = static_cast<int>(m.constant.cols());
  if (static_cast<int>(rows.size()) != p + d) fail_argument("bordered_minor: row count must equal column count");
  Polynomial out;
  double scale = 0.0;
  for (const auto& pick : subsets(p + d, p)) {
    std::vector<int> xa, mb;
    int possum = 0;
    for (int i = 0, k = 0; i < p + d; ++i) {
      if (k < p && pick[k] == i) {
        xa.push_back(rows[i]);
        possum += i + 1;
        ++k;
      } else {
        mb.push_back(rows[i]);
      }
    }
    Polynomial dx = chart_determinant(x, xa);
    if (dx.empty()) continue;
    auto dm = pencil_determinant(m, mb);
    double sign = ((possum - p * (p + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    double dm_max = 0.0;
    for (auto c : dm) dm_max = std::max(dm_max, std::abs(c));
    scale = std::max(scale, dx.max_abs_coeff() * dm_max);
    for (int e = 0; e < static_cast<int>(dm.size()); ++e) {
      if (dm[e] == Complex(0.0)) continue;
      Polynomial piece = dx.shifted(e);
      piece *= sign * dm[e];
      out += piece;
    }
  }
  out.compact(1e-12 * scale);
  return out;
}

std::vector<Polynomial> all_maximal_minors(const MatrixChart& x, const LinearPencil& m) {
  const int n = x.rows();
  const int size = x.cols() + static_cast<int>(m.constant.cols());
  if (m.constant.rows() != n) fail_argument("all_maximal_minors: row mismatch");
  if (size > n) fail_argument("all_maximal_minors: [X | M] has more columns than rows");
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(n, size)) {
    Polynomial f = bordered_minor(x, m, rows);
    if (!f.empty()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> equations_for_special_condition(const MatrixChart& x, const ComplexMatrix& k) {
  const int n = x.rows(), p = x.cols();
  const int d = static_cast<int>(k.cols());
  if (k.rows() != n || d < 1 || p + d > n) fail_argument("equations_for_special_condition: dimension mismatch");
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(k.transpose());
  std::vector<int> chosen;
  for (int i = 0; i < d; ++i) chosen.push_back(qr.colsPermutation().indices()(i));
  std::sort(chosen.begin(), chosen.end());
  ComplexMatrix ks = select_rows(k, chosen);
  double scale = 1.0;
  for (int c = 0; c < d; ++c) scale *= ks.col(c).norm();
  if (scale == 0.0 || std::abs(determinant(ks)) < 1e-12 * scale)
    fail_nongeneric("equations_for_special_condition: K has no invertible maximal minor");
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) rest.push_back(i);
  std::vector<Polynomial> out;
  const auto pencil = LinearPencil::fixed(k);
  for (const auto& extra : subsets(static_cast<int>(rest.size()), p)) {
    std::vector<int> rows = chosen;
    for (int e : extra) rows.push_back(rest[e]);
    std::sort(rows.begin(), rows.end());
    Polynomial f = bordered_minor(x, pencil, rows);
    if (!f.empty()) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<StraighteningRelation> plucker_relations(int m, int p, bool force_interpolation) {
  if (p < 2) fail_argument("plucker_relations: p must be at least 2");
  const int n = m + p;
  std::vector<StraighteningRelation> out;
  if (p == 2 && !force_interpolation) {
    auto s = [m](int a, int b) { return ColumnSequence(m, 2, {a, b}); };
    // [il][jk] - [ik][jl] + [ij][kl], i < j < k < l, in lexicographic order of the lead
    std::vector<std::array<int, 4>> quads;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) quads.push_back({i, j, k, l});
    std::sort(quads.begin(), quads.end(), [](const auto& a, const auto& b) {
      return std::tie(a[0], a[3], a[1], a[2]) < std::tie(b[0], b[3], b[1], b[2]);
    });
    for (auto [i, j, k, l] : quads) {
      StraighteningRelation r{s(i, l), s(j, k), {}};
      r.tail.push_back({s(i, k), s(j, l), Rational(1)});
      r.tail.push_back({s(i, j), s(k, l), Rational(-1)});
      out.push_back(std::move(r));
    }
    return out;
  }

  auto seqs = all_sequences(m, p);
  const std::size_t ns = seqs.size();
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> standard;
  std::vector<std::pair<std::size_t, std::size_t>> leads;
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = a; b < ns; ++b) {
      if (seqs[a].leq(seqs[b])) standard[content_of(seqs[a], seqs[b])].push_back({a, b});
      else if (!seqs[b].leq(seqs[a])) leads.push_back({a, b});
    }

  // Exact minors of random small-integer matrices.
  Rng rng(0x5eed5eedULL);
  std::vector<std::vector<long long>> samples;
  auto add_sample = [&] {
    std::vector<std::vector<long long>> x(n, std::vector<long long>(p));
    for (auto& row : x)
      for (auto& v : row) v = static_cast<long long>(rng.next() % 9) - 4;
    std::vector<long long> minors(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      std::vector<std::vector<long long>> sub(p);
      for (int j = 0; j < p; ++j) sub[j] = x[seqs[s][j] - 1];
      minors[s] = bareiss(sub);
    }
    samples.push_back(std::move(minors));
  };

  for (auto [a, b] : leads) {
    const auto& cands = standard[content_of(seqs[a], seqs[b])];
    const std::size_t u = cands.size();
    std::optional<std::vector<Rational>> sol;
    for (std::size_t want = u + 6; want <= 4 * u + 40 && !sol; want += u + 6) {
      while (samples.size() < want) add_sample();
      std::vector<std::vector<Rational>> rows;
      for (std::size_t s = 0; s < want; ++s) {
        std::vector<Rational> row(u + 1);
        for (std::size_t c = 0; c < u; ++c)
          row[c] = Rational(samples[s][cands[c].first]) * Rational(samples[s][cands[c].second]);
        row[u] = Rational(samples[s][a]) * Rational(samples[s][b]);
        rows.push_back(std::move(row));
      }
      sol = solve_exact(std::move(rows), u);
    }
    if (!sol) fail_construction("plucker_relations: interpolation failed for " + seqs[a].str() + seqs[b].str());
    StraighteningRelation r{seqs[a], seqs[b], {}};
    for (std::size_t c = 0; c < u; ++c)
      if ((*sol)[c] != 0) r.tail.push_back({seqs[cands[c].first], seqs[cands[c].second], (*sol)[c]});
    out.push_back(std::move(r));
  }
  return out;
}

double relation_residual(const PluckerVector& v, const std::vector<StraighteningRelation>& relations) {
  PluckerVector u = v.normalized();
  double worst = 0.0;
  for (const auto& r : relations) {
    Complex val = u[r.alpha] * u[r.beta];
    for (const auto& t : r.tail) val -= static_cast<double>(t.coeff) * u[t.gamma] * u[t.delta];
    worst = std::max(worst, std::abs(val));
  }
  return worst;
}

WeightTable weight_table(int m, int p) {
  WeightTable t{m, p, {}, {}};
  for (const auto& a : all_sequences(m, p)) {
    long long sq = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        long long d = a[j] - a[i] - 1;
        sq += d * d;
      }
    t.v.push_back(Rational(-sq, 2));
    int w = 0;
    for (int j = 1; j <= p; ++j) w += (a[j - 1] - 1) * (p - j);
    t.w.push_back(w);
  }
  return t;
}

std::vector<std::vector<int>> groebner_exponents(const std::vector<StraighteningRelation>& relations,
                                                 const WeightTable& weights) {
  std::vector<std::vector<int>> out;
  for (const auto& r : relations) {
    Rational lead = weights.v[sequence_rank(r.alpha)] + weights.v[sequence_rank(r.beta)];
    std::vector<int> ex;
    for (const auto& t : r.tail) {
      Rational e = weights.v[sequence_rank(t.gamma)] + weights.v[sequence_rank(t.delta)] - lead;
      if (denominator(e) != 1 || e <= 0)
        fail_construction("groebner weights: exponent " + e.str() + " for lead " + r.alpha.str() + r.beta.str() +
                          " is not a positive integer");
      ex.push_back(static_cast<int>(numerator(e)));
    }
    out.push_back(std::move(ex));
  }
  return out;
}

ParametricSystem groebner_homotopy_system(int m, int p, const LaplaceCoefficients& coeffs) {
  if (coeffs.m != m || coeffs.p != p) fail_argument("groebner_homotopy_system: coefficient ambient mismatch");
  if (static_cast<int>(coeffs.per_condition.size()) != m * p)
    fail_argument("groebner_homotopy_system: expected mp hypersurface conditions");
  auto seqs = all_sequences(m, p);
  std::vector<std::string> names;
  for (const auto& a : seqs) names.push_back(a.str());
  std::vector<Polynomial> eqs;
  if (p >= 2) {
    auto relations = plucker_relations(m, p);
    auto exps = groebner_exponents(relations, weight_table(m, p));
    for (std::size_t r = 0; r < relations.size(); ++r) {
      const auto& rel = relations[r];
      Polynomial f = Polynomial::variable(static_cast<int>(sequence_rank(rel.alpha))) *
                     Polynomial::variable(static_cast<int>(sequence_rank(rel.beta)));
      for (std::size_t k = 0; k < rel.tail.size(); ++k) {
        const auto& t = rel.tail[k];
        Polynomial g = (Polynomial::variable(static_cast<int>(sequence_rank(t.gamma))) *
                        Polynomial::variable(static_cast<int>(sequence_rank(t.delta))))
                           .shifted(exps[r][k]);
        g *= -static_cast<double>(t.coeff);
        f += g;
      }
      eqs.push_back(std::move(f));
    }
  }
  for (const auto& c : coeffs.per_condition) {
    Polynomial f;
    for (std::size_t a = 0; a < c.size(); ++a) f.add_term(c[a], {static_cast<std::uint16_t>(a)}, 0);
    eqs.push_back(std::move(f));
  }
  return {std::move(names), std::move(eqs), "plucker: homogeneous coordinates"};
}

ParametricSystem sagbi_homotopy_system(int m, int p, const LaplaceCoefficients& coeffs) {
  if (coeffs.m != m || coeffs.p != p) fail_argument("sagbi_homotopy_system: coefficient ambient mismatch");
  if (static_cast<int>(coeffs.per_condition.size()) != m * p)
    fail_argument("sagbi_homotopy_system: expected mp hypersurface conditions");
  const MatrixChart chart = MatrixChart::sagbi(m, p);
  const WeightTable weights = weight_table(m, p);
  auto seqs = all_sequences(m, p);
  std::vector<Polynomial> brackets;
  for (std::size_t r = 0; r < seqs.size(); ++r) {
    const auto& a = seqs[r];
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial br;
    do {
      Polynomial term = Polynomial::constant(static_cast<double>(parity(perm)));
      int texp = -weights.w[r];
      bool zero = false;
      for (int j = 0; j < p && !zero; ++j) {
        int row = a[perm[j]];
        int slot = chart.slot(row - 1, j);
        if (slot == MatrixChart::kZero) zero = true;
        else if (slot >= 0) term = term * Polynomial::variable(slot);
        texp += (row - 1) * (p - 1 - j);
      }
      if (zero) continue;
      if (texp < 0) fail_construction("sagbi homotopy: negative t-exponent after rescaling");
      br += term.shifted(texp);
    } while (std::next_permutation(perm.begin(), perm.end()));
    brackets.push_back(std::move(br));
  }
  std::vector<Polynomial> eqs;
  for (const auto& c : coeffs.per_condition) {
    Polynomial f;
    for (std::size_t r = 0; r < seqs.size(); ++r) {
      Polynomial g = brackets[r];
      g *= c[r];
      f += g;
    }
    eqs.push_back(std::move(f));
  }
  return {chart.names(), std::move(eqs), chart.description()};
}

// ---------------------------------------------------------------------------

std::size_t Support::normalized_volume() const {
  std::size_t total = 0;
  const std::size_t dim = static_cast<std::size_t>(m * p);
  for (const auto& cell : cells) {
    std::vector<std::vector<long long>> mat;
    const auto& base = points[cell.points.front()];
    for (std::size_t k = 1; k < cell.points.size(); ++k) {
      std::vector<long long> row(dim);
      for (std::size_t i = 0; i < dim; ++i) row[i] = points[cell.points[k]][i] - base[i];
      mat.push_back(std::move(row));
    }
    total += static_cast<std::size_t>(std::llabs(bareiss(mat)));
  }
  return total;
}

Rational lifted_height(const Support& s, const SupportCell& cell, std::size_t point) {
  Rational h = s.lifting[point] - cell.height;
  for (std::size_t i = 0; i < cell.normal.size(); ++i)
    if (s.points[point][i] != 0) h += cell.normal[i] * s.points[point][i];
  return h;
}

Support support_and_weights(int m, int p) {
  const MatrixChart chart = MatrixChart::sagbi(m, p);
  const WeightTable weights = weight_table(m, p);
  auto seqs = all_sequences(m, p);
  const std::size_t dim = static_cast<std::size_t>(m * p);
  Support s;
  s.m = m;
  s.p = p;
  for (const auto& a : seqs) {
    std::vector<int> e(dim, 0);
    for (int j = 0; j < p; ++j) {
      int slot = chart.slot(a[j] - 1, j);
      if (slot >= 0) e[slot] += 1;
    }
    s.points.push_back(std::move(e));
  }
  auto chains = combinat::maximal_chains(m, p);

  for (int orientation : {1, -1}) {
    s.orientation = orientation;
    s.lifting.clear();
    for (const auto& v : weights.v) s.lifting.push_back(-orientation * v);
    s.cells.clear();
    bool ok = true;
    for (std::size_t c = 0; c < chains.size() && ok; ++c) {
      SupportCell cell{c, {}, {}, 0};
      for (const auto& node : chains[c].nodes) cell.points.push_back(sequence_rank(node));
      // <a, normal> - height = -lifting on every chain point
      std::vector<std::vector<Rational>> rows;
      for (auto pt : cell.points) {
        std::vector<Rational> row(dim + 2);
        for (std::size_t i = 0; i < dim; ++i) row[i] = s.points[pt][i];
        row[dim] = -1;
        row[dim + 1] = -s.lifting[pt];
        rows.push_back(std::move(row));
      }
      auto sol = solve_exact(std::move(rows), dim + 1);
      if (!sol) fail_construction("support_and_weights: chain cell is not a simplex");
      cell.normal.assign(sol->begin(), sol->begin() + static_cast<long>(dim));
      cell.height = (*sol)[dim];
      std::vector<bool> in_cell(seqs.size(), false);
      for (auto pt : cell.points) in_cell[pt] = true;
      for (std::size_t pt = 0; pt < seqs.size() && ok; ++pt)
        if (!in_cell[pt] && lifted_height(s, cell, pt) <= 0) ok = false;
      s.cells.push_back(std::move(cell));
    }
    if (ok) return s;
  }
  fail_construction("support_and_weights: maximal chains are not the cells of the lifted subdivision");
}

}  // namespace schubert::plucker
