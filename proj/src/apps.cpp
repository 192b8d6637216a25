#include "schubert/apps.hpp"

#include <algorithm>
#include <cmath>

#include "schubert/error.hpp"
#include "schubert/groebner_solver.hpp"
#include "schubert/pieri_solver.hpp"
#include "schubert/random.hpp"
#include "schubert/sagbi_solver.hpp"

namespace schubert::apps {

ComplexMatrix osculating_plane(double s, int dim, int m, int p) {
  const int n = m + p;
  if (m < 1 || p < 1) fail_argument("osculating_plane: m and p must be positive");
  if (dim < 1 || dim > n) fail_argument("osculating_plane: dimension must lie in [1, m+p]");
  ComplexMatrix k = ComplexMatrix::Zero(n, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = j; i < n; ++i) {
      double falling = 1.0;  // i (i-1) ... (i-j+1)
      for (int f = 0; f < j; ++f) falling *= i - f;
      k(i, j) = falling * std::pow(s, i - j);
    }
  return k;
}

ProblemInstance OsculatingInstance::problem() const {
  if (k.size() != s.size()) fail_argument("osculating instance: k and s differ in length");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b]) fail_argument("osculating instance: parameters must be distinct");
  ProblemInstance prob;
  prob.m = m;
  prob.p = p;
  prob.description = "osculating";
  for (std::size_t i = 0; i < k.size(); ++i) prob.conditions.push_back({k[i], osculating_plane(s[i], m + 1 - k[i], m, p)});
  prob.validate();
  return prob;
}

std::vector<double> distinct_reals(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out;
  while (static_cast<int>(out.size()) < count) {
    const double v = rng.uniform(-4.0, 4.0);
    if (std::all_of(out.begin(), out.end(), [&](double w) { return std::abs(v - w) >= 0.05; })) out.push_back(v);
  }
  return out;
}

double imaginary_part(const ComplexMatrix& x) {
  auto v = plucker::plucker_coords(x);
  const Complex big = v[v.argmax()];
  const Complex scale = std::conj(big) / (std::abs(big) * std::abs(big));  // big * scale = 1
  double worst = 0.0;
  for (const auto& c : v.coords()) worst = std::max(worst, std::abs((c * scale).imag()));
  return worst;
}

namespace {

SolutionSet run_solver(const ProblemInstance& prob, std::uint64_t seed, const SolveOptions& opts,
                       const std::string& solver) {
  std::string which = solver;
  if (which == "auto") which = prob.all_hypersurface() ? "groebner" : "pieri";
  if (which == "groebner") return groebner::groebner_solve(prob, seed, opts);
  if (which == "sagbi") return sagbi::sagbi_solve(prob, seed, opts);
  if (which == "pieri") return pieri::pieri_solve(prob, std::nullopt, seed, opts);
  fail_argument("unknown solver '" + solver + "'");
}

}  // namespace

SolutionSet solve_general_position(const ProblemInstance& original, std::uint64_t seed, const SolveOptions& opts,
                        const std::string& solver) {
  const int n = original.m + original.p;
  Rng rng(derive_seed(seed, 0x5a1b0, 0));
  ComplexMatrix g(n, n);
  for (;;) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
    Eigen::VectorXd sv = singular_values(g);
    if (sv(n - 1) > 1e-2 * sv(0)) break;
  }
  ProblemInstance moved = original;
  for (auto& c : moved.conditions) c.matrix = g * c.matrix;
  SolutionSet solved = run_solver(moved, seed, opts, solver);

  Eigen::PartialPivLU<ComplexMatrix> lu(g);
  std::vector<std::pair<ComplexMatrix, PathInfo>> endpoints;
  for (const auto& sol : solved.solutions) endpoints.push_back({lu.solve(sol.matrix), sol.path});
  SolutionSet out = solved;
  out.solutions.clear();
  out.duplicates_removed = 0;
  collect_solutions(out, original, endpoints, opts);
  out.duplicates_removed += solved.duplicates_removed;
  return out;
}

ShapiroReport shapiro_check(int m, int p, const std::vector<int>& k, const std::vector<double>& s, std::uint64_t seed,
                            const SolveOptions& opts, const std::string& solver) {
  const ProblemInstance original = OsculatingInstance{m, p, k, s}.problem();
  ShapiroReport rep;
  rep.solutions = solve_general_position(original, seed, opts, solver);
  for (const auto& sol : rep.solutions.solutions) {
    const double im = imaginary_part(sol.matrix);
    rep.max_imag = std::max(rep.max_imag, im);
    rep.real_count += im < 1e-6;
  }
  rep.all_real = rep.max_imag < 1e-6;
  return rep;
}

ComplexMatrix extract_feedback(const ComplexMatrix& x, int m, int p) {
  if (x.rows() != m + p || x.cols() != p) fail_argument("extract_feedback: X must be (m+p) x p");
  ComplexMatrix bottom = x.bottomRows(p);
  Eigen::VectorXd sv = singular_values(bottom);
  if (sv(0) == 0.0 || sv(p - 1) < 1e-10 * sv(0))
    fail_nongeneric("extract_feedback: bottom block is singular; the solution lies outside the feedback chart");
  // F = top * bottom^-1, via the transpose system
  ComplexMatrix ft = bottom.transpose().partialPivLu().solve(ComplexMatrix(x.topRows(m).transpose()));
  return ft.transpose();
}

ProblemInstance FeedbackProblem::problem() const {
  if (static_cast<int>(poles.size()) != m * p || k.size() != poles.size())
    fail_argument("feedback problem: need mp poles and one matrix per pole");
  ProblemInstance prob;
  prob.m = m;
  prob.p = p;
  prob.description = "feedback";
  for (const auto& km : k) prob.conditions.push_back({1, km});
  prob.validate();
  return prob;
}

FeedbackProblem random_feedback_problem(int m, int p, std::uint64_t seed) {
  Rng rng(seed);
  auto real_matrix = [&](int r, int c) {
    ComplexMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    return a;
  };
  FeedbackProblem fp;
  fp.m = m;
  fp.p = p;
  std::vector<ComplexMatrix> d, nn;  // coefficients of s^0 .. s^(p-1)
  for (int l = 0; l < p; ++l) {
    d.push_back(real_matrix(m, m));
    nn.push_back(real_matrix(p, m));
  }
  for (double s : distinct_reals(m * p, derive_seed(seed, 0xfeed, 0))) {
    fp.poles.push_back(s);
    ComplexMatrix km = ComplexMatrix::Zero(m + p, m);
    km.topRows(m) = std::pow(s, p) * ComplexMatrix::Identity(m, m);
    for (int l = 0; l < p; ++l) {
      km.topRows(m) += std::pow(s, l) * d[l];
      km.bottomRows(p) += std::pow(s, l) * nn[l];
    }
    fp.k.push_back(km);
  }
  return fp;
}

FeedbackSolution solve_feedback(const FeedbackProblem& fp, std::uint64_t seed, const SolveOptions& opts,
                                const std::string& solver) {
  FeedbackSolution out;
  out.set = solve_general_position(fp.problem(), seed, opts, solver);
  const ComplexMatrix id = ComplexMatrix::Identity(fp.p, fp.p);
  for (const auto& sol : out.set.solutions) {
    ComplexMatrix f;
    try {
      f = extract_feedback(sol.matrix, fp.m, fp.p);
    } catch (const SchubertError& e) {
      if (e.kind() != SchubertError::Kind::NonGeneric) throw;
      ++out.outside_chart;
      continue;
    }
    ComplexMatrix x(fp.m + fp.p, fp.p);
    x.topRows(fp.m) = f;
    x.bottomRows(fp.p) = id;
    for (const auto& km : fp.k) out.max_residual = std::max(out.max_residual, incidence_residual(x, km));
    out.laws.push_back(std::move(f));
  }
  return out;
}

}  // namespace schubert::apps
