#include "schubert/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert {

std::vector<int> ProblemInstance::ks() const {
  std::vector<int> out;
  for (const auto& c : conditions) out.push_back(c.k);
  return out;
}

bool ProblemInstance::all_hypersurface() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.k == 1; });
}

std::vector<ComplexMatrix> ProblemInstance::matrices() const {
  std::vector<ComplexMatrix> out;
  for (const auto& c : conditions) out.push_back(c.matrix);
  return out;
}

void ProblemInstance::validate() const {
  if (m < 1 || p < 1) fail_argument("problem: m and p must be positive");
  int sum = 0;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const auto& c = conditions[i];
    if (c.k < 1 || c.k > m) fail_argument("problem: condition " + std::to_string(i) + " has k outside 1..m");
    sum += c.k;
    if (c.matrix.rows() != m + p || c.matrix.cols() != m + 1 - c.k)
      fail_argument("problem: condition " + std::to_string(i) + " matrix must be " + std::to_string(m + p) + " x " +
                    std::to_string(m + 1 - c.k));
    if (!all_finite(c.matrix)) fail_argument("problem: condition " + std::to_string(i) + " has non-finite entries");
  }
  if (sum != m * p)
    fail_argument("problem: the k_i sum to " + std::to_string(sum) + ", expected mp = " + std::to_string(m * p));
}

ProblemInstance random_problem(int m, int p, std::vector<int> ks, std::uint64_t seed, bool real) {
  if (ks.empty()) ks.assign(static_cast<std::size_t>(m * p), 1);
  ProblemInstance prob{m, p, {}, seed, real ? "random real" : "random complex"};
  Rng rng(seed);
  for (int k : ks) {
    if (k < 1 || k > m) fail_argument("random_problem: k outside 1..m");
    ComplexMatrix a(m + p, m + 1 - k);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = real ? Complex(rng.uniform(-1.0, 1.0)) : rng.unit_disc();
    prob.conditions.push_back({k, a});
  }
  prob.validate();
  return prob;
}

PathInfo path_info(const tracker::PathResult& r, std::string label) {
  return {r.path_id, std::move(label), tracker::to_string(r.status), r.steps, r.attempts, r.final_residual, r.theta};
}

std::uint64_t restart_seed(std::uint64_t seed, int attempt) {
  return attempt == 0 ? seed : derive_seed(seed, 0x7e57a7, static_cast<std::uint64_t>(attempt));
}

double SolutionSet::max_residual() const {
  double worst = 0.0;
  for (const auto& s : solutions)
    for (double r : s.residuals) worst = std::max(worst, r);
  return worst;
}

double incidence_residual(const ComplexMatrix& x, const ComplexMatrix& k) {
  if (x.rows() != k.rows()) fail_argument("incidence_residual: row mismatch");
  if (x.cols() + k.cols() == x.rows()) return relative_incidence_residual(x, k);
  if (x.cols() + k.cols() > x.rows()) return 0.0;
  auto s = singular_values(hcat(orthonormal_columns(x), orthonormal_columns(k)));
  return s(s.size() - 1);
}

std::vector<double> condition_residuals(const ComplexMatrix& x, const ProblemInstance& problem) {
  std::vector<double> out;
  for (const auto& c : problem.conditions) out.push_back(incidence_residual(x, c.matrix));
  return out;
}

namespace {

double min_pairwise(const std::vector<plucker::PluckerVector>& v) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::min(d, plucker::plucker_distance(v[i], v[j]));
  return d;
}

}  // namespace

void collect_solutions(SolutionSet& set, const ProblemInstance& problem,
                       const std::vector<std::pair<ComplexMatrix, PathInfo>>& endpoints, const SolveOptions& opts) {
  std::vector<plucker::StraighteningRelation> relations;
  if (problem.p >= 2) relations = plucker::plucker_relations(problem.m, problem.p);
  std::vector<plucker::PluckerVector> kept;
  for (const auto& [x, info] : endpoints) {
    if (!all_finite(x)) continue;
    plucker::PluckerVector v = plucker::plucker_coords(x).normalized();
    bool dup = std::any_of(kept.begin(), kept.end(),
                           [&](const auto& w) { return plucker::plucker_distance(v, w) < opts.distinct_tol; });
    if (dup) {
      ++set.duplicates_removed;
      continue;
    }
    kept.push_back(v);
    ComplexMatrix canon = plucker::chart_matrix(v);
    Solution s{canon, v, condition_residuals(canon, problem), 0.0, info};
    if (!relations.empty()) s.relation_residual = plucker::relation_residual(v, relations);
    set.solutions.push_back(std::move(s));
  }
  set.min_distance = kept.size() < 2 ? 0.0 : min_pairwise(kept);
}

VerifyReport verify_solutions(const ProblemInstance& problem, const std::vector<ComplexMatrix>& solutions,
                              const combinat::BigInt& expected, double tol, double distinct_tol) {
  VerifyReport rep;
  std::vector<plucker::StraighteningRelation> relations;
  if (problem.p >= 2) relations = plucker::plucker_relations(problem.m, problem.p);
  std::vector<plucker::PluckerVector> pv;
  for (std::size_t s = 0; s < solutions.size(); ++s) {
    const auto& x = solutions[s];
    if (x.rows() != problem.m + problem.p || x.cols() != problem.p || !all_finite(x)) {
      rep.residuals_ok = false;
      rep.messages.push_back("solution " + std::to_string(s) + ": malformed matrix");
      continue;
    }
    auto res = condition_residuals(x, problem);
    for (std::size_t i = 0; i < res.size(); ++i) {
      rep.max_residual = std::max(rep.max_residual, res[i]);
      if (!(res[i] < tol)) {
        rep.residuals_ok = false;
        std::ostringstream msg;
        msg << "solution " << s << ", condition " << i << ": residual " << res[i];
        rep.messages.push_back(msg.str());
      }
    }
    try {
      auto v = plucker::plucker_coords(x).normalized();
      if (!relations.empty()) rep.max_relation = std::max(rep.max_relation, plucker::relation_residual(v, relations));
      pv.push_back(v);
    } catch (const SchubertError&) {
      rep.residuals_ok = false;
      rep.messages.push_back("solution " + std::to_string(s) + ": rank deficient");
    }
  }
  if (rep.max_relation > tol) {
    rep.residuals_ok = false;
    rep.messages.push_back("Plücker relations violated");
  }
  rep.min_distance = pv.size() < 2 ? 0.0 : min_pairwise(pv);
  if (pv.size() >= 2 && rep.min_distance < distinct_tol) {
    rep.distinct_ok = false;
    rep.messages.push_back("solutions are not pairwise distinct");
  }
  if (combinat::BigInt(solutions.size()) != expected) {
    rep.count_ok = false;
    rep.messages.push_back("found " + std::to_string(solutions.size()) + " solutions, expected " + expected.str());
  }
  return rep;
}

}  // namespace schubert
