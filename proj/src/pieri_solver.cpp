#include "schubert/pieri_solver.hpp"

#include <algorithm>
#include <chrono>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert::pieri {

namespace {

ComplexMatrix random_columns(int rows, int cols, Rng& rng) {
  ComplexMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rng.unit_disc();
  return a;
}

// Orthonormal basis of the part of span(a) orthogonal to span(q) (q orthonormal).
ComplexMatrix complement_in(const ComplexMatrix& a, const ComplexMatrix& q, int dim) {
  ComplexMatrix rest = a;
  if (q.cols() > 0) rest -= q * (q.adjoint() * a);
  Eigen::JacobiSVD<ComplexMatrix> svd(rest, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(dim);
}

}  // namespace

Frame normalize_frame(const ProblemInstance& problem, const Partition& partition, std::uint64_t seed) {
  problem.validate();
  const int m = problem.m, p = problem.p, n = m + p;
  Frame fr;
  fr.partition = partition;
  std::vector<bool> used(problem.conditions.size(), false);
  auto take = [&](int k) {
    for (std::size_t i = 0; i < problem.conditions.size(); ++i)
      if (!used[i] && problem.conditions[i].k == k) {
        used[i] = true;
        return static_cast<int>(i);
      }
    fail_argument("normalize_frame: partition does not match the condition list (k = " + std::to_string(k) + ")");
  };
  for (int r : partition.blocks) fr.l_source.push_back(take(r));
  for (int r : partition.blocks_prime) fr.l_prime_source.push_back(take(r));
  fr.n_source = take(partition.q);
  if (std::find(used.begin(), used.end(), false) != used.end())
    fail_argument("normalize_frame: partition leaves conditions unassigned");

  const int d0 = partition.blocks.empty() ? 0 : m + 1 - partition.blocks[0];
  const int start0 = partition.blocks_prime.empty() ? n + 1 : p + partition.blocks_prime[0];  // L'_0 = <e_start0..e_n>
  const int d1 = n + 1 - start0;
  ComplexMatrix l0 = d0 ? orthonormal_columns(problem.conditions[fr.l_source[0]].matrix) : ComplexMatrix(n, 0);
  ComplexMatrix l1 = d1 ? orthonormal_columns(problem.conditions[fr.l_prime_source[0]].matrix) : ComplexMatrix(n, 0);

  const int overlap = std::max(0, d0 - (start0 - 1));
  ComplexMatrix b(n, n);
  if (overlap > 0) {
    ComplexMatrix ker = null_space(hcat(l0, -l1), 1e-9);
    if (ker.cols() != overlap)
      fail_nongeneric("normalize_frame: L_0 and L'_0 meet in dimension " + std::to_string(ker.cols()) +
                      ", expected " + std::to_string(overlap));
    ComplexMatrix meet = orthonormal_columns(l0 * ker.topRows(d0));
    b.leftCols(d0 - overlap) = complement_in(l0, meet, d0 - overlap);
    b.middleCols(d0 - overlap, overlap) = meet;
    b.rightCols(d1 - overlap) = complement_in(l1, meet, d1 - overlap);
  } else {
    Rng rng(seed);
    b.leftCols(d0) = l0;
    b.middleCols(d0, n - d0 - d1) = random_columns(n, n - d0 - d1, rng);
    b.rightCols(d1) = l1;
  }
  Eigen::VectorXd sv = singular_values(b);
  if (sv(n - 1) < 1e-10 * sv(0)) fail_nongeneric("normalize_frame: L_0 and L'_0 are not in general position");
  fr.basis = b;

  Eigen::PartialPivLU<ComplexMatrix> lu(b);
  for (int idx : fr.l_source) fr.l.push_back(lu.solve(problem.conditions[idx].matrix));
  for (int idx : fr.l_prime_source) fr.l_prime.push_back(lu.solve(problem.conditions[idx].matrix));
  fr.n = lu.solve(problem.conditions[fr.n_source].matrix);
  return fr;
}

std::optional<ComplexMatrix> triple_intersection_start(const ColumnSequence& alpha, const ColumnSequence& alpha_prime,
                                                       const ComplexMatrix& n) {
  if (!combinat::pieri_condition(alpha, alpha_prime)) return std::nullopt;
  const int p = alpha.p(), size = alpha.n();
  if (n.rows() != size) fail_argument("triple_intersection_start: N has the wrong number of rows");
  const ColumnSequence dual = alpha.dual();
  std::vector<int> lo(p), hi(p);
  int width = 0;
  for (int j = 0; j < p; ++j) {
    lo[j] = alpha_prime[j] - 1;
    hi[j] = dual[j] - 1;
    width += hi[j] - lo[j] + 1;
  }
  ComplexMatrix a = ComplexMatrix::Zero(size, width + n.cols());
  for (int j = 0, c = 0; j < p; ++j)
    for (int i = lo[j]; i <= hi[j]; ++i) a(i, c++) = 1.0;
  a.rightCols(n.cols()) = -n;
  ComplexMatrix ker = null_space(a, 1e-9);
  if (ker.cols() != 1)
    fail_nongeneric("triple_intersection_start: C meets N in dimension " + std::to_string(ker.cols()));
  ComplexMatrix x = ComplexMatrix::Zero(size, p);
  for (int j = 0, c = 0; j < p; ++j) {
    for (int i = lo[j]; i <= hi[j]; ++i) x(i, j) = ker(c++, 0);
    if (std::abs(x(lo[j], j)) < 1e-10 * ker.col(0).norm())
      fail_nongeneric("triple_intersection_start: vanishing pivot for " + alpha.str() + alpha_prime.str());
    x.col(j) /= x(lo[j], j);
  }
  return x;
}

ComplexMatrix random_flag_matrix(int size, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix f = ComplexMatrix::Zero(size, size);
  for (int c = 0; c < size; ++c) {
    for (int i = 0; i < size - 1 - c; ++i) f(i, c) = rng.unit_circle();
    f(size - 1 - c, c) = 1.0;
  }
  return f;
}

LambdaFamily LambdaFamily::build(const ComplexMatrix& f, const ComplexMatrix& l, const ColumnSequence& alpha, int r,
                                 int i) {
  const int n = alpha.n(), p = alpha.p(), m = alpha.m();
  if (f.rows() != n || f.cols() != n) fail_argument("lambda_family: F must be square of size m+p");
  if (r < 1 || r > m) fail_argument("lambda_family: block size out of range");
  if (i < 0 || i >= r) fail_argument("lambda_family: stage offset out of range");
  if (l.rows() != n || l.cols() != m + 1 - r) fail_argument("lambda_family: L must be (m+p) x (m+1-r)");
  LambdaFamily fam;
  fam.f = f;
  fam.l = l;
  fam.alpha = alpha;
  fam.r = r;
  fam.i = i;
  // first alpha_p columns of F, then the rest reversed; drop those whose unit entry sits in a row of alpha^v
  std::vector<int> order;
  const int ap = alpha[p - 1];
  for (int c = 0; c < ap; ++c) order.push_back(c);
  for (int c = n - 1; c >= ap; --c) order.push_back(c);
  const ColumnSequence dual = alpha.dual();
  std::vector<int> cols;
  for (int c : order) {
    const int pivot = n - c;
    if (std::find(dual.entries().begin(), dual.entries().end(), pivot) != dual.entries().end()) continue;
    cols.push_back(c);
    fam.u_pivot.push_back(pivot);
  }
  fam.u = ComplexMatrix(n, m);
  for (int k = 0; k < m; ++k) fam.u.col(k) = f.col(cols[k]);
  return fam;
}

namespace {

// Column b (1-based) of Lambda_i(t) as t*u_a + (1-t)*u_c; a == c for a constant column, a == 0 for l_b.
std::pair<int, int> column_sources(const LambdaFamily& fam, int b) {
  const int m = fam.alpha.m(), p = fam.alpha.p();
  if (fam.i == 0) return {0, b};
  const int k = b + fam.i - 1, special = fam.alpha[p - 1] - p;
  if (k < special) return {k, k + 1};
  if (k == special) return {k, m + 1 + fam.i - fam.r};
  return {k, k};
}

}  // namespace

LinearPencil LambdaFamily::pencil() const {
  const int d = columns();
  LinearPencil out{ComplexMatrix(u.rows(), d), ComplexMatrix(u.rows(), d)};
  for (int b = 1; b <= d; ++b) {
    auto [a, c] = column_sources(*this, b);
    ComplexVector one = a == 0 ? ComplexVector(l.col(b - 1)) : ComplexVector(u.col(a - 1));
    out.constant.col(b - 1) = u.col(c - 1);
    out.slope.col(b - 1) = one - u.col(c - 1);
  }
  return out;
}

LinearPencil LambdaFamily::pencil_within(int e) const {
  LinearPencil full = pencil();
  std::vector<int> keep;
  for (int b = 1; b <= columns(); ++b) {
    auto [a, c] = column_sources(*this, b);
    if (a == 0) continue;
    if (u_pivot[a - 1] <= e && u_pivot[c - 1] <= e) keep.push_back(b - 1);
  }
  LinearPencil out{ComplexMatrix(u.rows(), keep.size()), ComplexMatrix(u.rows(), keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.constant.col(k) = full.constant.col(keep[k]);
    out.slope.col(k) = full.slope.col(keep[k]);
  }
  return out;
}

ComplexMatrix lambda_family(const ComplexMatrix& f, const ComplexMatrix& l, const ColumnSequence& alpha, int r, int i,
                            Complex t) {
  return LambdaFamily::build(f, l, alpha, r, i).at(t);
}

namespace {

struct SideStage {
  ColumnSequence cell;
  std::string tag;
  std::vector<ConditionDescriptor> conditions;
};

int numerical_rank(const ComplexMatrix& a) {
  if (a.cols() == 0 || a.rows() == 0) return 0;
  Eigen::VectorXd sv = singular_values(a);
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-9 * sv(0)) ++r;
  return r;
}

void check_meet(const LambdaFamily& fam, const LinearPencil& within, int e) {
  const Complex t0(0.3716, 0.2281);
  ComplexMatrix full = fam.at(t0);
  const int n = static_cast<int>(full.rows());
  const int meet = fam.columns() - numerical_rank(full.bottomRows(n - e));
  const int kept = static_cast<int>(within.constant.cols());
  if (meet != kept || numerical_rank(within.at(0.0)) != kept || numerical_rank(within.at(1.0)) != kept)
    fail_construction("Lambda family meets <e_1..e_" + std::to_string(e) + "> in dimension " + std::to_string(meet) +
                      " but " + std::to_string(kept) + " columns lie in it");
}

// Z_{R,k}(t) for one list; `ls` holds L_0..L_a in the coordinates of this side.
SideStage side_stage(int m, int p, const Chain& chain, const std::vector<int>& blocks, const std::vector<ComplexMatrix>& ls,
                     const ComplexMatrix& f, int k, int tau, const std::string& name) {
  const int r0 = blocks.empty() ? 0 : blocks[0];
  const int a = blocks.empty() ? 0 : static_cast<int>(blocks.size()) - 1;
  int tail = 0;
  for (int c = 1; c <= a; ++c) tail += blocks[c];
  if (tail <= k) return {chain.at(r0 + tau), "const", {}};
  int c = 1, before = 0;
  while (before + blocks[c] <= k) before += blocks[c++];
  const int i = k - before;
  const ColumnSequence& alpha = chain.at(r0 + before);
  const ColumnSequence& beta = chain.at(r0 + k);
  auto add_static = [&](SideStage& s) {
    for (int c2 = c + 1; c2 <= a; ++c2)
      s.conditions.push_back({name + std::to_string(c2), LinearPencil::fixed(ls[c2]), false});
  };
  if (i > 0 && beta[p - 1] > alpha[p - 1]) {
    SideStage s{chain.at(r0 + before + blocks[c]), "jump", {}};
    add_static(s);
    return s;
  }
  auto fam = LambdaFamily::build(f, ls[c], alpha, blocks[c], i);
  SideStage s{beta, "Lambda" + std::to_string(i), {}};
  const std::string label = "Lambda_" + std::to_string(i) + "(" + name + std::to_string(c) + ")";
  if (i == 0) {
    s.conditions.push_back({label, fam.pencil(), true});
  } else {
    int j = 0;
    for (int jj = 0; jj < p; ++jj)
      if (beta[jj] > alpha[jj]) j = jj + 1;
    const int e = beta.dual()[p - j];
    LinearPencil within = fam.pencil_within(e);
    check_meet(fam, within, e);
    s.conditions.push_back({label + " in E" + std::to_string(e), within, true});
  }
  (void)m;
  add_static(s);
  return s;
}

std::vector<ComplexMatrix> reversed_all(const std::vector<ComplexMatrix>& ms) {
  std::vector<ComplexMatrix> out;
  for (const auto& a : ms) out.push_back(reverse_rows(a));
  return out;
}

}  // namespace

PieriSchedule make_schedule(const Frame& frame, int m, int p, const combinat::SolsPair& pair, const ComplexMatrix& f,
                            const ComplexMatrix& f_prime) {
  const auto& part = frame.partition;
  PieriSchedule sch;
  sch.m = m;
  sch.p = p;
  sch.partition = part;
  sch.pair = pair;
  sch.tau = part.tau();
  const int r0p = part.blocks_prime.empty() ? 0 : part.blocks_prime[0];
  sch.delta = pair.S.at(r0p + sch.tau);
  const auto l_prime_rev = reversed_all(frame.l_prime);
  for (int k = 0; k <= sch.tau; ++k) {
    SideStage rs = side_stage(m, p, pair.R, part.blocks, frame.l, f, k, sch.tau, "L");
    SideStage ss = side_stage(m, p, pair.S, part.blocks_prime, l_prime_rev, f_prime, k, sch.tau, "L'");
    StageDescriptor st{k, rs.cell, ss.cell, rs.tag, ss.tag, std::move(rs.conditions)};
    for (auto& c : ss.conditions) {
      c.pencil.constant = reverse_rows(c.pencil.constant);
      c.pencil.slope = reverse_rows(c.pencil.slope);
      st.conditions.push_back(std::move(c));
    }
    st.conditions.push_back({"N", LinearPencil::fixed(frame.n), false});
    int moving = 0;
    for (const auto& c : st.conditions) moving += c.moving;
    if (moving > 2) fail_construction("make_schedule: more than two moving conditions at one stage");
    sch.stages.push_back(std::move(st));
  }
  return sch;
}

plucker::MatrixChart stage_chart(const PieriSchedule& schedule, int k) {
  if (k < 0 || k > schedule.tau) fail_argument("stage_chart: stage out of range");
  const auto& st = schedule.stages[k];
  return plucker::MatrixChart::schubert_cell(st.alpha, st.alpha_prime, schedule.delta);
}

ParametricSystem stage_system(const PieriSchedule& schedule, int k) {
  auto chart = stage_chart(schedule, k);
  std::vector<Polynomial> eqs;
  for (const auto& c : schedule.stages[k].conditions) {
    auto minors = plucker::all_maximal_minors(chart, c.pencil);
    eqs.insert(eqs.end(), std::make_move_iterator(minors.begin()), std::make_move_iterator(minors.end()));
  }
  return ParametricSystem(chart.names(), std::move(eqs), chart.description());
}

namespace {

struct Run {
  PieriSchedule schedule;
  ComplexMatrix x;  // frame coordinates, chart of the last finished stage
  PathInfo info;
  bool alive = true;
};

std::string pair_label(const combinat::SolsPair& pr) {
  return "R" + pr.R.endpoint().str() + " S" + pr.S.endpoint().str();
}

SolutionSet solve_once(const ProblemInstance& problem, const Partition& partition,
                       const std::vector<combinat::SolsPair>& pairs, std::uint64_t seed, const SolveOptions& opts) {
  const int m = problem.m, p = problem.p, n = m + p;
  const tracker::GammaPath path = tracker::gamma_path(seed);
  Frame frame = normalize_frame(problem, partition, derive_seed(seed, 0xf7a3e, 0));
  const ComplexMatrix f = random_flag_matrix(n, derive_seed(seed, 0xf1a9, 1));
  const ComplexMatrix f_prime = random_flag_matrix(n, derive_seed(seed, 0xf1a9, 2));

  SolutionSet set;
  set.solver = "pieri";
  set.seed = seed;
  set.gamma_theta = path.theta;
  set.chart = "max-plucker";
  set.m = m;
  set.p = p;
  set.expected = combinat::BigInt(pairs.size());

  std::vector<Run> runs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Run run{make_schedule(frame, m, p, pairs[i], f, f_prime), {}, {}, true};
    run.info.path_id = static_cast<int>(i);
    run.info.label = pair_label(pairs[i]);
    run.info.status = "success";
    run.info.theta = path.theta;
    const auto& top = run.schedule.stages.back();
    auto start = triple_intersection_start(top.alpha, top.alpha_prime, frame.n);
    if (!start) fail_construction("pieri_solve: pair " + run.info.label + " fails Pieri's condition");
    run.x = *start;
    runs.push_back(std::move(run));
  }
  const int tau = partition.tau();
  set.stages.push_back({"start", static_cast<int>(runs.size()), static_cast<int>(runs.size())});

  for (int k = tau - 1; k >= 0; --k) {
    std::vector<tracker::SquaredHomotopy> hs;
    std::vector<ComplexVector> xs;
    std::vector<std::size_t> owner;
    std::vector<plucker::MatrixChart> charts;
    int entering = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      auto& run = runs[i];
      if (!run.alive) continue;
      ++entering;
      auto chart = stage_chart(run.schedule, k);
      ComplexVector x0 = chart.coordinates(run.x);
      try {
        auto h = tracker::square(stage_system(run.schedule, k).normalized(), {x0}, derive_seed(seed, i, k + 1));
        h.path = path;
        hs.push_back(std::move(h));
      } catch (const SchubertError& e) {
        if (e.kind() != SchubertError::Kind::NonGeneric) throw;
        run.alive = false;
        run.info.status = "rejected start at stage " + std::to_string(k);
        continue;
      }
      xs.push_back(std::move(x0));
      owner.push_back(i);
      charts.push_back(std::move(chart));
    }
    auto results = tracker::track_each(hs, xs, opts.track);
    int leaving = 0;
    for (std::size_t r = 0; r < results.size(); ++r) {
      auto& run = runs[owner[r]];
      const auto& res = results[r];
      run.info.steps += res.steps;
      run.info.attempts = std::max(run.info.attempts, res.attempts);
      run.info.final_residual = res.final_residual;
      if (res.status != tracker::PathStatus::Success) {
        run.alive = false;
        run.info.status = tracker::to_string(res.status) + " at stage " + std::to_string(k);
        continue;
      }
      run.x = charts[r].instantiate(res.endpoint);
      ++leaving;
    }
    set.stages.push_back({"stage " + std::to_string(k), entering, leaving});
  }

  std::vector<std::pair<ComplexMatrix, PathInfo>> endpoints;
  for (auto& run : runs) {
    set.paths.push_back(run.info);
    if (!run.alive) {
      ++set.failed_paths;
      continue;
    }
    endpoints.push_back({frame.basis * run.x, run.info});
  }
  collect_solutions(set, problem, endpoints, opts);
  return set;
}

}  // namespace

SolutionSet pieri_solve(const ProblemInstance& problem, const std::optional<Partition>& partition, std::uint64_t seed,
                        const SolveOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  problem.validate();
  const Partition part = partition ? *partition : combinat::default_partition(problem.ks());
  combinat::schubert_count(problem.m, problem.p, problem.ks(), part);  // checks the partition against k
  const auto pairs = combinat::sols(problem.m, problem.p, part.blocks, part.blocks_prime, part.q);
  SolutionSet set;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    set = solve_once(problem, part, pairs, restart_seed(seed, attempt), opts);
    set.restarts = attempt;
    if (set.failed_paths == 0 && set.duplicates_removed == 0) break;
  }
  set.seed = seed;
  set.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return set;
}

}  // namespace schubert::pieri
