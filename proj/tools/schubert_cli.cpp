// schubert: counts, random instances, solving and verification of special Schubert problems.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 path failures or residuals above
// tolerance, 3 solution count differs from the expected count.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schubert/apps.hpp"
#include "schubert/combinat.hpp"
#include "schubert/error.hpp"
#include "schubert/groebner_solver.hpp"
#include "schubert/problem_io.hpp"
#include "schubert/sagbi_solver.hpp"

using namespace schubert;

namespace {

constexpr int kOk = 0, kUsage = 1, kPathFailure = 2, kCountMismatch = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SCHUBERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail_argument("SCHUBERT_SEED must be a non-negative integer");
    }
  }
  return 1;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string chain_str(const combinat::Chain& c) {
  std::string s;
  for (const auto& n : c.nodes) s += n.str();
  return s;
}

std::vector<int> ones_if_empty(std::vector<int> k, int m, int p) {
  if (k.empty()) k.assign(static_cast<std::size_t>(m * p), 1);
  return k;
}

SolutionSet run(const ProblemInstance& prob, const std::string& solver, std::uint64_t seed, const SolveOptions& opts) {
  std::string which = solver;
  if (which == "auto") which = prob.all_hypersurface() ? "sagbi" : "pieri";
  return apps::solve_general_position(prob, seed, opts, which);
}

int solve_status(const SolutionSet& set, double tol) {
  if (set.failed_paths > 0) return kPathFailure;
  if (!set.count_matches()) return kCountMismatch;
  if (set.max_residual() >= tol) return kPathFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical Schubert calculus: Pieri, Groebner and SAGBI homotopies"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int status = kOk;

  int m = 0, p = 0;
  std::vector<int> k;

  auto* degree = app.add_subcommand("degree", "degree of the Grassmannian of p-planes in C^(m+p)");
  degree->add_option("m", m)->required()->check(CLI::PositiveNumber);
  degree->add_option("p", p)->required()->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "number of p-planes meeting general (m+1-k_i)-planes");
  count->add_option("m", m)->required()->check(CLI::PositiveNumber);
  count->add_option("p", p)->required()->check(CLI::PositiveNumber);
  count->add_option("k", k, "comma-separated k_i (default: mp ones)")->delimiter(',');

  auto* chains = app.add_subcommand("chains", "maximal chains of Young's poset");
  chains->add_option("m", m)->required()->check(CLI::PositiveNumber);
  chains->add_option("p", p)->required()->check(CLI::PositiveNumber);

  auto* sols = app.add_subcommand("sols", "pairs of Pieri-tree leaves indexing the Pieri homotopy paths");
  sols->add_option("m", m)->required()->check(CLI::PositiveNumber);
  sols->add_option("p", p)->required()->check(CLI::PositiveNumber);
  sols->add_option("k", k)->delimiter(',');

  bool real = false;
  std::vector<double> osc;
  std::string out = "-";
  auto* random = app.add_subcommand("random", "write a random problem file");
  random->add_option("m", m)->required()->check(CLI::PositiveNumber);
  random->add_option("p", p)->required()->check(CLI::PositiveNumber);
  random->add_option("k", k)->delimiter(',');
  random->add_option("--seed", seed);
  random->add_flag("--real", real, "real entries uniform in [-1, 1]");
  random->add_option("--osculating", osc, "planes osculating the moment curve at these parameters")->delimiter(',');
  random->add_option("--out,-o", out);

  std::string problem_path, solution_path, solver = "auto";
  double tol = 1e-8;
  unsigned threads = 0;
  bool timing = false;
  auto* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("problem", problem_path)->required();
  solve->add_option("--solver", solver)->check(CLI::IsMember({"groebner", "sagbi", "pieri", "auto"}));
  solve->add_option("--seed", seed);
  solve->add_option("--tol", tol);
  solve->add_option("--out,-o", out);
  solve->add_option("--threads", threads, "tracking threads (0: all cores)");
  solve->add_flag("--timing", timing, "record wall time in the solution file");

  auto* verify = app.add_subcommand("verify", "check a solution file against its problem");
  verify->add_option("problem", problem_path)->required();
  verify->add_option("solutions", solution_path)->required();
  verify->add_option("--tol", tol);

  int max_m = 5;
  auto* table1 = app.add_subcommand("table1", "p = 2 counts and timings for both hypersurface solvers");
  table1->add_option("--max-m", max_m)->check(CLI::Range(3, 12));
  table1->add_option("--seed", seed);
  table1->add_option("--threads", threads);

  std::vector<double> params;
  auto* shapiro = app.add_subcommand("shapiro", "realness of solutions for osculating flags");
  shapiro->add_option("m", m)->required()->check(CLI::PositiveNumber);
  shapiro->add_option("p", p)->required()->check(CLI::PositiveNumber);
  shapiro->add_option("k", k)->delimiter(',');
  shapiro->add_option("--s", params, "distinct real parameters (default: random)")->delimiter(',');
  shapiro->add_option("--seed", seed);
  shapiro->add_option("--solver", solver)->check(CLI::IsMember({"groebner", "sagbi", "pieri", "auto"}));
  shapiro->add_option("--threads", threads);

  try {
    seed = default_seed();
    app.parse(argc, argv);
    SolveOptions opts;
    opts.track.threads = threads;

    if (*degree) {
      std::cout << combinat::grassmann_degree(m, p) << "\n";
    } else if (*count) {
      k = ones_if_empty(k, m, p);
      auto part = combinat::default_partition(k);
      auto n = combinat::schubert_count(m, p, k, part);
      std::cout << n << "\n";
      std::cout << "partition L=(" << join(part.blocks) << ") L'=(" << join(part.blocks_prime) << ") q=" << part.q
                << "\n";
      std::cout << "sols " << n << "\n";
    } else if (*chains) {
      auto cs = combinat::maximal_chains(m, p);
      for (const auto& c : cs) std::cout << chain_str(c) << "\n";
      std::cout << cs.size() << " chains\n";
    } else if (*sols) {
      k = ones_if_empty(k, m, p);
      auto part = combinat::default_partition(k);
      auto pairs = combinat::sols(m, p, part.blocks, part.blocks_prime, part.q);
      for (const auto& pr : pairs) std::cout << "R " << chain_str(pr.R) << "  S " << chain_str(pr.S) << "\n";
      std::cout << pairs.size() << " pairs\n";
    } else if (*random) {
      k = ones_if_empty(k, m, p);
      ProblemInstance prob;
      if (!osc.empty()) {
        if (osc.size() != k.size()) fail_argument("--osculating needs one parameter per condition");
        prob = apps::OsculatingInstance{m, p, k, osc}.problem();
        std::ostringstream d;
        d << std::setprecision(17) << "osculating s=";
        for (std::size_t i = 0; i < osc.size(); ++i) d << (i ? "," : "") << osc[i];
        prob.description = d.str();
      } else {
        prob = random_problem(m, p, k, seed, real);
      }
      prob.seed = seed;
      io::write_text(out, io::dump(io::problem_to_json(prob)));
    } else if (*solve) {
      auto prob = io::problem_from_json(io::parse(io::read_text(problem_path)));
      opts.tol = tol;
      auto set = run(prob, solver, seed, opts);
      io::write_text(out, io::dump(io::solutions_to_json(io::to_file(set, timing))));
      status = solve_status(set, tol);
      std::cerr << set.solver << ": " << set.count() << " of " << set.expected << " solutions, " << set.failed_paths
                << " failed paths, max residual " << set.max_residual() << ", " << set.restarts << " restarts\n";
      for (const auto& st : set.stages)
        std::cerr << "  " << st.name << ": " << st.successes << "/" << st.paths << "\n";
    } else if (*verify) {
      auto prob = io::problem_from_json(io::parse(io::read_text(problem_path)));
      auto file = io::solutions_from_json(io::parse(io::read_text(solution_path)));
      if (file.m != prob.m || file.p != prob.p) fail_argument("solution file does not match the problem's (m, p)");
      auto rep = verify_solutions(prob, file.matrices(), combinat::BigInt(file.expected), tol);
      for (std::size_t i = 0; i < file.solutions.size(); ++i) {
        auto res = condition_residuals(file.solutions[i].matrix, prob);
        std::cerr << "solution " << i << ":";
        for (double r : res) std::cerr << " " << r;
        std::cerr << "\n";
      }
      for (const auto& msg : rep.messages) std::cerr << msg << "\n";
      std::cerr << "max residual " << rep.max_residual << ", max relation residual " << rep.max_relation
                << ", min distance " << rep.min_distance << "\n";
      if (!rep.count_ok)
        status = kCountMismatch;
      else if (!rep.ok())
        status = kPathFailure;
      std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
    } else if (*table1) {
      std::cout << "m p d groebner time_s sagbi time_s\n";
      for (int mm = 3; mm <= max_m; ++mm) {
        auto prob = random_problem(mm, 2, {}, seed + static_cast<std::uint64_t>(mm));
        auto g = groebner::groebner_solve(prob, seed, opts);
        auto s = sagbi::sagbi_solve(prob, seed, opts);
        std::cout << mm << " 2 " << combinat::grassmann_degree(mm, 2) << " " << g.count() << " " << std::fixed
                  << std::setprecision(2) << g.wall_time << " " << s.count() << " " << s.wall_time << std::defaultfloat
                  << std::endl;
        for (const auto* set : {&g, &s}) status = std::max(status, solve_status(*set, 1e-8));
      }
    } else if (*shapiro) {
      k = ones_if_empty(k, m, p);
      if (params.empty()) params = apps::distinct_reals(static_cast<int>(k.size()), seed);
      auto rep = apps::shapiro_check(m, p, k, params, seed, opts, solver);
      std::cout << std::setprecision(17) << "s";
      for (double v : params) std::cout << " " << v;
      std::cout << std::setprecision(6) << "\nsolutions " << rep.solutions.count() << " of " << rep.solutions.expected
                << "\nreal " << rep.real_count << "\nmax_imag " << rep.max_imag << "\nall_real "
                << (rep.all_real ? "yes" : "no") << "\n";
      status = solve_status(rep.solutions, 1e-8);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const SchubertError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == SchubertError::Kind::InvalidArgument ? kUsage : kPathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
