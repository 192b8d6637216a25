#include "schubert/problem_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail_argument(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json path_to_json(const PathInfo& p) {
  return Json{{"path_id", p.path_id}, {"label", p.label},   {"status", p.status},
              {"steps", p.steps},     {"attempts", p.attempts}, {"final_residual", p.final_residual}};
}

PathInfo path_from_json(const Json& j) {
  PathInfo p;
  p.path_id = field(j, "path_id").get<int>();
  p.label = field(j, "label").get<std::string>();
  p.status = field(j, "status").get<std::string>();
  p.steps = field(j, "steps").get<int>();
  p.attempts = field(j, "attempts").get<int>();
  p.final_residual = field(j, "final_residual").get<double>();
  return p;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail_argument("complex numbers must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail_argument("matrix must be a non-empty array of rows");
  const auto rows = j.size(), cols = j[0].size();
  ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) a(i, c) = complex_from_json(j[i][c]);
  }
  return a;
}

Json problem_to_json(const ProblemInstance& problem) {
  Json out{{"m", problem.m}, {"p", problem.p}};
  if (problem.seed) out["seed"] = *problem.seed;
  if (!problem.description.empty()) out["description"] = problem.description;
  Json conds = Json::array();
  for (const auto& c : problem.conditions) conds.push_back(Json{{"k", c.k}, {"matrix", matrix_to_json(c.matrix)}});
  out["conditions"] = std::move(conds);
  return out;
}

ProblemInstance problem_from_json(const Json& j) {
  return guarded("problem file", [&] {
    ProblemInstance prob;
    prob.m = field(j, "m").get<int>();
    prob.p = field(j, "p").get<int>();
    if (j.contains("seed")) prob.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("description")) prob.description = j.at("description").get<std::string>();
    const Json& conds = field(j, "conditions");
    if (!conds.is_array()) fail_argument("conditions must be an array");
    for (const auto& c : conds) prob.conditions.push_back({field(c, "k").get<int>(), matrix_from_json(field(c, "matrix"))});
    prob.validate();
    return prob;
  });
}

std::vector<ComplexMatrix> SolutionFile::matrices() const {
  std::vector<ComplexMatrix> out;
  for (const auto& s : solutions) out.push_back(s.matrix);
  return out;
}

SolutionFile to_file(const SolutionSet& set, bool with_timing) {
  SolutionFile f;
  f.solver = set.solver;
  f.seed = set.seed;
  f.gamma_theta = set.gamma_theta;
  f.m = set.m;
  f.p = set.p;
  f.chart = set.chart;
  for (const auto& s : set.solutions) f.solutions.push_back({s.matrix, s.plucker.coords(), s.residuals, s.path});
  f.stages = set.stages;
  f.restarts = set.restarts;
  f.failed_paths = set.failed_paths;
  f.count = set.count();
  f.expected = set.expected.str();
  f.max_residual = set.max_residual();
  if (with_timing) f.wall_time = set.wall_time;
  return f;
}

Json solutions_to_json(const SolutionFile& f) {
  Json sols = Json::array();
  for (const auto& s : f.solutions) {
    Json pl = Json::array();
    for (auto z : s.plucker) pl.push_back(complex_to_json(z));
    sols.push_back(Json{{"matrix", matrix_to_json(s.matrix)},
                        {"plucker", std::move(pl)},
                        {"residuals", s.residuals},
                        {"path", path_to_json(s.path)}});
  }
  Json stages = Json::array();
  for (const auto& st : f.stages) stages.push_back(Json{{"name", st.name}, {"paths", st.paths}, {"successes", st.successes}});
  Json summary{{"count", f.count},
               {"expected", f.expected},
               {"max_residual", f.max_residual},
               {"failed_paths", f.failed_paths},
               {"restarts", f.restarts},
               {"stages", std::move(stages)}};
  if (f.wall_time) summary["wall_time"] = *f.wall_time;
  return Json{{"solver", f.solver}, {"seed", f.seed},        {"gamma_theta", f.gamma_theta},
              {"m", f.m},           {"p", f.p},              {"chart", f.chart},
              {"solutions", std::move(sols)}, {"summary", std::move(summary)}};
}

SolutionFile solutions_from_json(const Json& j) {
  return guarded("solution file", [&] {
    SolutionFile f;
    f.solver = field(j, "solver").get<std::string>();
    f.seed = field(j, "seed").get<std::uint64_t>();
    f.gamma_theta = field(j, "gamma_theta").get<double>();
    f.m = field(j, "m").get<int>();
    f.p = field(j, "p").get<int>();
    f.chart = field(j, "chart").get<std::string>();
    for (const auto& s : field(j, "solutions")) {
      SolutionRecord r;
      r.matrix = matrix_from_json(field(s, "matrix"));
      if (r.matrix.rows() != f.m + f.p || r.matrix.cols() != f.p) fail_argument("solution matrix must be (m+p) x p");
      for (const auto& z : field(s, "plucker")) r.plucker.push_back(complex_from_json(z));
      r.residuals = field(s, "residuals").get<std::vector<double>>();
      r.path = path_from_json(field(s, "path"));
      f.solutions.push_back(std::move(r));
    }
    const Json& sum = field(j, "summary");
    f.count = field(sum, "count").get<std::size_t>();
    f.expected = field(sum, "expected").get<std::string>();
    f.max_residual = field(sum, "max_residual").get<double>();
    f.failed_paths = field(sum, "failed_paths").get<int>();
    f.restarts = field(sum, "restarts").get<int>();
    for (const auto& st : field(sum, "stages"))
      f.stages.push_back({field(st, "name").get<std::string>(), field(st, "paths").get<int>(),
                          field(st, "successes").get<int>()});
    if (sum.contains("wall_time")) f.wall_time = sum.at("wall_time").get<double>();
    return f;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  return guarded("JSON", [&] { return Json::parse(text); });
}

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_argument("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_argument("cannot write '" + path + "'");
  out << text;
}

}  // namespace schubert::io
