#pragma once

// JSON files for problems and solution sets. Complex numbers are [re, im];
// output is deterministic (fixed key order, shortest round-trip doubles).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/problem.hpp"

namespace schubert::io {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
/// Rows of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);

Json problem_to_json(const ProblemInstance& problem);
/// Throws InvalidArgument on malformed files or inconsistent dimensions.
ProblemInstance problem_from_json(const Json& j);

struct SolutionRecord {
  ComplexMatrix matrix;
  std::vector<Complex> plucker;
  std::vector<double> residuals;
  PathInfo path;
};

struct SolutionFile {
  std::string solver;
  std::uint64_t seed = 0;
  double gamma_theta = 0.0;
  int m = 0, p = 0;
  std::string chart;
  std::vector<SolutionRecord> solutions;
  std::vector<StageReport> stages;
  int restarts = 0;
  int failed_paths = 0;
  std::size_t count = 0;
  std::string expected;  // decimal, exact
  double max_residual = 0.0;
  std::optional<double> wall_time;

  std::vector<ComplexMatrix> matrices() const;
};

SolutionFile to_file(const SolutionSet& set, bool with_timing = false);
Json solutions_to_json(const SolutionFile& f);
SolutionFile solutions_from_json(const Json& j);

std::string dump(const Json& j);
Json parse(const std::string& text);
std::string read_text(const std::string& path);  // "-" reads standard input
void write_text(const std::string& path, const std::string& text);  // "-" writes standard output

}  // namespace schubert::io
