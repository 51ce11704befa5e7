#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parsfm/convex_sfm.hpp"
#include "parsfm/instance.hpp"

namespace parsfm {

// Solver names accepted by run_solver and the CLI.
inline constexpr const char* kSolverNames[] = {"augmenting-sets", "sublinear",
                                               "approx", "brute-force"};

struct RunSpec {
  std::string solver = "augmenting-sets";
  double eps = 0.0;          // 0 picks the solver's own default
  std::uint64_t seed = 1;
  bool verify = true;        // offline exhaustive cross-check, skipped for n > 24
  bool memoize = false;
  double value_scale = 1.0;  // approx solver only
  int max_attempts = 3;      // sublinear solver only
  SolverConfig solver_config;
};

struct ReportRow {
  std::string instance_id;
  int n = 0;
  std::int64_t m = 1;
  std::string solver;
  std::int64_t min_found = 0;
  std::optional<std::int64_t> min_brute;  // empty when verification was skipped
  std::int64_t rounds = 0;
  std::int64_t queries = 0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kReportCsvHeader =
    "instance_id,n,M,solver,min_found,min_brute,rounds,queries,wall_ms,seed";

ReportRow run_solver(const SubmodularInstance& instance, const RunSpec& spec);

std::string rows_to_csv(const std::vector<ReportRow>& rows);
// {"schema_version": 1, "rows": [...]}; min_brute is null when skipped.
std::string rows_to_json(const std::vector<ReportRow>& rows);

// Generator shorthand "kind,n=10,M=2" (fields optional, defaults n=8, M=2).
// Kind "zero" is the edgeless graph cut, f identically 0.
SubmodularInstance instance_from_spec(const std::string& spec, std::uint64_t seed);

struct SweepSpec {
  std::vector<std::string> kinds = {"cut-minus-modular"};
  std::vector<int> ns = {6, 8, 10};
  std::vector<std::int64_t> ms = {2};
  std::vector<std::uint64_t> seeds = {1};
  std::vector<std::string> solvers = {"augmenting-sets"};
  int jobs = 1;  // worker threads; row order is grid order either way
  RunSpec base;  // solver field ignored; the solvers list drives the grid
};

struct SweepResult {
  std::vector<ReportRow> rows;
  // Least-squares slope of log(mean rounds) against log(n) per solver;
  // present only when the grid covers at least two ground set sizes.
  std::map<std::string, double> round_exponent;
};

SweepResult sweep(const SweepSpec& spec);
// {"schema_version": 1, "rows": [...], "round_exponent": {...}}
std::string sweep_to_json(const SweepResult& result);

}  // namespace parsfm
