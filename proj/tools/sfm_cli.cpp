// Command line front end: run one solver on one instance, or sweep a grid of
// generated instances and report round/query growth.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "parsfm/instance_io.hpp"
#include "parsfm/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel submodular minimization runner"};
  app.require_subcommand(1);

  // run: one instance, one solver, one report row.
  auto* run_cmd = app.add_subcommand("run", "solve a single instance");
  std::string instance_path;
  std::string gen_spec;
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  parsfm::RunSpec spec;
  bool no_verify = false;
  run_cmd->add_option("--instance", instance_path, "instance JSON file");
  run_cmd->add_option("--gen", gen_spec,
                      "generator spec, e.g. cut-minus-modular,n=10,M=2");
  run_cmd->add_option("--solver", spec.solver,
                      "augmenting-sets | sublinear | approx | brute-force")
      ->capture_default_str();
  run_cmd->add_option("--eps", spec.eps, "accuracy target (0 = solver default)");
  run_cmd->add_option("--seed", spec.seed, "seed for generator and solver")
      ->capture_default_str();
  run_cmd->add_flag("--no-verify", no_verify,
                    "skip the offline exhaustive cross-check");
  run_cmd->add_flag("--memoize", spec.memoize,
                    "answer repeated subsets from cache (accounting unchanged)");
  run_cmd->add_option("--scale", spec.value_scale,
                      "instance units per integer value (approx solver)");
  run_cmd->add_option("--attempts", spec.max_attempts,
                      "independent solves for the sublinear solver")
      ->capture_default_str();
  run_cmd->add_option("--config", config_path, "solver knobs as JSON");
  run_cmd->add_option("--out", out_path, "output file ('-' = stdout)");
  run_cmd->add_option("--format", format, "csv | json")->capture_default_str();

  // sweep: full grid of generated instances.
  auto* sweep_cmd = app.add_subcommand("sweep", "run a solver grid");
  parsfm::SweepSpec grid;
  std::string sweep_config_path;
  std::string sweep_out_path;
  std::string sweep_format = "csv";
  bool sweep_no_verify = false;
  sweep_cmd->add_option("--kind", grid.kinds, "instance kinds")
      ->capture_default_str();
  sweep_cmd->add_option("--n", grid.ns, "ground set sizes")->capture_default_str();
  sweep_cmd->add_option("--M", grid.ms, "range bound targets")
      ->capture_default_str();
  sweep_cmd->add_option("--seeds", grid.seeds, "generator/solver seeds")
      ->capture_default_str();
  sweep_cmd->add_option("--solver", grid.solvers, "solvers to compare")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", grid.jobs, "worker threads")
      ->capture_default_str();
  sweep_cmd->add_option("--eps", grid.base.eps, "accuracy target (0 = default)");
  sweep_cmd->add_flag("--no-verify", sweep_no_verify,
                      "skip the offline exhaustive cross-check");
  sweep_cmd->add_flag("--memoize", grid.base.memoize, "cache repeated subsets");
  sweep_cmd->add_option("--attempts", grid.base.max_attempts,
                        "independent solves for the sublinear solver");
  sweep_cmd->add_option("--config", sweep_config_path, "solver knobs as JSON");
  sweep_cmd->add_option("--out", sweep_out_path, "output file ('-' = stdout)");
  sweep_cmd->add_option("--format", sweep_format, "csv | json")
      ->capture_default_str();

  // gen: write a generated instance to disk for later runs.
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  std::string gen_gen_spec = "cut-minus-modular,n=8,M=2";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen_cmd->add_option("--gen", gen_gen_spec, "generator spec")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "output file ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      if (instance_path.empty() == gen_spec.empty()) {
        std::cerr << "run needs exactly one of --instance or --gen\n";
        return 2;
      }
      if (format != "csv" && format != "json") {
        std::cerr << "unknown format '" << format << "'\n";
        return 2;
      }
      spec.verify = !no_verify;
      if (!config_path.empty()) {
        spec.solver_config = parsfm::SolverConfig::from_json(slurp(config_path));
      }
      const parsfm::SubmodularInstance instance =
          instance_path.empty() ? parsfm::instance_from_spec(gen_spec, spec.seed)
                                : parsfm::load_instance(instance_path);
      const std::vector<parsfm::ReportRow> rows = {
          parsfm::run_solver(instance, spec)};
      emit(format == "csv" ? parsfm::rows_to_csv(rows) : parsfm::rows_to_json(rows),
           out_path);
      if (rows[0].min_brute && *rows[0].min_brute != rows[0].min_found) {
        std::cerr << "MISMATCH: solver found " << rows[0].min_found
                  << " but the exhaustive check says " << *rows[0].min_brute << '\n';
        return 1;
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      if (sweep_format != "csv" && sweep_format != "json") {
        std::cerr << "unknown format '" << sweep_format << "'\n";
        return 2;
      }
      grid.base.verify = !sweep_no_verify;
      if (!sweep_config_path.empty()) {
        grid.base.solver_config =
            parsfm::SolverConfig::from_json(slurp(sweep_config_path));
      }
      const parsfm::SweepResult result = parsfm::sweep(grid);
      emit(sweep_format == "csv" ? parsfm::rows_to_csv(result.rows)
                                 : parsfm::sweep_to_json(result),
           sweep_out_path);
      for (const auto& [solver, slope] : result.round_exponent) {
        std::cerr << "# " << solver << ": rounds ~ n^" << slope << '\n';
      }
      int mismatches = 0;
      for (const parsfm::ReportRow& row : result.rows) {
        if (row.min_brute && *row.min_brute != row.min_found) {
          std::cerr << "MISMATCH on " << row.instance_id << " (" << row.solver
                    << "): " << row.min_found << " vs " << *row.min_brute << '\n';
          ++mismatches;
        }
      }
      return mismatches == 0 ? 0 : 1;
    }

    if (gen_cmd->parsed()) {
      const parsfm::SubmodularInstance instance =
          parsfm::instance_from_spec(gen_gen_spec, gen_seed);
      emit(parsfm::instance_to_json(instance), gen_out);
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 2;
}
