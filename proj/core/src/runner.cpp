#include "parsfm/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "parsfm/augmenting_sets.hpp"
#include "parsfm/brute_force.hpp"
#include "parsfm/generators.hpp"

namespace parsfm {

namespace {

SfmResult dispatch(const SubmodularInstance& instance, const RunSpec& spec,
                   OracleLedger& ledger) {
  if (spec.solver == "augmenting-sets") {
    return augmenting_sets(instance, ledger, nullptr, spec.memoize);
  }
  if (spec.solver == "brute-force") {
    return exhaustive_one_round(instance, ledger, spec.memoize);
  }
  if (spec.solver == "sublinear") {
    SublinearConfig config;
    config.eps = spec.eps;
    config.max_attempts = spec.max_attempts;
    config.memoize = spec.memoize;
    config.solver = spec.solver_config;
    config.solver.seed = spec.seed;
    return sublinear_sfm(instance, ledger, config);
  }
  if (spec.solver == "approx") {
    ApproxConfig config;
    config.eps = spec.eps;
    config.value_scale = spec.value_scale;
    config.memoize = spec.memoize;
    config.solver = spec.solver_config;
    config.solver.seed = spec.seed;
    return approx_sfm(instance, ledger, config);
  }
  throw std::invalid_argument("unknown solver '" + spec.solver +
                              "' (expected augmenting-sets, sublinear, approx, "
                              "or brute-force)");
}

}  // namespace

ReportRow run_solver(const SubmodularInstance& instance, const RunSpec& spec) {
  OracleLedger ledger;
  const auto start = std::chrono::steady_clock::now();
  const SfmResult result = dispatch(instance, spec, ledger);
  const auto finish = std::chrono::steady_clock::now();

  ReportRow row;
  row.instance_id = instance.id();
  row.n = instance.n();
  row.m = instance.range_bound();
  row.solver = spec.solver;
  row.min_found = result.value;
  row.rounds = ledger.rounds;
  row.queries = ledger.total_queries;
  row.wall_ms = std::chrono::duration<double, std::milli>(finish - start).count();
  row.seed = spec.seed;
  if (spec.verify && instance.n() <= 24) {
    row.min_brute = brute_force_sfm(instance).min_value;
  }
  return row;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const ReportRow& row : rows) {
    out << row.instance_id << ',' << row.n << ',' << row.m << ',' << row.solver
        << ',' << row.min_found << ',';
    if (row.min_brute) out << *row.min_brute;
    out << ',' << row.rounds << ',' << row.queries << ',';
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", row.wall_ms);
    out << wall << ',' << row.seed << '\n';
  }
  return out.str();
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["rows"] = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json r;
    r["instance_id"] = row.instance_id;
    r["n"] = row.n;
    r["M"] = row.m;
    r["solver"] = row.solver;
    r["min_found"] = row.min_found;
    if (row.min_brute) {
      r["min_brute"] = *row.min_brute;
    } else {
      r["min_brute"] = nullptr;
    }
    r["rounds"] = row.rounds;
    r["queries"] = row.queries;
    r["wall_ms"] = row.wall_ms;
    r["seed"] = row.seed;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2);
}

SubmodularInstance instance_from_spec(const std::string& spec, std::uint64_t seed) {
  std::vector<std::string> tokens;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) tokens.push_back(token);
  if (tokens.empty()) throw std::invalid_argument("empty instance spec");

  const std::string kind = tokens[0];
  int n = 8;
  std::int64_t m = 2;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::size_t eq = tokens[i].find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("bad instance spec field '" + tokens[i] +
                                  "' (expected n=... or M=...)");
    }
    const std::string key = tokens[i].substr(0, eq);
    const std::string value = tokens[i].substr(eq + 1);
    if (key == "n") {
      n = std::stoi(value);
    } else if (key == "M" || key == "m") {
      m = std::stoll(value);
    } else {
      throw std::invalid_argument("unknown instance spec field '" + key + "'");
    }
  }

  if (kind == "zero") {
    return make_instance(InstanceKind::kGraphCut, n, GraphCutPayload{});
  }
  return random_instance(kind_from_name(kind), n, m, seed);
}

SweepResult sweep(const SweepSpec& spec) {
  struct Task {
    InstanceKind kind;
    int n;
    std::int64_t m;
    RunSpec run;
  };
  std::vector<Task> tasks;
  for (const std::string& solver : spec.solvers) {
    for (const std::string& kind : spec.kinds) {
      for (const int n : spec.ns) {
        for (const std::int64_t m : spec.ms) {
          for (const std::uint64_t seed : spec.seeds) {
            RunSpec run = spec.base;
            run.solver = solver;
            run.seed = seed;
            tasks.push_back(Task{kind_from_name(kind), n, m, run});
          }
        }
      }
    }
  }

  SweepResult result;
  result.rows.resize(tasks.size());
  const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        const Task& task = tasks[i];
        const SubmodularInstance instance =
            random_instance(task.kind, task.n, task.m, task.run.seed);
        result.rows[i] = run_solver(instance, task.run);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(tasks.size());  // drain remaining work
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Fit log(mean rounds) ~ slope * log(n) + intercept per solver.
  for (const std::string& solver : spec.solvers) {
    std::map<int, std::pair<double, int>> by_n;  // n -> (rounds sum, count)
    for (const ReportRow& row : result.rows) {
      if (row.solver != solver) continue;
      auto& acc = by_n[row.n];
      acc.first += static_cast<double>(row.rounds);
      acc.second += 1;
    }
    if (by_n.size() < 2) continue;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    bool usable = true;
    for (const auto& [n, acc] : by_n) {
      const double mean = acc.first / acc.second;
      if (mean <= 0) {
        usable = false;
        break;
      }
      const double lx = std::log(static_cast<double>(n));
      const double ly = std::log(mean);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++count;
    }
    if (!usable) continue;
    const double denom = count * sxx - sx * sx;
    if (denom <= 0) continue;
    result.round_exponent[solver] = (count * sxy - sx * sy) / denom;
  }
  return result;
}

std::string sweep_to_json(const SweepResult& result) {
  nlohmann::json doc = nlohmann::json::parse(rows_to_json(result.rows));
  doc["round_exponent"] = nlohmann::json::object();
  for (const auto& [solver, slope] : result.round_exponent) {
    doc["round_exponent"][solver] = slope;
  }
  return doc.dump(2);
}

}  // namespace parsfm
