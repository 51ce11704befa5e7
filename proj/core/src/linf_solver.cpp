#include "parsfm/linf_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "parsfm/regularize.hpp"
#include "parsfm/smoothing.hpp"

namespace parsfm {

std::string SolverConfig::to_json() const {
  nlohmann::json j;
  j["C"] = C;
  j["C_prime"] = C_prime;
  j["c0"] = c0;
  j["batch_size"] = batch_size;
  j["target_rounds_per_call"] = target_rounds_per_call;
  j["max_outer_iters"] = max_outer_iters;
  j["plateau_window"] = plateau_window;
  if (rho_override) j["rho_override"] = *rho_override;
  if (L) j["L"] = *L;
  if (R) j["R"] = *R;
  if (eps) j["eps"] = *eps;
  j["seed"] = seed;
  return j.dump(2);
}

SolverConfig SolverConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SolverConfig cfg;
  cfg.C = j.value("C", cfg.C);
  cfg.C_prime = j.value("C_prime", cfg.C_prime);
  cfg.c0 = j.value("c0", cfg.c0);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.target_rounds_per_call = j.value("target_rounds_per_call", cfg.target_rounds_per_call);
  cfg.max_outer_iters = j.value("max_outer_iters", cfg.max_outer_iters);
  cfg.plateau_window = j.value("plateau_window", cfg.plateau_window);
  if (j.contains("rho_override")) cfg.rho_override = j["rho_override"].get<double>();
  if (j.contains("L")) cfg.L = j["L"].get<double>();
  if (j.contains("R")) cfg.R = j["R"].get<double>();
  if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
  cfg.seed = j.value("seed", cfg.seed);
  return cfg;
}

AccelParams linf_accel_plan(int n, double lipschitz, double radius, double eps,
                            const SolverConfig& config) {
  const double eps_opt = eps / 2.0;
  const double rho = config.rho_override.value_or(
      eps_opt / (lipschitz * std::sqrt(2.0 * std::log(std::max(n, 2)))));

  AccelParams accel;
  accel.lipschitz = 3.0 * lipschitz;
  accel.radius = 3.0 * radius;
  accel.ball_radius = std::min(rho, accel.radius);
  accel.eps_opt = eps_opt;
  accel.C = config.C;
  accel.C_prime = config.C_prime;
  accel.c0 = config.c0;
  accel.batch_size = config.batch_size;
  accel.target_rounds_per_call = config.target_rounds_per_call;
  accel.max_outer_iters = config.max_outer_iters;
  accel.plateau_window = config.plateau_window;
  return accel;
}

LinfSolveResult solve_linf_unconstrained(FirstOrderOracle& oracle, double radius,
                                         double eps, const SolverConfig& config,
                                         Rng& rng) {
  radius = config.R.value_or(radius);
  eps = config.eps.value_or(eps);
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");

  const int n = oracle.dim();
  const double lipschitz = config.L.value_or(oracle.lipschitz());

  LinfSolveResult result;
  if (eps >= lipschitz * radius) {
    // any point of the ball is eps-optimal already
    result.x = Eigen::VectorXd::Zero(n);
    result.stop_reason = "trivial";
    return result;
  }

  const AccelParams accel = linf_accel_plan(n, lipschitz, radius, eps, config);
  const double rho = accel.ball_radius;

  RegularizedOracle regularized(oracle, Eigen::VectorXd::Zero(n), radius, Norm::kL2);
  SmoothedOracle smoothed(regularized, rho);

  AccelResult accel_result =
      ball_accel(smoothed, Eigen::VectorXd::Zero(n), accel, rng);

  result.x = accel_result.x;
  if (result.x.norm() > radius) {
    result.x = project_to_ball(result.x, Eigen::VectorXd::Zero(n), radius, Norm::kL2);
  }
  result.outer_iters = accel_result.outer_iters;
  result.ball_calls = accel_result.ball_calls;
  result.stop_reason = accel_result.stop_reason;
  return result;
}

LinfSolveResult solve_linf_box_constrained(FirstOrderOracle& oracle, double eps,
                                           const SolverConfig& config, Rng& rng) {
  const int n = oracle.dim();
  RegularizedOracle regularized(oracle, Eigen::VectorXd::Zero(n), 1.0, Norm::kLinf);
  LinfSolveResult result =
      solve_linf_unconstrained(regularized, std::sqrt(static_cast<double>(n)), eps,
                               config, rng);
  if (result.x.lpNorm<Eigen::Infinity>() > 1.0) {
    result.x = project_to_ball(result.x, Eigen::VectorXd::Zero(n), 1.0, Norm::kLinf);
  }
  return result;
}

}  // namespace parsfm
