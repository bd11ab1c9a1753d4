// Copyright 2026 The qedr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qedr/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qedr/errors.hpp"
#include "qedr/operators.hpp"
#include "qedr/random.hpp"

namespace qedr {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

void check(ScenarioResult& r, std::string name, double expected, double actual) {
  r.checks.push_back({std::move(name), expected, actual, kGoldenTol});
}

void check_flag(ScenarioResult& r, const std::string& name, bool expected) {
  r.checks.push_back({name, expected ? 1.0 : 0.0, r.classifications.at(name) ? 1.0 : 0.0, 0.0});
}

void check_cells(ScenarioResult& r, const std::string& name, auto expected_cell) {
  const auto& d = r.distributions.at(name);
  for (std::size_t i = 0; i < d.u_values().size(); ++i) {
    for (std::size_t j = 0; j < d.v_values().size(); ++j) {
      const double u = d.u_values()[i], v = d.v_values()[j];
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s(%+g,%+g)", name.c_str(), u, v);
      check(r, buf, expected_cell(u, v), d.probability(i, j));
    }
  }
}

void add_classifications(ScenarioResult& r, const MeasurementModel& model, const Observable& b,
                         const QState& psi) {
  r.classifications["distributionally_nondisturbing"] =
      is_distributionally_nondisturbing(model, b, psi);
  const auto proper = is_properly_nondisturbing(model, b, psi);
  r.classifications["properly_nondisturbing"] = proper.verdict;
  r.classifications["condition_s"] = proper.s_holds;
  r.classifications["condition_w"] = proper.w_holds;
  r.classifications["projector_transfer"] = proper.projector_transfer_holds;
}

// Single qubit prepared in |0⟩ with a qubit probe and meter σ_z.
// Conditional weight at an eigenvalue known only up to rounding.
double near(const std::map<double, double>& m, double key) {
  for (const auto& [k, v] : m) {
    if (std::abs(k - key) <= cluster_threshold(std::abs(key))) return v;
  }
  throw InternalConsistencyError("eigenvalue " + std::to_string(key) + " missing from spectrum");
}

ScenarioResult qubit_baseline(const MeasurementModel& model, std::string label,
                              const std::string& dist_name) {
  ScenarioResult r;
  r.label = std::move(label);
  const QState psi = QState::basis(2, 0);
  const Observable sx(ops::sigma_x(), "sigma_x");
  const Observable sz(ops::sigma_z(), "sigma_z");
  const QState joint = model.initial_state(psi);

  const Observable b0 = lift_system(sx, model);
  const Observable bt = heisenberg(b0, model);
  auto mu = jpd(bt, b0, joint);
  const auto cond = conditional(mu, +1.0);
  const auto mu_tau = mu.marginal_u();
  const auto mu_0 = mu.marginal_v();

  r.quantities["eta_o_sigma_x"] = eta_o(model, sx, psi);
  r.quantities["epsilon_o_sigma_z"] = epsilon_o(model, sz, psi);
  r.quantities["delta_g_" + dist_name] = delta_g(mu);
  r.quantities["conditional_plus_given_plus"] = near(cond, +1.0);
  r.quantities["conditional_minus_given_plus"] = near(cond, -1.0);
  r.quantities["marginal_tau_plus"] = mu_tau.back().real();
  r.quantities["marginal_0_plus"] = mu_0.back().real();
  r.distributions.emplace(dist_name, std::move(mu));
  add_classifications(r, model, sx, psi);
  return r;
}

std::vector<std::size_t> pair_dims() { return {2, 2}; }

Observable on_qubit(const ComplexMatrix& op, std::size_t k, const char* label) {
  const auto dims = pair_dims();
  return Observable(on_factor(op, dims, k), label);
}

// Fills the quantities shared by every Bell-pair scenario.
void bell_common(ScenarioResult& r, const MeasurementModel& model) {
  const QState bell = QState::bell_phi_plus();
  const QState joint = model.initial_state(bell);
  const Observable x1_0 = lift_system(on_qubit(ops::sigma_x(), 0, "sigma_x^(1)"), model);
  const Observable x2_0 = lift_system(on_qubit(ops::sigma_x(), 1, "sigma_x^(2)"), model);
  const Observable x1_t = heisenberg(x1_0, model);
  const Observable x2_t = heisenberg(x2_0, model);
  auto mu_0 = jpd(x1_0, x2_0, joint);
  auto mu_tau = jpd(x1_t, x2_t, joint);

  const Observable b2 = on_qubit(ops::sigma_x(), 1, "sigma_x^(2)");
  const Observable a2 = on_qubit(ops::sigma_z(), 1, "sigma_z^(2)");
  const double eta = eta_o(model, b2, bell);
  r.quantities["eta_o"] = eta;
  r.quantities["epsilon_o"] = epsilon_o(model, a2, bell);
  r.quantities["delta_g_0"] = delta_g(mu_0);
  r.quantities["delta_g_tau"] = delta_g(mu_tau);
  const auto marg = mu_tau.marginal_v();
  r.quantities["marginal_v_minus"] = marg.front().real();
  r.quantities["marginal_v_plus"] = marg.back().real();
  r.distributions.emplace("mu_0", std::move(mu_0));
  r.distributions.emplace("mu_tau", std::move(mu_tau));
  add_classifications(r, model, b2, bell);

  const auto e91 = e91_analyze(model, r.label);
  r.quantities["p_ab"] = e91.p_ab;
  r.quantities["p_e"] = e91.p_e;
  r.quantities["p_e_optimal"] = e91.p_e_optimal;
  r.e91 = e91;
  const auto tight = branciard_tight(model, bell);
  r.quantities["branciard_lhs"] = tight.lhs;
  r.classifications["branciard_satisfied"] = tight.satisfied;
  r.inequalities.push_back(tight);
}

}  // namespace

bool ScenarioResult::all_checks_pass() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

ScenarioResult scenario_cnot() {
  const MeasurementModel model = projective_model(Observable(ops::sigma_z(), "sigma_z"), 2);
  ScenarioResult r = qubit_baseline(model, "cnot", "p2");
  r.model_summary =
      "system qubit in |0>, probe qubit in |0>, U = |0><0| x I + |1><1| x sigma_x, M = sigma_z";
  check(r, "eta_o_sigma_x", kSqrt2, r.quantities["eta_o_sigma_x"]);
  check(r, "epsilon_o_sigma_z", 0.0, r.quantities["epsilon_o_sigma_z"]);
  check(r, "delta_g_p2", kSqrt2, r.quantities["delta_g_p2"]);
  check_cells(r, "p2", [](double, double) { return 0.25; });
  check(r, "conditional_plus_given_plus", 0.5, r.quantities["conditional_plus_given_plus"]);
  check(r, "conditional_minus_given_plus", 0.5, r.quantities["conditional_minus_given_plus"]);
  check(r, "marginal_tau_plus", 0.5, r.quantities["marginal_tau_plus"]);
  check(r, "marginal_0_plus", 0.5, r.quantities["marginal_0_plus"]);
  check_flag(r, "distributionally_nondisturbing", true);
  check_flag(r, "properly_nondisturbing", false);
  return r;
}

ScenarioResult scenario_no_measurement() {
  const MeasurementModel model({2}, 2, QState::basis(2, 0), ComplexMatrix::identity(4),
                               Observable(ops::sigma_z(), "sigma_z"));
  ScenarioResult r = qubit_baseline(model, "no-measurement", "p1");
  r.model_summary = "system qubit in |0>, probe qubit in |0>, U = I, M = sigma_z";
  check(r, "eta_o_sigma_x", 0.0, r.quantities["eta_o_sigma_x"]);
  check(r, "delta_g_p1", 0.0, r.quantities["delta_g_p1"]);
  check_cells(r, "p1", [](double u, double v) { return (u > 0) == (v > 0) ? 0.5 : 0.0; });
  check_flag(r, "distributionally_nondisturbing", true);
  check_flag(r, "properly_nondisturbing", true);
  return r;
}

ScenarioResult scenario_bell_sigma_z() {
  const MeasurementModel model =
      projective_model(on_qubit(ops::sigma_z(), 1, "sigma_z^(2)"), 2, pair_dims());
  ScenarioResult r;
  r.label = "bell-sigma-z";
  r.model_summary =
      "qubit pair in (|00>+|11>)/sqrt(2), probe qubit in |0>, "
      "U = I x |0><0| x I + I x |1><1| x sigma_x, M = sigma_z";
  bell_common(r, model);

  const QState joint = model.initial_state(QState::bell_phi_plus());
  const Observable x1_0 = lift_system(on_qubit(ops::sigma_x(), 0, "sigma_x^(1)"), model);
  const Observable x2_0 = lift_system(on_qubit(ops::sigma_x(), 1, "sigma_x^(2)"), model);
  const Observable x1_t = heisenberg(x1_0, model);
  const Observable x2_t = heisenberg(x2_0, model);
  const std::vector<Observable> four = {x2_t, x1_t, x2_0, x1_0};
  auto four_point = joint_distribution(four, joint);
  four_point.labels = {"sigma_x^(2)(tau)", "sigma_x^(1)(tau)", "sigma_x^(2)(0)",
                       "sigma_x^(1)(0)"};
  const auto cond = conditional(jpd(x2_t, x2_0, joint), +1.0);
  r.quantities["conditional_v_prime_given_v"] = near(cond, +1.0);

  check(r, "delta_g_0", 0.0, r.quantities["delta_g_0"]);
  check(r, "delta_g_tau", kSqrt2, r.quantities["delta_g_tau"]);
  check(r, "eta_o", kSqrt2, r.quantities["eta_o"]);
  check(r, "conditional_v_prime_given_v", 0.5, r.quantities["conditional_v_prime_given_v"]);
  check_cells(r, "mu_0", [](double u, double v) { return (u > 0) == (v > 0) ? 0.5 : 0.0; });
  check_cells(r, "mu_tau", [](double, double) { return 0.25; });
  for (double vp : {-1.0, 1.0}) {
    for (double up : {-1.0, 1.0}) {
      for (double v : {-1.0, 1.0}) {
        for (double u : {-1.0, 1.0}) {
          const double vals[] = {vp, up, v, u};
          const double expected = ((u > 0) == (v > 0) && (u > 0) == (up > 0)) ? 0.25 : 0.0;
          char buf[64];
          std::snprintf(buf, sizeof buf, "four_point(%+g,%+g,%+g,%+g)", vp, up, v, u);
          check(r, buf, expected, four_point.at_values(vals));
        }
      }
    }
  }
  r.multi_distributions.emplace("four_point", std::move(four_point));
  check_flag(r, "distributionally_nondisturbing", true);
  check_flag(r, "properly_nondisturbing", false);
  return r;
}

ScenarioResult scenario_bell_sigma_theta(double theta) {
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
    throw PreconditionError("theta must lie in [0, pi/2)");
  }
  const Observable a = on_qubit(ops::sigma_theta(theta), 1, "sigma_theta^(2)");
  const MeasurementModel model = projective_model(a, 2, pair_dims());
  ScenarioResult r;
  r.label = "bell-sigma-theta";
  r.model_summary =
      "qubit pair in (|00>+|11>)/sqrt(2), probe qubit in |0>, U = I x P^{sigma_theta}(+1) x I + "
      "I x P^{sigma_theta}(-1) x sigma_x, M = sigma_z";
  r.quantities["theta"] = theta;
  bell_common(r, model);
  if (r.e91) r.e91->theta = theta;
  const QState bell = QState::bell_phi_plus();
  r.quantities["eta_commutator"] =
      eta_projective_commutator(a, on_qubit(ops::sigma_x(), 1, "sigma_x^(2)"), bell);

  const double c = std::cos(theta), s = std::sin(theta);
  check(r, "eta_o", kSqrt2 * c, r.quantities["eta_o"]);
  check(r, "delta_g_tau", kSqrt2 * c, r.quantities["delta_g_tau"]);
  check(r, "delta_g_0", 0.0, r.quantities["delta_g_0"]);
  check(r, "eta_commutator", r.quantities["eta_o"], r.quantities["eta_commutator"]);
  check(r, "marginal_v_plus", 0.5, r.quantities["marginal_v_plus"]);
  check(r, "marginal_v_minus", 0.5, r.quantities["marginal_v_minus"]);
  check_cells(r, "mu_tau", [&](double u, double v) {
    return (u > 0) == (v > 0) ? 0.25 * (1.0 + s * s) : 0.25 * c * c;
  });
  check(r, "p_ab", 0.5 * c * c, r.quantities["p_ab"]);
  check_flag(r, "distributionally_nondisturbing", true);
  check_flag(r, "branciard_satisfied", true);
  return r;
}

ScenarioResult scenario_local(const ComplexMatrix& local_unitary, std::string label) {
  const MeasurementModel model = local_model(pair_dims(), 1, local_unitary, QState::basis(2, 0),
                                             Observable(ops::sigma_z(), "sigma_z"));
  ScenarioResult r;
  r.label = std::move(label);
  r.model_summary =
      "qubit pair in (|00>+|11>)/sqrt(2), probe qubit in |0>, U = I x U_local, M = sigma_z";
  bell_common(r, model);
  const double d0 = r.quantities["delta_g_0"];
  const double dt = r.quantities["delta_g_tau"];
  r.quantities["sandwich_lower"] = std::abs(dt - d0);
  r.quantities["sandwich_upper"] = dt + d0;
  const double eta = r.quantities["eta_o"];
  r.classifications["sandwich_holds"] =
      r.quantities["sandwich_lower"] <= eta + kGoldenTol && eta <= dt + d0 + kGoldenTol;
  check(r, "delta_g_0", 0.0, d0);
  check(r, "delta_g_tau", eta, dt);
  check_flag(r, "sandwich_holds", true);
  return r;
}

ScenarioResult scenario_random_local(std::uint64_t seed) {
  Rng rng = case_rng(seed, 0);
  return scenario_local(haar_unitary(4, rng), "random-local");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"cnot", "no-measurement", "bell-sigma-z",
                                                 "bell-sigma-theta", "random-local"};
  return names;
}

ScenarioResult run_scenario(const std::string& name, std::optional<double> theta,
                            std::optional<std::uint64_t> seed) {
  if (name == "cnot") return scenario_cnot();
  if (name == "no-measurement") return scenario_no_measurement();
  if (name == "bell-sigma-z") return scenario_bell_sigma_z();
  if (name == "bell-sigma-theta") {
    return scenario_bell_sigma_theta(theta.value_or(std::numbers::pi / 4));
  }
  if (name == "random-local") return scenario_random_local(seed.value_or(0));
  throw PreconditionError("unknown scenario '" + name + "'");
}

}  // namespace qedr
