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

// Executable reproductions of the worked measurement examples: the
// controlled-NOT measurement of σ_z, the no-measurement baseline, and
// measurements on one half of a Bell pair. Each scenario builds its own
// model and records its quantities together with reference checks.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qedr/edr.hpp"
#include "qedr/measures.hpp"

namespace qedr {

inline constexpr double kGoldenTol = 1e-9;

struct GoldenCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = kGoldenTol;
  bool passed() const { return std::abs(expected - actual) <= tolerance; }
};

struct ScenarioResult {
  std::string label;
  std::string model_summary;
  std::map<std::string, double> quantities;
  std::map<std::string, JointDistribution> distributions;
  std::map<std::string, MultiDistribution> multi_distributions;
  std::map<std::string, bool> classifications;
  std::vector<InequalityRecord> inequalities;
  std::optional<E91Report> e91;
  std::vector<GoldenCheck> checks;

  bool all_checks_pass() const;
};

/// Projective σ_z measurement of a qubit in |0⟩ via controlled-NOT.
/// Quantities: eta_o_sigma_x, epsilon_o_sigma_z, delta_g_p2,
/// conditional_plus_given_plus, conditional_minus_given_plus,
/// marginal_tau_plus, marginal_0_plus. Distribution: p2 (σ_x(τ), σ_x(0)).
ScenarioResult scenario_cnot();

/// Same preparation, no interaction. Quantities: eta_o_sigma_x, delta_g_p1.
/// Distribution: p1.
ScenarioResult scenario_no_measurement();

/// Projective σ_z⁽²⁾ on (|00⟩+|11⟩)/√2. Quantities: delta_g_0, delta_g_tau,
/// eta_o, epsilon_o, conditional_v_prime_given_v. Distributions: mu_0,
/// mu_tau; multi-distribution four_point over
/// (σ_x⁽²⁾(τ), σ_x⁽¹⁾(τ), σ_x⁽²⁾(0), σ_x⁽¹⁾(0)).
ScenarioResult scenario_bell_sigma_z();

/// Projective σ_θ⁽²⁾ = cosθ σ_z + sinθ σ_x on the second qubit, 0 ≤ θ < π/2.
/// Quantities: theta, eta_o, eta_commutator, epsilon_o, delta_g_0,
/// delta_g_tau, marginal_v_plus, marginal_v_minus, p_ab, p_e, p_e_optimal,
/// branciard_lhs. Throws PreconditionError outside the range.
ScenarioResult scenario_bell_sigma_theta(double theta);

/// Local measurement of the second qubit of the Bell pair through
/// `local_unitary` on (qubit 2) ⊗ (qubit probe in |0⟩), meter σ_z.
/// Quantities: delta_g_0, delta_g_tau, eta_o, epsilon_o, sandwich_lower,
/// sandwich_upper, p_ab, p_e, p_e_optimal, branciard_lhs.
ScenarioResult scenario_local(const ComplexMatrix& local_unitary, std::string label);

/// scenario_local with a Haar-random 4×4 interaction drawn from `seed`.
ScenarioResult scenario_random_local(std::uint64_t seed);

/// Names accepted by run_scenario.
const std::vector<std::string>& scenario_names();

/// Dispatches by name; theta applies to bell-sigma-theta (default π/4) and
/// seed to random-local (default 0). PreconditionError on unknown names.
ScenarioResult run_scenario(const std::string& name, std::optional<double> theta = {},
                            std::optional<std::uint64_t> seed = {});

}  // namespace qedr
