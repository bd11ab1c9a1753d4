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

// Error-disturbance inequalities and the entanglement-based key
// distribution tradeoff.
//
// Every inequality evaluation produces an InequalityRecord. A violated
// Heisenberg product relation is an ordinary result; violations of the
// Robertson relation or of the universally valid relation beyond 1e-9 are
// impossible for correct arithmetic and raise InternalConsistencyError.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qedr/measures.hpp"
#include "qedr/model.hpp"

namespace qedr {

inline constexpr double kInequalityTol = 1e-9;

enum class Relation { kGreaterEqual, kLessEqual };

struct InequalityRecord {
  std::string name;
  Relation relation = Relation::kGreaterEqual;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
  double margin = 0.0;  // lhs − rhs
};

/// Builds a record with margin and satisfaction computed from lhs, rhs and
/// the relation, at tolerance kInequalityTol.
InequalityRecord make_record(std::string name, Relation relation, double lhs, double rhs);

struct EDRReport {
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  double commutator_bound = 0.0;  // ½|⟨ψ|[A,B]|ψ⟩|
  std::vector<InequalityRecord> inequalities;
};

/// ½|⟨ψ|[A,B]|ψ⟩|.
double commutator_bound(const Observable& a, const Observable& b, const QState& psi);

/// σ(A)σ(B) ≥ ½|⟨[A,B]⟩|.
InequalityRecord robertson(const Observable& a, const Observable& b, const QState& psi);

/// ε_O(A)·η_O(B) ≥ ½|⟨[A,B]⟩|; may be violated.
InequalityRecord heisenberg_product(const MeasurementModel& model, const Observable& a,
                                    const Observable& b, const QState& psi);

/// εη + εσ(B) + σ(A)η ≥ ½|⟨[A,B]⟩|.
InequalityRecord universal_relation(const MeasurementModel& model, const Observable& a,
                                 const Observable& b, const QState& psi);

/// η_O(B) ≥ |⟨[A,B]⟩| / (2σ(A)) for a zero-error measurement of A.
/// PreconditionError if ε_O(A) > 1e-8 or σ(A) ≤ 1e-8.
InequalityRecord znzd_bound(const MeasurementModel& model, const Observable& a,
                            const Observable& b, const QState& psi);

/// (ε_O(σ_z⁽²⁾)² − 2)² + (η_O(σ_x⁽²⁾)² − 2)² ≤ 4 for a model on a qubit pair in
/// (|00⟩+|11⟩)/√2. PreconditionError if the model or state does not match.
InequalityRecord branciard_tight(const MeasurementModel& model, const QState& psi);

/// All inequalities that apply to (model, A, B, ψ). The ZNZD record is
/// included only when its precondition holds.
EDRReport edr_report(const MeasurementModel& model, const Observable& a, const Observable& b,
                     const QState& psi);

struct E91Report {
  std::optional<double> theta;
  std::string label;
  double p_ab = 0.0;         // δ_G(μ_τ)²/4
  double p_e = 0.0;          // ε_O(σ_z⁽²⁾)²/4
  double p_e_optimal = 0.0;  // optimal eavesdropper error at this p_ab
  double eta_key = 0.0;      // η_O(σ_x⁽²⁾)
  double epsilon_eve = 0.0;  // ε_O(σ_z⁽²⁾)
  double delta_g_tau = 0.0;  // δ_G of (σ_x⁽¹⁾(τ), σ_x⁽²⁾(τ))
};

/// ½ − √(¼ − (p_ab − ½)²) with the radicand floored at 0.
double e91_optimal_error(double p_ab);

/// Eavesdropping by `model` on the second qubit of (|00⟩+|11⟩)/√2.
/// PreconditionError if the system is not a qubit pair or the interaction
/// touches the first qubit.
E91Report e91_analyze(const MeasurementModel& model, std::string label = {},
                      std::optional<double> theta = {});

}  // namespace qedr
