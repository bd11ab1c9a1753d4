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

// Randomized audits of the universal inequalities and the structural
// theorems relating disturbance, joint distributions and locality.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qedr/model.hpp"
#include "qedr/random.hpp"

namespace qedr {

/// A model together with the observables and system state under test.
struct AuditCase {
  MeasurementModel model;
  Observable a;
  Observable b;
  QState psi;
  std::string kind;
};

/// Qubit system, qubit probe: Haar interaction, random probe state, random
/// Hermitian meter, random Hermitian A and B, random ψ.
AuditCase random_two_qubit_case(Rng& rng);

/// Case generator for the equivalence of the non-disturbance conditions.
/// Cycles through four constructions by `index`:
///   0 generic: Haar interaction (system dim 2 or 3, probe dim 2 or 3);
///   1 controlled: U = Σ_b P^B(b) ⊗ V_b, so B(τ) = B(0);
///   2 state-dependent: U fixes K ⊗ |ξ⟩ for a B-invariant subspace K ∋ ψ
///     but acts as Haar on the complement, so B(τ) ≠ B(0) while
///     P^{B(τ)}(u)|ψ,ξ⟩ = P^{B(0)}(u)|ψ,ξ⟩;
///   3 generic with a dichotomic B.
AuditCase random_nondisturbance_case(Rng& rng, std::size_t index);

/// Qutrit system with a qubit or qutrit probe, random B with three distinct
/// eigenvalues, Haar interaction, random meter and ψ.
AuditCase random_qutrit_case(Rng& rng);

/// Haar-random local interaction on (qubit 2) ⊗ probe qubit, probe |0⟩ and a
/// random ±1-valued meter.
MeasurementModel random_bell_local_model(Rng& rng);

struct AuditProperty {
  std::string name;
  bool universal = true;  // failure makes the audit fail
  std::size_t cases = 0;
  std::size_t passed = 0;
  double worst = 0.0;  // worst margin (≥ 0 is good) or worst deviation, see `metric`
  std::string metric;

  bool ok() const { return passed == cases; }
};

struct AuditSummary {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<AuditProperty> properties;

  bool all_pass() const;
};

/// Runs `n` randomized cases per property with per-case seeds derived from
/// `seed`. Properties: robertson, universal_relation, heisenberg_witness (one fixed case),
/// condition_equivalence, soundness, dichotomic_completeness, wjd_identity,
/// cp_consistency, local_sandwich, local_equality, dominating, conservation,
/// e91_optimality, local_jpd_invariance, local_product_nondisturbance.
AuditSummary run_audit(std::uint64_t seed, std::size_t n);

}  // namespace qedr
