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

// Operator-based error and disturbance, joint and weak joint distributions,
// and the non-disturbance classifications built on them.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qedr/linalg.hpp"
#include "qedr/model.hpp"

namespace qedr {

/// Default absolute tolerance for boolean classifications.
inline constexpr double kClassifyTol = 1e-7;

enum class DistributionKind { kJpd, kWjd };

std::string to_string(DistributionKind kind);

/// Weights over pairs of eigenvalues (u, v). A JPD is a genuine probability
/// distribution; a WJD may carry negative or complex weights but still sums
/// to one.
class JointDistribution {
 public:
  /// Validates the kind invariants: weights shape u×v, total 1 within 1e-9,
  /// and for a JPD real weights that are ≥ −1e-10. Throws InvariantError.
  JointDistribution(DistributionKind kind, std::vector<double> u_values,
                    std::vector<double> v_values, std::vector<std::vector<Complex>> weights);

  DistributionKind kind() const { return kind_; }
  const std::vector<double>& u_values() const { return u_; }
  const std::vector<double>& v_values() const { return v_; }
  const std::vector<std::vector<Complex>>& weights() const { return w_; }
  Complex weight(std::size_t ui, std::size_t vi) const { return w_[ui][vi]; }
  /// Real part of the weight; for a JPD this is the probability.
  double probability(std::size_t ui, std::size_t vi) const { return w_[ui][vi].real(); }

  /// Σ_v weight(u, v) for each u.
  std::vector<Complex> marginal_u() const;
  /// Σ_u weight(u, v) for each v.
  std::vector<Complex> marginal_v() const;
  Complex total() const;

  /// Largest |weight(u, v)| over pairs with u ≠ v (values compared within the
  /// cluster tolerance).
  double max_off_diagonal() const;

 private:
  DistributionKind kind_;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<std::vector<Complex>> w_;
};

/// Joint distribution of more than two pairwise commuting observables.
struct MultiDistribution {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;  // per observable
  std::vector<double> weights;              // row-major over the value grids, first index slowest

  double at(std::span<const std::size_t> index) const;
  /// Weight at the given eigenvalues; throws PreconditionError if a value is
  /// not in the corresponding spectrum.
  double at_values(std::span<const double> values) const;
};

/// √(⟨X²⟩ − ⟨X⟩²), evaluated as ‖(X − ⟨X⟩)ψ‖ so it is never negative.
double sigma(const Observable& x, const QState& state);

/// ⟨ψ,ξ|[M(τ) − A(0)]²|ψ,ξ⟩^{1/2}.
double epsilon_o(const MeasurementModel& model, const Observable& a, const QState& psi);

/// ⟨ψ,ξ|[B(τ) − B(0)]²|ψ,ξ⟩^{1/2}.
double eta_o(const MeasurementModel& model, const Observable& b, const QState& psi);

/// max over (u, v) of ‖[P^X(u), P^Y(v)]|Ψ⟩‖.
double in_state_commutator_norm(const Observable& x, const Observable& y, const QState& state);

/// True iff every pair of spectral projectors commutes on the state within tol.
bool commutes_in_state(const Observable& x, const Observable& y, const QState& state,
                       double tol = kClassifyTol);

/// μ(u, v) = ⟨Ψ|P^X(u) P^Y(v)|Ψ⟩. Throws NotCommutingInState when the pair
/// does not commute on the state (tolerance `tol`). Rounding negatives in
/// [−1e-10, 0) are zeroed and the weights renormalized; anything more
/// negative throws InternalConsistencyError.
JointDistribution jpd(const Observable& x, const Observable& y, const QState& state,
                      double tol = kClassifyTol);

/// ν(u, v) = ⟨Ψ|P^X(u) P^Y(v)|Ψ⟩, defined for every pair.
JointDistribution wjd(const Observable& x, const Observable& y, const QState& state);

/// Joint distribution of pairwise commuting observables (operator commutators
/// below tol); throws NotCommutingInState otherwise.
MultiDistribution joint_distribution(std::span<const Observable> observables,
                                     const QState& state, double tol = kClassifyTol);

/// (Σ (u − v)² μ(u, v))^{1/2}. Throws WjdNotClassical on a WJD.
double delta_g(const JointDistribution& d);

/// μ(u | v) for each u. Throws WjdNotClassical on a WJD, PreconditionError
/// if `given_v` is not a v value or its marginal vanishes.
std::map<double, double> conditional(const JointDistribution& d, double given_v);

/// Spectral distribution of an observable in a state, as (value, probability).
std::vector<std::pair<double, double>> spectral_distribution(const Observable& x,
                                                             const QState& state);

/// B(0) and B(τ) have the same distribution in |ψ,ξ⟩ (pointwise within tol).
bool is_distributionally_nondisturbing(const MeasurementModel& model, const Observable& b,
                                       const QState& psi, double tol = kClassifyTol);

struct ProperNonDisturbance {
  bool verdict = false;                   // equals w_holds
  bool s_holds = false;                   // JPD exists and vanishes off the diagonal
  bool w_holds = false;                   // WJD vanishes off the diagonal
  bool projector_transfer_holds = false;  // P^{B(τ)}(u)|ψ,ξ⟩ = P^{B(0)}(u)|ψ,ξ⟩ for all u
  double tolerance = kClassifyTol;
};

/// Evaluates the three equivalent conditions for B(τ) and B(0) to be
/// perfectly correlated in |ψ,ξ⟩, each independently.
ProperNonDisturbance is_properly_nondisturbing(const MeasurementModel& model,
                                               const Observable& b, const QState& psi,
                                               double tol = kClassifyTol);

struct EtaBarOptions {
  std::size_t grid_points = 4096;
  double refine_tol = 1e-10;
  double rational_tol = 1e-6;
  std::size_t max_denominator = 1000;
};

struct EtaBarResult {
  double value = 0.0;
  double t_at_sup = 0.0;
  double period = 0.0;
  bool exact = false;        // dichotomic B: the supremum is η_O itself
  bool commensurate = true;  // eigenvalue gaps share a common divisor within rational_tol
};

/// sup_t η_O(B, M, e^{−itB}|ψ⟩). Exact for B² = I; otherwise a grid search
/// over one period of the phase rotation followed by golden-section
/// refinement, which gives a lower bound of the supremum.
EtaBarResult eta_bar(const MeasurementModel& model, const Observable& b, const QState& psi,
                     const EtaBarOptions& opts = {});

/// (Σ_v ‖[P^A(v), B]|ψ⟩‖²)^{1/2}: the disturbance of B caused by a
/// projective measurement of A.
double eta_projective_commutator(const Observable& a, const Observable& b, const QState& state);

}  // namespace qedr
