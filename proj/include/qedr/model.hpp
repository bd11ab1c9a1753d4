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

// Pure states, observables and indirect measurement models.
//
// A measurement model couples the system to a probe prepared in a fixed
// state through a unitary interaction; the outcome is read from a meter
// observable of the probe. Only the instants t = 0 (before) and t = τ
// (after) are represented. The composite ordering is
// (system factors..., probe), with the probe as the last tensor factor.

#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qedr/linalg.hpp"

namespace qedr {

/// Normalized pure state on a tensor product of the given factor dimensions.
class QState {
 public:
  /// Throws DimensionError if Π dims ≠ amplitudes.size(), InvariantError
  /// if the norm deviates from 1 by more than 1e-9.
  QState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

  /// Normalizes the amplitudes first; throws InvariantError on a zero vector.
  static QState normalized(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);
  /// Computational basis state |index⟩ of a single factor of dimension `dim`.
  static QState basis(std::size_t dim, std::size_t index);
  /// Product basis state |b_0 b_1 ...⟩ over the given dims.
  static QState basis(std::vector<std::size_t> dims, std::span<const std::size_t> digits);
  /// (|00⟩ + |11⟩)/√2
  static QState bell_phi_plus();

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  ComplexMatrix column() const { return ComplexMatrix::column(amplitudes_); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> amplitudes_;
};

/// |a⟩ ⊗ |b⟩ with concatenated dims.
QState tensor(const QState& a, const QState& b);

/// Applies a matrix to the state and renormalizes (for unitaries this is
/// plain evolution).
QState apply(const ComplexMatrix& op, const QState& state);

/// ⟨state|op|state⟩.
Complex expectation(const ComplexMatrix& op, const QState& state);

/// ‖op|state⟩‖.
double apply_norm(const ComplexMatrix& op, const QState& state);

/// Hermitian operator with its spectral decomposition, computed on first use
/// and shared between copies.
class Observable {
 public:
  /// Throws InvariantError when ‖m − m†‖ > 1e-9. The stored matrix is the
  /// Hermitian part (m + m†)/2.
  explicit Observable(const ComplexMatrix& m, std::string label = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  std::size_t dimension() const { return matrix_.rows(); }
  const SpectralDecomposition& spectrum() const;

  /// X² = I within 1e-9.
  bool is_dichotomic() const;

 private:
  struct Lazy {
    std::once_flag once;
    SpectralDecomposition decomposition;
  };
  ComplexMatrix matrix_;
  std::string label_;
  std::shared_ptr<Lazy> lazy_;
};

class MeasurementModel {
 public:
  /// Validates: probe_state lives on a single factor of dimension probe_dim,
  /// the unitary matches the composite dimension and satisfies
  /// ‖U†U − I‖ ≤ 1e-9, the meter matches probe_dim. Violations throw
  /// DimensionError or InvariantError naming the invariant.
  MeasurementModel(std::vector<std::size_t> system_dims, std::size_t probe_dim,
                   QState probe_state, ComplexMatrix unitary, Observable meter);

  const std::vector<std::size_t>& system_dims() const { return system_dims_; }
  std::size_t system_dim() const { return system_dim_; }
  std::size_t probe_dim() const { return probe_dim_; }
  std::size_t composite_dim() const { return system_dim_ * probe_dim_; }
  const QState& probe_state() const { return probe_state_; }
  const ComplexMatrix& unitary() const { return unitary_; }
  const Observable& meter() const { return meter_; }

  /// Factor dimensions of the composite space: system factors then probe.
  std::vector<std::size_t> composite_dims() const;

  /// |ψ⟩ ⊗ |ξ⟩; DimensionError if ψ does not match the system dimension.
  QState initial_state(const QState& psi) const;

 private:
  std::vector<std::size_t> system_dims_;
  std::size_t system_dim_;
  std::size_t probe_dim_;
  QState probe_state_;
  ComplexMatrix unitary_;
  Observable meter_;
};

/// X(0) = X ⊗ I.
Observable lift_system(const Observable& x, const MeasurementModel& model);

/// Y(0) = I ⊗ Y.
Observable lift_probe(const Observable& y, const MeasurementModel& model);

/// X(τ) = U† X(0) U for an observable on the composite space.
Observable heisenberg(const Observable& x0, const MeasurementModel& model);

/// Projective measurement of `a` through a pointer coupling
/// U = Σ_i P^A(a_i) ⊗ S^i, with S the cyclic shift of the probe basis, the
/// probe in |0⟩ and the meter reading a_i on pointer state |i⟩. Clusters are
/// indexed from the largest eigenvalue down, so measuring σ_z with a qubit
/// probe gives U = |0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ σ_x and meter σ_z. Unused pointer
/// states read the smallest eigenvalue.
/// `system_dims` defaults to a single factor of a's dimension.
/// Throws PreconditionError if probe_dim is below the number of clusters.
MeasurementModel projective_model(const Observable& a, std::size_t probe_dim,
                                  std::optional<std::vector<std::size_t>> system_dims = {});

/// Model whose interaction acts only on system factor `subsystem` and the
/// probe: U = I ⊗ U_local with the identity on every other system factor.
/// `local_unitary` acts on (factor `subsystem`) ⊗ probe.
MeasurementModel local_model(std::vector<std::size_t> system_dims, std::size_t subsystem,
                             const ComplexMatrix& local_unitary, QState probe_state,
                             Observable meter);

/// True when U commutes (within tol) with every operator on the system
/// factors other than `subsystem`, i.e. the interaction is local to it.
bool is_local_to(const MeasurementModel& model, std::size_t subsystem,
                 double tol = kStructureTol);

/// Operator on system factor `factor` lifted to the full system space.
ComplexMatrix on_factor(const ComplexMatrix& op, std::span<const std::size_t> system_dims,
                        std::size_t factor);

}  // namespace qedr
