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

#include "qedr/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "qedr/errors.hpp"
#include "qedr/operators.hpp"

namespace qedr {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

QState::QState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.empty() || std::find(dims_.begin(), dims_.end(), 0) != dims_.end()) {
    throw DimensionError("state dims must be non-empty and positive");
  }
  if (product(dims_) != amplitudes_.size()) {
    throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                         " amplitudes but dims multiply to " + std::to_string(product(dims_)));
  }
  for (const auto& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvariantError("state has non-finite amplitudes");
    }
  }
  const double n = norm2(amplitudes_);
  if (std::abs(n - 1.0) > kStructureTol) {
    throw InvariantError("state is not normalized: norm = " + std::to_string(n));
  }
}

QState QState::normalized(std::vector<std::size_t> dims, std::vector<Complex> amplitudes) {
  const double n = norm2(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw InvariantError("cannot normalize a zero state");
  for (auto& z : amplitudes) z /= n;
  return {std::move(dims), std::move(amplitudes)};
}

QState QState::basis(std::size_t dim, std::size_t index) {
  const std::size_t digits[] = {index};
  return basis(std::vector<std::size_t>{dim}, digits);
}

QState QState::basis(std::vector<std::size_t> dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw DimensionError("one basis digit per factor expected");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw DimensionError("basis digit out of range");
    flat = flat * dims[k] + digits[k];
  }
  std::vector<Complex> amps(product(dims), 0.0);
  amps[flat] = 1.0;
  return {std::move(dims), std::move(amps)};
}

QState QState::bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{2, 2}, {r, 0.0, 0.0, r}};
}

QState tensor(const QState& a, const QState& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps;
  amps.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return QState::normalized(std::move(dims), std::move(amps));
}

QState apply(const ComplexMatrix& op, const QState& state) {
  if (!op.is_square() || op.cols() != state.dimension()) {
    throw DimensionError("operator does not act on a " + std::to_string(state.dimension()) +
                         "-dimensional state");
  }
  const Eigen::VectorXcd out = op.eigen() * state.column().eigen();
  return QState::normalized(state.dims(), std::vector<Complex>(out.data(), out.data() + out.size()));
}

Complex expectation(const ComplexMatrix& op, const QState& state) {
  if (!op.is_square() || op.cols() != state.dimension()) {
    throw DimensionError("operator of dimension " + std::to_string(op.rows()) +
                         " does not act on a " + std::to_string(state.dimension()) +
                         "-dimensional state");
  }
  const Eigen::VectorXcd psi = state.column().eigen();
  return psi.dot(op.eigen() * psi);  // dot() conjugates its left operand
}

double apply_norm(const ComplexMatrix& op, const QState& state) {
  if (op.cols() != state.dimension()) throw DimensionError("operator/state dimension mismatch");
  return (op.eigen() * state.column().eigen()).norm();
}

Observable::Observable(const ComplexMatrix& m, std::string label)
    : label_(std::move(label)), lazy_(std::make_shared<Lazy>()) {
  if (!m.is_square()) throw DimensionError("observable must be square");
  const double defect = m.hermiticity_defect();
  if (defect > kStructureTol) {
    throw InvariantError("observable" + (label_.empty() ? "" : " '" + label_ + "'") +
                         " is not Hermitian: ||X - X^dagger|| = " + num(defect));
  }
  matrix_ = ComplexMatrix(Eigen::MatrixXcd(0.5 * (m.eigen() + m.eigen().adjoint())));
}

const SpectralDecomposition& Observable::spectrum() const {
  std::call_once(lazy_->once, [this] { lazy_->decomposition = eig_hermitian(matrix_); });
  return lazy_->decomposition;
}

bool Observable::is_dichotomic() const {
  return (matmul(matrix_, matrix_) - ComplexMatrix::identity(dimension())).frobenius_norm() <=
         kStructureTol;
}

MeasurementModel::MeasurementModel(std::vector<std::size_t> system_dims, std::size_t probe_dim,
                                   QState probe_state, ComplexMatrix unitary, Observable meter)
    : system_dims_(std::move(system_dims)),
      system_dim_(product(system_dims_)),
      probe_dim_(probe_dim),
      probe_state_(std::move(probe_state)),
      unitary_(std::move(unitary)),
      meter_(std::move(meter)) {
  if (system_dims_.empty() ||
      std::find(system_dims_.begin(), system_dims_.end(), 0) != system_dims_.end()) {
    throw DimensionError("system_dims must be non-empty and positive");
  }
  if (probe_dim_ == 0) throw DimensionError("probe_dim must be positive");
  if (probe_state_.dims().size() != 1 || probe_state_.dimension() != probe_dim_) {
    throw DimensionError("probe state must be a single factor of dimension " +
                         std::to_string(probe_dim_));
  }
  if (!unitary_.is_square() || unitary_.rows() != composite_dim()) {
    throw DimensionError("unitary must be " + std::to_string(composite_dim()) + "x" +
                         std::to_string(composite_dim()));
  }
  const double defect = unitary_.unitarity_defect();
  if (defect > kStructureTol) {
    throw InvariantError("unitarity violated: interaction is not unitary, ||U^dagger U - I|| = " + num(defect));
  }
  if (meter_.dimension() != probe_dim_) {
    throw DimensionError("meter must act on the probe (dimension " + std::to_string(probe_dim_) +
                         ")");
  }
}

std::vector<std::size_t> MeasurementModel::composite_dims() const {
  std::vector<std::size_t> dims = system_dims_;
  dims.push_back(probe_dim_);
  return dims;
}

QState MeasurementModel::initial_state(const QState& psi) const {
  if (psi.dimension() != system_dim_) {
    throw DimensionError("system state has dimension " + std::to_string(psi.dimension()) +
                         ", model system has " + std::to_string(system_dim_));
  }
  return tensor(psi, probe_state_);
}

Observable lift_system(const Observable& x, const MeasurementModel& model) {
  if (x.dimension() != model.system_dim()) {
    throw DimensionError("system observable has dimension " + std::to_string(x.dimension()) +
                         ", expected " + std::to_string(model.system_dim()));
  }
  return Observable(kron(x.matrix(), ComplexMatrix::identity(model.probe_dim())),
                    x.label().empty() ? "" : x.label() + "(0)");
}

Observable lift_probe(const Observable& y, const MeasurementModel& model) {
  if (y.dimension() != model.probe_dim()) {
    throw DimensionError("probe observable has dimension " + std::to_string(y.dimension()) +
                         ", expected " + std::to_string(model.probe_dim()));
  }
  return Observable(kron(ComplexMatrix::identity(model.system_dim()), y.matrix()),
                    y.label().empty() ? "" : y.label() + "(0)");
}

Observable heisenberg(const Observable& x0, const MeasurementModel& model) {
  if (x0.dimension() != model.composite_dim()) {
    throw DimensionError("composite observable has dimension " + std::to_string(x0.dimension()) +
                         ", expected " + std::to_string(model.composite_dim()));
  }
  const auto& u = model.unitary();
  std::string label = x0.label();
  if (label.size() > 3 && label.ends_with("(0)")) label.replace(label.size() - 3, 3, "(tau)");
  return Observable(matmul(dagger(u), matmul(x0.matrix(), u)), std::move(label));
}

MeasurementModel projective_model(const Observable& a, std::size_t probe_dim,
                                  std::optional<std::vector<std::size_t>> system_dims) {
  std::vector<std::size_t> dims = system_dims.value_or(std::vector<std::size_t>{a.dimension()});
  if (product(dims) != a.dimension()) {
    throw DimensionError("system_dims do not multiply to the observable dimension");
  }
  const auto& spec = a.spectrum();
  const std::size_t clusters = spec.size();
  if (probe_dim < clusters) {
    throw PreconditionError("probe dimension " + std::to_string(probe_dim) + " is smaller than " +
                            std::to_string(clusters) + " distinct eigenvalues");
  }
  const ComplexMatrix shift = ops::cyclic_shift(probe_dim);
  ComplexMatrix shift_power = ComplexMatrix::identity(probe_dim);
  ComplexMatrix u(a.dimension() * probe_dim, a.dimension() * probe_dim);
  std::vector<double> pointer_values(probe_dim, spec.eigenvalues.front());
  for (std::size_t i = 0; i < clusters; ++i) {
    const std::size_t k = clusters - 1 - i;  // largest eigenvalue first
    u = u + kron(spec.projectors[k], shift_power);
    pointer_values[i] = spec.eigenvalues[k];
    shift_power = matmul(shift, shift_power);
  }
  Observable meter(ComplexMatrix::diagonal(pointer_values), "M");
  return {std::move(dims), probe_dim, QState::basis(probe_dim, 0), std::move(u), std::move(meter)};
}

ComplexMatrix on_factor(const ComplexMatrix& op, std::span<const std::size_t> system_dims,
                        std::size_t factor) {
  const std::size_t targets[] = {factor};
  return embed(op, system_dims, targets);
}

MeasurementModel local_model(std::vector<std::size_t> system_dims, std::size_t subsystem,
                             const ComplexMatrix& local_unitary, QState probe_state,
                             Observable meter) {
  if (subsystem >= system_dims.size()) throw DimensionError("subsystem index out of range");
  const std::size_t probe_dim = probe_state.dimension();
  std::vector<std::size_t> composite = system_dims;
  composite.push_back(probe_dim);
  const std::size_t targets[] = {subsystem, system_dims.size()};
  ComplexMatrix u = embed(local_unitary, composite, targets);
  return {std::move(system_dims), probe_dim, std::move(probe_state), std::move(u),
          std::move(meter)};
}

bool is_local_to(const MeasurementModel& model, std::size_t subsystem, double tol) {
  const auto dims = model.composite_dims();
  const std::size_t n_system = model.system_dims().size();
  if (subsystem >= n_system) throw DimensionError("subsystem index out of range");
  for (std::size_t k = 0; k < n_system; ++k) {
    if (k == subsystem) continue;
    const std::size_t targets[] = {k};
    for (std::size_t i = 0; i < dims[k]; ++i) {
      for (std::size_t j = 0; j < dims[k]; ++j) {
        const ComplexMatrix e = embed(ops::unit(dims[k], i, j), dims, targets);
        if (commutator(model.unitary(), e).frobenius_norm() > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace qedr
