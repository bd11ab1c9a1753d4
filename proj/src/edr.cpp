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

#include "qedr/edr.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qedr/errors.hpp"
#include "qedr/operators.hpp"

namespace qedr {

namespace {

void escalate_if_violated(const InequalityRecord& r) {
  if (!r.satisfied) {
    throw InternalConsistencyError(r.name + " violated: lhs = " + std::to_string(r.lhs) +
                                   ", rhs = " + std::to_string(r.rhs));
  }
}

void require_bell_setting(const MeasurementModel& model) {
  if (model.system_dims() != std::vector<std::size_t>{2, 2}) {
    throw PreconditionError("setting requires a two-qubit system");
  }
  if (!is_local_to(model, 1)) {
    throw PreconditionError("interaction is not local to the second qubit");
  }
}

Observable second_qubit(const ComplexMatrix& op, const char* label) {
  const std::size_t dims[] = {2, 2};
  return Observable(on_factor(op, dims, 1), label);
}

}  // namespace

InequalityRecord make_record(std::string name, Relation relation, double lhs, double rhs) {
  InequalityRecord r;
  r.name = std::move(name);
  r.relation = relation;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.satisfied = relation == Relation::kGreaterEqual ? r.margin >= -kInequalityTol
                                                    : r.margin <= kInequalityTol;
  return r;
}

double commutator_bound(const Observable& a, const Observable& b, const QState& psi) {
  return 0.5 * std::abs(expectation(commutator(a.matrix(), b.matrix()), psi));
}

InequalityRecord robertson(const Observable& a, const Observable& b, const QState& psi) {
  auto r = make_record("robertson", Relation::kGreaterEqual, sigma(a, psi) * sigma(b, psi),
                       commutator_bound(a, b, psi));
  escalate_if_violated(r);
  return r;
}

InequalityRecord heisenberg_product(const MeasurementModel& model, const Observable& a,
                                    const Observable& b, const QState& psi) {
  return make_record("heisenberg", Relation::kGreaterEqual,
                     epsilon_o(model, a, psi) * eta_o(model, b, psi),
                     commutator_bound(a, b, psi));
}

InequalityRecord universal_relation(const MeasurementModel& model, const Observable& a,
                                 const Observable& b, const QState& psi) {
  const double e = epsilon_o(model, a, psi);
  const double h = eta_o(model, b, psi);
  const double lhs = e * h + e * sigma(b, psi) + sigma(a, psi) * h;
  auto r = make_record("universal", Relation::kGreaterEqual, lhs, commutator_bound(a, b, psi));
  escalate_if_violated(r);
  return r;
}

InequalityRecord znzd_bound(const MeasurementModel& model, const Observable& a,
                            const Observable& b, const QState& psi) {
  const double e = epsilon_o(model, a, psi);
  if (e > 1e-8) {
    throw PreconditionError("ZNZD bound needs a zero-error measurement of A (epsilon_O = " +
                            std::to_string(e) + ")");
  }
  const double s = sigma(a, psi);
  if (s <= 1e-8) throw PreconditionError("ZNZD bound needs sigma(A) > 0");
  return make_record("znzd", Relation::kGreaterEqual, eta_o(model, b, psi),
                     commutator_bound(a, b, psi) / s);
}

InequalityRecord branciard_tight(const MeasurementModel& model, const QState& psi) {
  require_bell_setting(model);
  const QState bell = QState::bell_phi_plus();
  if (psi.dimension() != 4 ||
      std::abs(std::abs(expectation(bell.column() * dagger(bell.column()), psi)) - 1.0) > kStructureTol) {
    throw PreconditionError("tight relation is evaluated in the state (|00>+|11>)/sqrt(2)");
  }
  const double e = epsilon_o(model, second_qubit(ops::sigma_z(), "sigma_z^(2)"), psi);
  const double h = eta_o(model, second_qubit(ops::sigma_x(), "sigma_x^(2)"), psi);
  const double lhs = std::pow(e * e - 2.0, 2) + std::pow(h * h - 2.0, 2);
  return make_record("branciard", Relation::kLessEqual, lhs, 4.0);
}

EDRReport edr_report(const MeasurementModel& model, const Observable& a, const Observable& b,
                     const QState& psi) {
  EDRReport rep;
  rep.epsilon = epsilon_o(model, a, psi);
  rep.eta = eta_o(model, b, psi);
  rep.sigma_a = sigma(a, psi);
  rep.sigma_b = sigma(b, psi);
  rep.commutator_bound = commutator_bound(a, b, psi);
  rep.inequalities.push_back(robertson(a, b, psi));
  rep.inequalities.push_back(heisenberg_product(model, a, b, psi));
  rep.inequalities.push_back(universal_relation(model, a, b, psi));
  if (rep.epsilon <= 1e-8 && rep.sigma_a > 1e-8) {
    rep.inequalities.push_back(znzd_bound(model, a, b, psi));
  }
  return rep;
}

double e91_optimal_error(double p_ab) {
  const double radicand = 0.25 - (p_ab - 0.5) * (p_ab - 0.5);
  return 0.5 - std::sqrt(std::max(0.0, radicand));
}

E91Report e91_analyze(const MeasurementModel& model, std::string label,
                      std::optional<double> theta) {
  require_bell_setting(model);
  const QState bell = QState::bell_phi_plus();
  const QState joint = model.initial_state(bell);
  const std::size_t dims[] = {2, 2};

  const Observable x1_0 = lift_system(Observable(on_factor(ops::sigma_x(), dims, 0)), model);
  const Observable x2_0 = lift_system(Observable(on_factor(ops::sigma_x(), dims, 1)), model);
  const JointDistribution mu_tau =
      jpd(heisenberg(x1_0, model), heisenberg(x2_0, model), joint);

  E91Report rep;
  rep.theta = theta;
  rep.label = std::move(label);
  rep.delta_g_tau = delta_g(mu_tau);
  rep.p_ab = rep.delta_g_tau * rep.delta_g_tau / 4.0;
  rep.epsilon_eve = epsilon_o(model, second_qubit(ops::sigma_z(), "sigma_z^(2)"), bell);
  rep.eta_key = eta_o(model, second_qubit(ops::sigma_x(), "sigma_x^(2)"), bell);
  rep.p_e = rep.epsilon_eve * rep.epsilon_eve / 4.0;
  rep.p_e_optimal = e91_optimal_error(rep.p_ab);
  return rep;
}

}  // namespace qedr
