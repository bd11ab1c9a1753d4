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

#include "qedr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "qedr/errors.hpp"

namespace qedr {

namespace {

constexpr double kTotalTol = 1e-9;
constexpr double kNegativeRounding = 1e-10;

bool same_value(double a, double b) {
  return std::abs(a - b) <= cluster_threshold(std::max(std::abs(a), std::abs(b)));
}

Eigen::VectorXcd vec(const QState& s) { return s.column().eigen(); }

void require_dim(const Observable& x, const QState& state, const char* what) {
  if (x.dimension() != state.dimension()) {
    throw DimensionError(std::string(what) + " has dimension " + std::to_string(x.dimension()) +
                         " but the state has " + std::to_string(state.dimension()));
  }
}

// ⟨Ψ|P^X(u) P^Y(v)|Ψ⟩ for every pair of clusters.
std::vector<std::vector<Complex>> projector_products(const Observable& x, const Observable& y,
                                                     const QState& state) {
  const auto& sx = x.spectrum();
  const auto& sy = y.spectrum();
  const Eigen::VectorXcd psi = vec(state);
  std::vector<Eigen::VectorXcd> px, py;
  for (const auto& p : sx.projectors) px.emplace_back(p.eigen() * psi);
  for (const auto& p : sy.projectors) py.emplace_back(p.eigen() * psi);
  std::vector<std::vector<Complex>> w(sx.size(), std::vector<Complex>(sy.size()));
  // ⟨Ψ|P^X P^Y|Ψ⟩ = ⟨P^X Ψ | P^Y Ψ⟩ since P^X is self-adjoint.
  for (std::size_t i = 0; i < sx.size(); ++i) {
    for (std::size_t j = 0; j < sy.size(); ++j) w[i][j] = px[i].dot(py[j]);
  }
  return w;
}

// Merges two sorted spectra into a common list of values; index maps give the
// position of each value in the source spectrum or -1.
struct MatchedSpectra {
  std::vector<double> values;
  std::vector<std::ptrdiff_t> in_first;
  std::vector<std::ptrdiff_t> in_second;
};

MatchedSpectra match_spectra(const std::vector<double>& a, const std::vector<double>& b) {
  MatchedSpectra m;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && same_value(a[i], b[j])) {
      m.values.push_back(0.5 * (a[i] + b[j]));
      m.in_first.push_back(static_cast<std::ptrdiff_t>(i++));
      m.in_second.push_back(static_cast<std::ptrdiff_t>(j++));
    } else if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
      m.values.push_back(a[i]);
      m.in_first.push_back(static_cast<std::ptrdiff_t>(i++));
      m.in_second.push_back(-1);
    } else {
      m.values.push_back(b[j]);
      m.in_first.push_back(-1);
      m.in_second.push_back(static_cast<std::ptrdiff_t>(j++));
    }
  }
  return m;
}

// Best rational approximation p/q of x > 0 with q ≤ max_den (continued fractions).
std::pair<long long, long long> best_rational(double x, long long max_den) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(r);
    if (a_real > 1e12) break;
    const auto a = static_cast<long long>(a_real);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a_real;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return {static_cast<long long>(std::llround(x)), 1};
  return {p1, q1};
}

}  // namespace

std::string to_string(DistributionKind kind) {
  return kind == DistributionKind::kJpd ? "JPD" : "WJD";
}

JointDistribution::JointDistribution(DistributionKind kind, std::vector<double> u_values,
                                     std::vector<double> v_values,
                                     std::vector<std::vector<Complex>> weights)
    : kind_(kind), u_(std::move(u_values)), v_(std::move(v_values)), w_(std::move(weights)) {
  if (w_.size() != u_.size()) throw InvariantError("weights need one row per u value");
  for (const auto& row : w_) {
    if (row.size() != v_.size()) throw InvariantError("weights need one column per v value");
    for (const auto& z : row) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvariantError("joint distribution has non-finite weights");
      }
      if (kind_ == DistributionKind::kJpd) {
        if (std::abs(z.imag()) > kTotalTol) throw InvariantError("JPD weights must be real");
        if (z.real() < -kNegativeRounding) throw InvariantError("JPD weights must be non-negative");
      }
    }
  }
  if (std::abs(total() - Complex(1.0)) > kTotalTol) {
    throw InvariantError("joint distribution weights do not sum to 1");
  }
}

std::vector<Complex> JointDistribution::marginal_u() const {
  std::vector<Complex> out(u_.size(), 0.0);
  for (std::size_t i = 0; i < u_.size(); ++i) {
    for (const auto& z : w_[i]) out[i] += z;
  }
  return out;
}

std::vector<Complex> JointDistribution::marginal_v() const {
  std::vector<Complex> out(v_.size(), 0.0);
  for (const auto& row : w_) {
    for (std::size_t j = 0; j < v_.size(); ++j) out[j] += row[j];
  }
  return out;
}

Complex JointDistribution::total() const {
  Complex s = 0.0;
  for (const auto& row : w_) {
    for (const auto& z : row) s += z;
  }
  return s;
}

double JointDistribution::max_off_diagonal() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < u_.size(); ++i) {
    for (std::size_t j = 0; j < v_.size(); ++j) {
      if (!same_value(u_[i], v_[j])) worst = std::max(worst, std::abs(w_[i][j]));
    }
  }
  return worst;
}

double MultiDistribution::at(std::span<const std::size_t> index) const {
  if (index.size() != values.size()) throw DimensionError("one index per observable expected");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (index[k] >= values[k].size()) throw DimensionError("index out of range");
    flat = flat * values[k].size() + index[k];
  }
  return weights[flat];
}

double MultiDistribution::at_values(std::span<const double> vals) const {
  if (vals.size() != values.size()) throw DimensionError("one value per observable expected");
  std::vector<std::size_t> index(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const auto it = std::find_if(values[k].begin(), values[k].end(),
                                 [&](double x) { return same_value(x, vals[k]); });
    if (it == values[k].end()) {
      throw PreconditionError("value " + std::to_string(vals[k]) + " is not an eigenvalue");
    }
    index[k] = static_cast<std::size_t>(it - values[k].begin());
  }
  return at(index);
}

double sigma(const Observable& x, const QState& state) {
  require_dim(x, state, "observable");
  // ‖(X − ⟨X⟩)ψ‖ avoids the cancellation in ⟨X²⟩ − ⟨X⟩².
  const double mean = expectation(x.matrix(), state).real();
  const ComplexMatrix shifted = x.matrix() - mean * ComplexMatrix::identity(x.dimension());
  return apply_norm(shifted, state);
}

double epsilon_o(const MeasurementModel& model, const Observable& a, const QState& psi) {
  const QState joint = model.initial_state(psi);
  const Observable m_tau = heisenberg(lift_probe(model.meter(), model), model);
  const Observable a_0 = lift_system(a, model);
  return apply_norm(m_tau.matrix() - a_0.matrix(), joint);
}

double eta_o(const MeasurementModel& model, const Observable& b, const QState& psi) {
  const QState joint = model.initial_state(psi);
  const Observable b_0 = lift_system(b, model);
  const Observable b_tau = heisenberg(b_0, model);
  return apply_norm(b_tau.matrix() - b_0.matrix(), joint);
}

double in_state_commutator_norm(const Observable& x, const Observable& y, const QState& state) {
  require_dim(x, state, "first observable");
  require_dim(y, state, "second observable");
  const Eigen::VectorXcd psi = vec(state);
  double worst = 0.0;
  for (const auto& px : x.spectrum().projectors) {
    for (const auto& py : y.spectrum().projectors) {
      const Eigen::VectorXcd d =
          px.eigen() * (py.eigen() * psi) - py.eigen() * (px.eigen() * psi);
      worst = std::max(worst, d.norm());
    }
  }
  return worst;
}

bool commutes_in_state(const Observable& x, const Observable& y, const QState& state,
                       double tol) {
  return in_state_commutator_norm(x, y, state) <= tol;
}

JointDistribution jpd(const Observable& x, const Observable& y, const QState& state, double tol) {
  const double defect = in_state_commutator_norm(x, y, state);
  if (defect > tol) {
    throw NotCommutingInState("observables do not commute in the state (||[P^X(u),P^Y(v)]Psi|| = " +
                              std::to_string(defect) + "); no joint probability distribution");
  }
  auto w = projector_products(x, y, state);
  double total = 0.0;
  for (auto& row : w) {
    for (auto& z : row) {
      double p = z.real();
      if (p < -kNegativeRounding) {
        throw InternalConsistencyError("commuting pair produced a negative joint probability " +
                                       std::to_string(p));
      }
      if (p < 0.0) p = 0.0;
      z = p;
      total += p;
    }
  }
  for (auto& row : w) {
    for (auto& z : row) z /= total;
  }
  return {DistributionKind::kJpd, x.spectrum().eigenvalues, y.spectrum().eigenvalues,
          std::move(w)};
}

JointDistribution wjd(const Observable& x, const Observable& y, const QState& state) {
  require_dim(x, state, "first observable");
  require_dim(y, state, "second observable");
  return {DistributionKind::kWjd, x.spectrum().eigenvalues, y.spectrum().eigenvalues,
          projector_products(x, y, state)};
}

MultiDistribution joint_distribution(std::span<const Observable> observables,
                                     const QState& state, double tol) {
  MultiDistribution out;
  for (std::size_t i = 0; i < observables.size(); ++i) {
    require_dim(observables[i], state, "observable");
    for (std::size_t j = i + 1; j < observables.size(); ++j) {
      if (commutator(observables[i].matrix(), observables[j].matrix()).frobenius_norm() > tol) {
        throw NotCommutingInState("observables " + std::to_string(i) + " and " +
                                  std::to_string(j) + " do not commute");
      }
    }
    out.labels.push_back(observables[i].label());
    out.values.push_back(observables[i].spectrum().eigenvalues);
  }
  std::size_t cells = 1;
  for (const auto& v : out.values) cells *= v.size();
  out.weights.assign(cells, 0.0);
  const Eigen::VectorXcd psi = vec(state);
  std::vector<std::size_t> index(observables.size(), 0);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = observables.size(); k-- > 0;) {
      index[k] = rest % out.values[k].size();
      rest /= out.values[k].size();
    }
    Eigen::VectorXcd v = psi;
    for (std::size_t k = observables.size(); k-- > 0;) {
      v = observables[k].spectrum().projectors[index[k]].eigen() * v;
    }
    out.weights[flat] = std::max(0.0, v.squaredNorm());
  }
  return out;
}

double delta_g(const JointDistribution& d) {
  if (d.kind() != DistributionKind::kJpd) {
    throw WjdNotClassical("delta_G is defined only for joint probability distributions");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < d.u_values().size(); ++i) {
    for (std::size_t j = 0; j < d.v_values().size(); ++j) {
      const double diff = d.u_values()[i] - d.v_values()[j];
      s += diff * diff * d.probability(i, j);
    }
  }
  return std::sqrt(std::max(0.0, s));
}

std::map<double, double> conditional(const JointDistribution& d, double given_v) {
  if (d.kind() != DistributionKind::kJpd) {
    throw WjdNotClassical("conditional distributions need a joint probability distribution");
  }
  const auto& vs = d.v_values();
  const auto it = std::find_if(vs.begin(), vs.end(), [&](double v) { return same_value(v, given_v); });
  if (it == vs.end()) {
    throw PreconditionError("value " + std::to_string(given_v) + " is not among the v values");
  }
  const auto j = static_cast<std::size_t>(it - vs.begin());
  double marginal = 0.0;
  for (std::size_t i = 0; i < d.u_values().size(); ++i) marginal += d.probability(i, j);
  if (!(marginal > 1e-12)) throw PreconditionError("conditioning on a zero-probability value");
  std::map<double, double> out;
  for (std::size_t i = 0; i < d.u_values().size(); ++i) {
    out[d.u_values()[i]] = d.probability(i, j) / marginal;
  }
  return out;
}

std::vector<std::pair<double, double>> spectral_distribution(const Observable& x,
                                                             const QState& state) {
  require_dim(x, state, "observable");
  const auto& s = x.spectrum();
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    out.emplace_back(s.eigenvalues[k], std::pow(apply_norm(s.projectors[k], state), 2));
  }
  return out;
}

bool is_distributionally_nondisturbing(const MeasurementModel& model, const Observable& b,
                                       const QState& psi, double tol) {
  const QState joint = model.initial_state(psi);
  const Observable b_0 = lift_system(b, model);
  const Observable b_tau = heisenberg(b_0, model);
  const auto p0 = spectral_distribution(b_0, joint);
  const auto pt = spectral_distribution(b_tau, joint);
  std::vector<double> v0, vt;
  for (const auto& [v, p] : p0) v0.push_back(v);
  for (const auto& [v, p] : pt) vt.push_back(v);
  const auto m = match_spectra(vt, v0);
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    const double a = m.in_first[k] >= 0 ? pt[static_cast<std::size_t>(m.in_first[k])].second : 0.0;
    const double c = m.in_second[k] >= 0 ? p0[static_cast<std::size_t>(m.in_second[k])].second : 0.0;
    if (std::abs(a - c) > tol) return false;
  }
  return true;
}

ProperNonDisturbance is_properly_nondisturbing(const MeasurementModel& model,
                                               const Observable& b, const QState& psi,
                                               double tol) {
  ProperNonDisturbance out;
  out.tolerance = tol;
  const QState joint = model.initial_state(psi);
  const Observable b_0 = lift_system(b, model);
  const Observable b_tau = heisenberg(b_0, model);

  // (W): weak joint distribution of B(τ), B(0) vanishes off the diagonal.
  out.w_holds = wjd(b_tau, b_0, joint).max_off_diagonal() <= tol;

  // P^{B(τ)}(u)|Ψ⟩ = P^{B(0)}(u)|Ψ⟩ for every value u.
  const auto& st = b_tau.spectrum();
  const auto& s0 = b_0.spectrum();
  const auto m = match_spectra(st.eigenvalues, s0.eigenvalues);
  const Eigen::VectorXcd psi_joint = vec(joint);
  double transfer_defect = 0.0;
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(psi_joint.size());
    if (m.in_first[k] >= 0) d += st.projectors[static_cast<std::size_t>(m.in_first[k])].eigen() * psi_joint;
    if (m.in_second[k] >= 0) d -= s0.projectors[static_cast<std::size_t>(m.in_second[k])].eigen() * psi_joint;
    transfer_defect = std::max(transfer_defect, d.norm());
  }
  out.projector_transfer_holds = transfer_defect <= tol;

  // (S): the JPD exists and vanishes off the diagonal.
  if (commutes_in_state(b_tau, b_0, joint, tol)) {
    out.s_holds = jpd(b_tau, b_0, joint, tol).max_off_diagonal() <= tol;
  }
  out.verdict = out.w_holds;
  return out;
}

EtaBarResult eta_bar(const MeasurementModel& model, const Observable& b, const QState& psi,
                     const EtaBarOptions& opts) {
  EtaBarResult out;
  const auto& spec = b.spectrum();
  const double eta0 = eta_o(model, b, psi);
  out.value = eta0;
  if (spec.size() < 2) {
    out.exact = true;
    return out;
  }

  // Gaps relative to the lowest eigenvalue; the rotation is periodic with
  // period 2π/g where g divides every gap.
  const double d1 = spec.eigenvalues[1] - spec.eigenvalues[0];
  std::vector<std::pair<long long, long long>> ratios;
  long long lcm_den = 1;
  for (std::size_t k = 1; k < spec.size(); ++k) {
    const double ratio = (spec.eigenvalues[k] - spec.eigenvalues[0]) / d1;
    const auto pq = best_rational(ratio, static_cast<long long>(opts.max_denominator));
    if (std::abs(static_cast<double>(pq.first) / static_cast<double>(pq.second) - ratio) >
        opts.rational_tol * ratio) {
      out.commensurate = false;
    }
    ratios.push_back(pq);
    lcm_den = std::lcm(lcm_den, pq.second);
    if (lcm_den > 1'000'000) {
      lcm_den = 1'000'000;
      out.commensurate = false;
      break;
    }
  }
  long long common = 0;
  for (const auto& [p, q] : ratios) common = std::gcd(common, p * (lcm_den / q));
  if (common <= 0) common = 1;
  const double g = d1 * static_cast<double>(common) / static_cast<double>(lcm_den);
  out.period = 2.0 * std::numbers::pi / g;

  if (b.is_dichotomic()) {
    out.exact = true;
    return out;
  }

  // η(t)² = ‖Σ_k e^{−itλ_k} D (P_k ψ ⊗ ξ)‖² with D = B(τ) − B(0).
  const Observable b_0 = lift_system(b, model);
  const Observable b_tau = heisenberg(b_0, model);
  const Eigen::MatrixXcd diff = b_tau.matrix().eigen() - b_0.matrix().eigen();
  const Eigen::VectorXcd xi = model.probe_state().column().eigen();
  const Eigen::VectorXcd psi_vec = psi.column().eigen();
  std::vector<Eigen::VectorXcd> parts;
  for (const auto& p : spec.projectors) {
    const Eigen::VectorXcd local = p.eigen() * psi_vec;
    Eigen::VectorXcd joint(local.size() * xi.size());
    for (Eigen::Index i = 0; i < local.size(); ++i) joint.segment(i * xi.size(), xi.size()) = local(i) * xi;
    parts.emplace_back(diff * joint);
  }
  auto eta_at = [&](double t) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(parts.front().size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      acc += std::exp(Complex(0.0, -t * spec.eigenvalues[k])) * parts[k];
    }
    return acc.norm();
  };

  const std::size_t n = std::max<std::size_t>(opts.grid_points, 2);
  const double h = out.period / static_cast<double>(n);
  double best_t = 0.0;
  double best = eta_at(0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double t = h * static_cast<double>(j);
    const double v = eta_at(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }

  // Golden-section refinement on the bracket around the best grid point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_t - h, hi = best_t + h;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = eta_at(x1), f2 = eta_at(x2);
  while (hi - lo > opts.refine_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = eta_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = eta_at(x1);
    }
  }
  const double t_mid = 0.5 * (lo + hi);
  const double refined = eta_at(t_mid);
  if (refined > best) {
    best = refined;
    best_t = t_mid;
  }
  out.value = std::max(best, eta0);
  out.t_at_sup = best > eta0 ? best_t : 0.0;
  return out;
}

double eta_projective_commutator(const Observable& a, const Observable& b, const QState& state) {
  require_dim(a, state, "measured observable");
  require_dim(b, state, "disturbed observable");
  double s = 0.0;
  for (const auto& p : a.spectrum().projectors) {
    s += std::pow(apply_norm(commutator(p, b.matrix()), state), 2);
  }
  return std::sqrt(s);
}

}  // namespace qedr
