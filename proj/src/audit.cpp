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

#include "qedr/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "qedr/edr.hpp"
#include "qedr/errors.hpp"
#include "qedr/measures.hpp"
#include "qedr/operators.hpp"

namespace qedr {

namespace {

constexpr double kZero = 1e-8;
constexpr double kIdentityTol = 1e-9;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

QState random_probe(std::size_t dim, Rng& rng) { return random_state({dim}, rng); }

// Identity on the listed basis indices, Haar-random on the rest.
ComplexMatrix fixing_unitary(std::size_t n, const std::vector<std::size_t>& fixed, Rng& rng) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) rest.push_back(i);
  }
  const Eigen::MatrixXcd v = haar_unitary(rest.size(), rng).eigen();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t i : fixed) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    for (std::size_t c = 0; c < rest.size(); ++c) {
      u(static_cast<Eigen::Index>(rest[r]), static_cast<Eigen::Index>(rest[c])) =
          v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return ComplexMatrix(std::move(u));
}

AuditCase generic_case(Rng& rng, bool dichotomic_b) {
  const std::size_t sd = pick(rng, 2, 3);
  const std::size_t pd = pick(rng, 2, 3);
  Observable b(dichotomic_b ? random_dichotomic(sd, rng) : random_hermitian(sd, rng), "B");
  Observable a(random_hermitian(sd, rng), "A");
  MeasurementModel model({sd}, pd, random_probe(pd, rng), haar_unitary(sd * pd, rng),
                         Observable(random_hermitian(pd, rng), "M"));
  return {std::move(model), std::move(a), std::move(b), random_state({sd}, rng),
          dichotomic_b ? "generic-dichotomic" : "generic"};
}

AuditCase controlled_case(Rng& rng, bool dichotomic_b) {
  const std::size_t sd = pick(rng, 2, 3);
  const std::size_t pd = pick(rng, 2, 3);
  Observable b(dichotomic_b ? random_dichotomic(sd, rng) : random_hermitian(sd, rng), "B");
  ComplexMatrix u(sd * pd, sd * pd);
  for (const auto& p : b.spectrum().projectors) u = u + kron(p, haar_unitary(pd, rng));
  MeasurementModel model({sd}, pd, random_probe(pd, rng), std::move(u),
                         Observable(random_hermitian(pd, rng), "M"));
  return {std::move(model), Observable(random_hermitian(sd, rng), "A"), std::move(b),
          random_state({sd}, rng), "controlled"};
}

AuditCase state_dependent_case(Rng& rng, bool dichotomic_b) {
  // System qutrit; K = span{|0>, |1>} rotated by a random system unitary.
  const std::size_t sd = 3;
  const std::size_t pd = pick(rng, 2, 3);
  ComplexMatrix block = dichotomic_b ? random_dichotomic(2, rng) : random_hermitian(2, rng);
  const double outside = dichotomic_b ? 1.0 : std::normal_distribution<double>(0.0, 1.0)(rng);
  Eigen::MatrixXcd bm = Eigen::MatrixXcd::Zero(3, 3);
  bm.topLeftCorner(2, 2) = block.eigen();
  bm(2, 2) = outside;

  std::vector<Complex> amps = gaussian_matrix(3, 1, rng).row_major_entries();
  amps[2] = 0.0;
  const ComplexMatrix u0 = fixing_unitary(sd * pd, {0 * pd + 0, 1 * pd + 0}, rng);

  const ComplexMatrix vs = haar_unitary(sd, rng);
  const ComplexMatrix vp = haar_unitary(pd, rng);
  const ComplexMatrix w = kron(vs, vp);
  const ComplexMatrix b = vs * ComplexMatrix(bm) * dagger(vs);
  const QState psi = apply(vs, QState::normalized({3}, amps));
  const QState xi = apply(vp, QState::basis(pd, 0));
  MeasurementModel model({sd}, pd, xi, w * u0 * dagger(w),
                         Observable(random_hermitian(pd, rng), "M"));
  return {std::move(model), Observable(random_hermitian(sd, rng), "A"), Observable(b, "B"), psi,
          "state-dependent"};
}

double record_margin(const InequalityRecord& r) {
  return r.relation == Relation::kGreaterEqual ? r.margin : -r.margin;
}

}  // namespace

AuditCase random_two_qubit_case(Rng& rng) {
  MeasurementModel model({2}, 2, random_probe(2, rng), haar_unitary(4, rng),
                         Observable(random_hermitian(2, rng), "M"));
  Observable a(random_hermitian(2, rng), "A");
  Observable b(random_hermitian(2, rng), "B");
  return {std::move(model), std::move(a), std::move(b), random_state({2}, rng), "two-qubit"};
}

AuditCase random_nondisturbance_case(Rng& rng, std::size_t index) {
  const bool dichotomic = (index / 4) % 2 == 1;
  switch (index % 4) {
    case 0: return generic_case(rng, false);
    case 1: return controlled_case(rng, dichotomic);
    case 2: return state_dependent_case(rng, dichotomic);
    default: return generic_case(rng, true);
  }
}

AuditCase random_qutrit_case(Rng& rng) {
  const std::size_t pd = pick(rng, 2, 3);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::vector<double> values;
  while (values.size() < 3) {
    const double x = uni(rng);
    if (std::all_of(values.begin(), values.end(), [&](double y) { return std::abs(x - y) > 0.1; })) {
      values.push_back(x);
    }
  }
  Observable b(random_with_spectrum(values, rng), "B");
  MeasurementModel model({3}, pd, random_probe(pd, rng), haar_unitary(3 * pd, rng),
                         Observable(random_hermitian(pd, rng), "M"));
  return {std::move(model), Observable(random_hermitian(3, rng), "A"), std::move(b),
          random_state({3}, rng), "qutrit"};
}

MeasurementModel random_bell_local_model(Rng& rng) {
  return local_model({2, 2}, 1, haar_unitary(4, rng), QState::basis(2, 0),
                     Observable(random_dichotomic(2, rng), "M"));
}

bool AuditSummary::all_pass() const {
  for (const auto& p : properties) {
    if (p.universal && !p.ok()) return false;
  }
  return true;
}

AuditSummary run_audit(std::uint64_t seed, std::size_t n) {
  AuditSummary summary;
  summary.seed = seed;
  summary.n = n;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  auto margin_property = [](std::string name) {
    AuditProperty p;
    p.name = std::move(name);
    p.metric = "min margin";
    p.worst = kInf;
    return p;
  };
  auto deviation_property = [](std::string name, std::string metric) {
    AuditProperty p;
    p.name = std::move(name);
    p.metric = std::move(metric);
    p.worst = 0.0;
    return p;
  };

  // Robertson and the universally valid relation on random two-qubit models.
  AuditProperty rob = margin_property("robertson");
  AuditProperty uni = margin_property("universal_relation");
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = case_rng(seed, 10'000'000 + i);
    const AuditCase c = random_two_qubit_case(rng);
    auto run = [&](AuditProperty& p, auto&& eval) {
      ++p.cases;
      try {
        const InequalityRecord r = eval();
        p.worst = std::min(p.worst, record_margin(r));
        if (r.satisfied) ++p.passed;
      } catch (const InternalConsistencyError&) {
        p.worst = std::min(p.worst, -kInf);
      }
    };
    run(rob, [&] { return robertson(c.a, c.b, c.psi); });
    run(uni, [&] { return universal_relation(c.model, c.a, c.b, c.psi); });
  }
  summary.properties.push_back(rob);
  summary.properties.push_back(uni);

  // Stored witness of a violated Heisenberg product relation.
  {
    AuditProperty p = margin_property("heisenberg_witness");
    p.metric = "margin (negative = violated)";
    const MeasurementModel cnot = projective_model(Observable(ops::sigma_z()), 2);
    const double r = 1.0 / std::numbers::sqrt2;
    const QState psi({2}, {r, Complex(0.0, r)});
    const auto rec =
        heisenberg_product(cnot, Observable(ops::sigma_z()), Observable(ops::sigma_x()), psi);
    p.cases = 1;
    p.worst = rec.margin;
    p.passed = rec.satisfied ? 0 : 1;
    summary.properties.push_back(p);
  }

  // Non-disturbance conditions and the measures tied to them.
  AuditProperty eq = deviation_property("condition_equivalence", "disagreements");
  AuditProperty sound = deviation_property("soundness", "max eta_O when properly non-disturbing");
  AuditProperty complete =
      deviation_property("dichotomic_completeness", "cases with eta_O = 0 but disturbing");
  AuditProperty wjd_id = deviation_property("wjd_identity", "max |eta_O^2 - sum (u-v)^2 Re nu|");
  AuditProperty cp = deviation_property("cp_consistency", "max |eta_O^2 - delta_G^2|");
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = case_rng(seed, 20'000'000 + i);
    const AuditCase c = random_nondisturbance_case(rng, i);
    const auto flags = is_properly_nondisturbing(c.model, c.b, c.psi);
    const double eta = eta_o(c.model, c.b, c.psi);

    ++eq.cases;
    if (flags.s_holds == flags.w_holds && flags.w_holds == flags.projector_transfer_holds) {
      ++eq.passed;
    } else {
      eq.worst += 1.0;
    }

    if (flags.verdict) {
      ++sound.cases;
      sound.worst = std::max(sound.worst, eta);
      if (eta <= kZero) ++sound.passed;
    }
    if (c.b.is_dichotomic() && eta <= kZero) {
      ++complete.cases;
      if (flags.verdict) {
        ++complete.passed;
      } else {
        complete.worst += 1.0;
      }
    }

    const QState joint = c.model.initial_state(c.psi);
    const Observable b0 = lift_system(c.b, c.model);
    const Observable bt = heisenberg(b0, c.model);
    const JointDistribution nu = wjd(bt, b0, joint);
    double s = 0.0;
    for (std::size_t u = 0; u < nu.u_values().size(); ++u) {
      for (std::size_t v = 0; v < nu.v_values().size(); ++v) {
        const double d = nu.u_values()[u] - nu.v_values()[v];
        s += d * d * nu.weight(u, v).real();
      }
    }
    const double dev = std::abs(eta * eta - s);
    ++wjd_id.cases;
    wjd_id.worst = std::max(wjd_id.worst, dev);
    if (dev <= 1e-9) ++wjd_id.passed;

    if (commutes_in_state(bt, b0, joint)) {
      const double dg = delta_g(jpd(bt, b0, joint));
      ++cp.cases;
      const double gap = std::abs(eta * eta - dg * dg);
      cp.worst = std::max(cp.worst, gap);
      if (gap <= 1e-9) ++cp.passed;
    }
  }
  for (auto* p : {&eq, &sound, &complete, &wjd_id, &cp}) summary.properties.push_back(*p);

  // Local measurements of one half of a qubit pair.
  AuditProperty sandwich = margin_property("local_sandwich");
  AuditProperty equality = deviation_property("local_equality", "max |delta_G(mu_tau) - eta_O|");
  AuditProperty e91 = margin_property("e91_optimality");
  e91.metric = "min (p_e - p_e_optimal)";
  const std::size_t dims[] = {2, 2};
  const Observable x1(on_factor(ops::sigma_x(), dims, 0), "sigma_x^(1)");
  const Observable x2(on_factor(ops::sigma_x(), dims, 1), "sigma_x^(2)");
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = case_rng(seed, 30'000'000 + i);
    const MeasurementModel model = random_bell_local_model(rng);

    // Arbitrary observables and state: the two-sided bound.
    const Observable b1(on_factor(random_hermitian(2, rng), dims, 0), "B1");
    const ComplexMatrix b2_local = random_hermitian(2, rng);
    const Observable b2(on_factor(b2_local, dims, 1), "B2");
    const QState psi = random_state({2, 2}, rng);
    const QState joint = model.initial_state(psi);
    const Observable b1_0 = lift_system(b1, model), b2_0 = lift_system(b2, model);
    const double d0 = delta_g(jpd(b1_0, b2_0, joint));
    const double dt = delta_g(jpd(heisenberg(b1_0, model), heisenberg(b2_0, model), joint));
    const double eta = eta_o(model, b2, psi);
    ++sandwich.cases;
    const double m = std::min(eta - std::abs(dt - d0), dt + d0 - eta);
    sandwich.worst = std::min(sandwich.worst, m);
    if (m >= -1e-9) ++sandwich.passed;

    // Perfectly correlated start: the disturbance equals the final deviation.
    const QState bell = QState::bell_phi_plus();
    const QState bell_joint = model.initial_state(bell);
    const Observable x1_0 = lift_system(x1, model), x2_0 = lift_system(x2, model);
    const double g0 = delta_g(jpd(x1_0, x2_0, bell_joint));
    const double gt = delta_g(jpd(heisenberg(x1_0, model), heisenberg(x2_0, model), bell_joint));
    const double eta_key = eta_o(model, x2, bell);
    const double dev = std::max(g0, std::abs(gt - eta_key));
    ++equality.cases;
    equality.worst = std::max(equality.worst, dev);
    if (dev <= 1e-9) ++equality.passed;

    const E91Report rep = e91_analyze(model);
    ++e91.cases;
    e91.worst = std::min(e91.worst, rep.p_e - rep.p_e_optimal);
    if (rep.p_e_optimal <= rep.p_e + 1e-9 && branciard_tight(model, bell).satisfied) ++e91.passed;
  }
  // Local measurements that are properly non-disturbing to B2.
  AuditProperty jpd_kept = deviation_property("local_jpd_invariance", "max |mu_tau - mu_0| per cell");
  AuditProperty product = deviation_property("local_product_nondisturbance",
                                             "cases where B1 x B2 is disturbed");
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = case_rng(seed, 60'000'000 + i);
    const Observable b2_local(random_hermitian(2, rng), "B2");
    ComplexMatrix u(4, 4);
    for (const auto& p : b2_local.spectrum().projectors) u = u + kron(p, haar_unitary(2, rng));
    const MeasurementModel model = local_model({2, 2}, 1, u, random_probe(2, rng),
                                               Observable(random_hermitian(2, rng), "M"));
    const ComplexMatrix b1_local = random_hermitian(2, rng);
    const Observable b1(on_factor(b1_local, dims, 0), "B1");
    const Observable b2(on_factor(b2_local.matrix(), dims, 1), "B2");
    const QState psi = random_state({2, 2}, rng);
    const QState joint = model.initial_state(psi);
    if (!is_properly_nondisturbing(model, b2, psi).verdict) {
      ++jpd_kept.cases;
      jpd_kept.worst = kInf;
      continue;
    }
    const Observable b1_0 = lift_system(b1, model), b2_0 = lift_system(b2, model);
    const JointDistribution m0 = jpd(b1_0, b2_0, joint);
    const JointDistribution mt = jpd(heisenberg(b1_0, model), heisenberg(b2_0, model), joint);
    double dev = 0.0;
    for (std::size_t a = 0; a < m0.u_values().size(); ++a) {
      for (std::size_t b = 0; b < m0.v_values().size(); ++b) {
        dev = std::max(dev, std::abs(m0.weight(a, b) - mt.weight(a, b)));
      }
    }
    ++jpd_kept.cases;
    jpd_kept.worst = std::max(jpd_kept.worst, dev);
    if (dev <= 1e-9) ++jpd_kept.passed;

    const Observable prod(kron(b1_local, b2_local.matrix()), "B1 x B2");
    ++product.cases;
    if (is_properly_nondisturbing(model, prod, psi).verdict) {
      ++product.passed;
    } else {
      product.worst += 1.0;
    }
  }
  summary.properties.push_back(jpd_kept);
  summary.properties.push_back(product);
  summary.properties.push_back(sandwich);
  summary.properties.push_back(equality);
  summary.properties.push_back(e91);

  // Locally uniform disturbance.
  AuditProperty dom = margin_property("dominating");
  dom.metric = "min (eta_bar - eta_O)";
  AuditProperty cons = deviation_property("conservation", "max |eta_O(e^{-itB} psi) - eta_O(psi)|");
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = case_rng(seed, 40'000'000 + i);
    const AuditCase c = random_qutrit_case(rng);
    const double eta = eta_o(c.model, c.b, c.psi);
    const double bar = eta_bar(c.model, c.b, c.psi).value;
    ++dom.cases;
    dom.worst = std::min(dom.worst, bar - eta);
    if (bar >= eta - 1e-9) ++dom.passed;

    Rng rng2 = case_rng(seed, 50'000'000 + i);
    const AuditCase d = generic_case(rng2, true);
    const double eta_d = eta_o(d.model, d.b, d.psi);
    double worst = std::abs(eta_bar(d.model, d.b, d.psi).value - eta_d);
    const auto& spec = d.b.spectrum();
    for (int k = 1; k <= 16; ++k) {
      const double t = std::numbers::pi * k / 16.0;
      ComplexMatrix rot(d.b.dimension(), d.b.dimension());
      for (std::size_t j = 0; j < spec.size(); ++j) {
        rot = rot + std::exp(Complex(0.0, -t * spec.eigenvalues[j])) * spec.projectors[j];
      }
      worst = std::max(worst, std::abs(eta_o(d.model, d.b, apply(rot, d.psi)) - eta_d));
    }
    ++cons.cases;
    cons.worst = std::max(cons.worst, worst);
    if (worst <= kIdentityTol) ++cons.passed;
  }
  summary.properties.push_back(dom);
  summary.properties.push_back(cons);
  return summary;
}

}  // namespace qedr
