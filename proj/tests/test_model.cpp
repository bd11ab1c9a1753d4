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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qedr/errors.hpp"
#include "qedr/measures.hpp"
#include "qedr/model.hpp"
#include "qedr/operators.hpp"
#include "qedr/random.hpp"
#include "support/naive.hpp"

namespace qedr {
namespace {

using ops::identity;
using ops::sigma_x;
using ops::sigma_z;

ComplexMatrix cnot_unitary() {
  return kron(ops::unit(2, 0, 0), identity(2)) + kron(ops::unit(2, 1, 1), sigma_x());
}

MeasurementModel cnot_model() {
  return MeasurementModel({2}, 2, QState::basis(2, 0), cnot_unitary(), Observable(sigma_z()));
}

MeasurementModel sigma_theta_model(double theta) {
  const std::size_t dims[] = {2, 2};
  return projective_model(Observable(on_factor(ops::sigma_theta(theta), dims, 1)), 2,
                          std::vector<std::size_t>{2, 2});
}

TEST(QState, ValidatesNormalization) {
  EXPECT_THROW(QState({2}, {1.0, 1.0}), InvariantError);
  EXPECT_THROW(QState({2, 2}, {1.0, 0.0}), DimensionError);
  EXPECT_THROW(QState::normalized({2}, {0.0, 0.0}), InvariantError);
  const QState s = QState::normalized({2}, {3.0, Complex(0.0, 4.0)});
  EXPECT_NEAR(std::abs(s.amplitudes()[1]), 0.8, 1e-15);
}

TEST(QState, BasisAndBell) {
  const std::size_t digits[] = {1, 0};
  const QState s = QState::basis({2, 2}, digits);
  EXPECT_EQ(s.amplitudes()[2], Complex(1.0));
  const QState b = QState::bell_phi_plus();
  EXPECT_NEAR(b.amplitudes()[0].real(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(b.amplitudes()[3].real(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_EQ(b.amplitudes()[1], Complex(0.0));
}

TEST(Observable, RejectsNonHermitianNamingLabel) {
  try {
    Observable(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, "A");
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("'A'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("Hermitian"), std::string::npos);
  }
}

TEST(Observable, CopiesShareSpectrum) {
  const Observable a(sigma_x());
  const Observable b = a;
  EXPECT_EQ(&a.spectrum(), &b.spectrum());
  EXPECT_TRUE(a.is_dichotomic());
  EXPECT_FALSE(Observable(ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0})).is_dichotomic());
}

TEST(MeasurementModel, RejectsNonUnitaryNamingUnitarity) {
  ComplexMatrix u = cnot_unitary();
  u = u + ComplexMatrix::diagonal(std::vector<double>{0.05, 0.0, 0.0, 0.0});
  try {
    MeasurementModel({2}, 2, QState::basis(2, 0), u, Observable(sigma_z()));
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("unitar"), std::string::npos);
  }
}

TEST(MeasurementModel, RejectsDimensionMismatches) {
  EXPECT_THROW(MeasurementModel({2}, 2, QState::basis(3, 0), cnot_unitary(), Observable(sigma_z())),
               DimensionError);
  EXPECT_THROW(MeasurementModel({2}, 2, QState::basis(2, 0), identity(6), Observable(sigma_z())),
               DimensionError);
  EXPECT_THROW(MeasurementModel({2}, 2, QState::basis(2, 0), identity(4), Observable(identity(3))),
               DimensionError);
  EXPECT_THROW(cnot_model().initial_state(QState::basis(3, 0)), DimensionError);
}

TEST(Lift, SystemAndProbe) {
  const MeasurementModel m = cnot_model();
  EXPECT_EQ((lift_system(Observable(sigma_x()), m).matrix() - kron(sigma_x(), identity(2))).max_abs(), 0.0);
  EXPECT_EQ((lift_system(Observable(identity(2)), m).matrix() - identity(4)).max_abs(), 0.0);
  EXPECT_EQ((lift_probe(m.meter(), m).matrix() - kron(identity(2), sigma_z())).max_abs(), 0.0);
  EXPECT_EQ((lift_probe(Observable(identity(2)), m).matrix() - identity(4)).max_abs(), 0.0);

  const MeasurementModel pair = sigma_theta_model(0.3);
  const std::size_t dims[] = {2, 2};
  const Observable z1(on_factor(sigma_z(), dims, 0));
  EXPECT_LT((lift_system(z1, pair).matrix() - kron_all({sigma_z(), identity(2), identity(2)})).max_abs(), 1e-15);
  EXPECT_LT((lift_probe(Observable(sigma_x()), pair).matrix() - kron_all({identity(2), identity(2), sigma_x()}))
                .max_abs(),
            1e-15);
  EXPECT_THROW(lift_system(Observable(identity(3)), m), DimensionError);
}

TEST(Heisenberg, CnotMapsSigmaXToSigmaXSigmaX) {
  const MeasurementModel m = cnot_model();
  const Observable xt = heisenberg(lift_system(Observable(sigma_x()), m), m);
  EXPECT_LT((xt.matrix() - kron(sigma_x(), sigma_x())).max_abs(), 1e-15);
}

TEST(Heisenberg, IdentityInteractionFixesEverything) {
  Rng rng = case_rng(21, 0);
  const MeasurementModel m({3}, 2, QState::basis(2, 0), identity(6), Observable(sigma_z()));
  const Observable x(random_hermitian(6, rng));
  EXPECT_LT((heisenberg(x, m).matrix() - x.matrix()).max_abs(), 1e-14);
}

// Second-qubit σ_x after a projective σ_θ measurement of that qubit. The
// off-diagonal block carries cosθ σ_x − sinθ σ_z, the direction orthogonal
// to σ_θ; at θ = 0 this reduces to σ_x ⊗ σ_x on (qubit 2, probe).
TEST(Heisenberg, SigmaThetaModelTransformsSecondSigmaX) {
  for (double theta : {0.0, 0.3, std::numbers::pi / 4, 1.2}) {
    const MeasurementModel m = sigma_theta_model(theta);
    const std::size_t dims[] = {2, 2};
    const Observable x2(on_factor(sigma_x(), dims, 1));
    const ComplexMatrix xt = heisenberg(lift_system(x2, m), m).matrix();
    const double s = std::sin(theta), c = std::cos(theta);
    const ComplexMatrix ortho = c * sigma_x() - s * sigma_z();
    const ComplexMatrix expected = kron_all({identity(2), s * ops::sigma_theta(theta), identity(2)}) +
                                   kron_all({identity(2), c * ortho, sigma_x()});
    EXPECT_LT((xt - expected).max_abs(), 1e-12) << "theta = " << theta;
  }
}

TEST(ProjectiveModel, SigmaZReproducesCnot) {
  const MeasurementModel m = projective_model(Observable(sigma_z()), 2);
  EXPECT_EQ((m.unitary() - cnot_unitary()).max_abs(), 0.0);
  EXPECT_LT((m.meter().matrix() - sigma_z()).max_abs(), 1e-12);
  EXPECT_EQ(m.probe_state().amplitudes()[0], Complex(1.0));
}

TEST(ProjectiveModel, SigmaThetaOnBellPair) {
  const double theta = 0.7;
  const MeasurementModel m = sigma_theta_model(theta);
  const ComplexMatrix pp = 0.5 * (identity(2) + ops::sigma_theta(theta));
  const ComplexMatrix pm = 0.5 * (identity(2) - ops::sigma_theta(theta));
  const ComplexMatrix expected = kron_all({identity(2), pp, identity(2)}) +
                                 kron_all({identity(2), pm, sigma_x()});
  EXPECT_LT((m.unitary() - expected).max_abs(), 1e-12);
}

TEST(ProjectiveModel, IdentityGivesTrivialInteraction) {
  const MeasurementModel m = projective_model(Observable(identity(2)), 2);
  EXPECT_LT((m.unitary() - identity(4)).max_abs(), 1e-12);
}

TEST(ProjectiveModel, ProbeTooSmall) {
  const Observable a(ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0, 2.0}));
  EXPECT_THROW(projective_model(a, 2), PreconditionError);
}

TEST(ProjectiveModel, MeterReproducesBornRule) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng = case_rng(22, k);
    const std::vector<double> values{-1.5, 0.25, 2.0};
    const Observable a(random_with_spectrum(values, rng));
    const MeasurementModel m = projective_model(a, 3 + k % 2);
    const QState psi = random_state({3}, rng);
    const QState joint = m.initial_state(psi);
    const Observable mt = heisenberg(lift_probe(m.meter(), m), m);
    for (std::size_t i = 0; i < a.spectrum().size(); ++i) {
      const double va = a.spectrum().eigenvalues[i];
      const auto j = mt.spectrum().find(va);
      ASSERT_GE(j, 0);
      const double born = expectation(a.spectrum().projectors[i], psi).real();
      const double meter = expectation(mt.spectrum().projectors[static_cast<std::size_t>(j)], joint).real();
      EXPECT_NEAR(born, meter, 1e-9);
    }
  }
}

TEST(ModelProperties, HeisenbergPreservesSpectrum) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng = case_rng(23, k);
    const MeasurementModel m({2}, 3, random_state({3}, rng), haar_unitary(6, rng),
                             Observable(random_hermitian(3, rng)));
    const Observable x(random_hermitian(2, rng));
    const auto before = naive::spectrum(naive::from(lift_system(x, m).matrix()));
    const auto after = heisenberg(lift_system(x, m), m).spectrum();
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t i = 0; i < after.size(); ++i) {
      EXPECT_NEAR(before[i].first, after.eigenvalues[i], 1e-9);
    }
  }
}

TEST(ModelProperties, LiftedSystemAndProbeCommute) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng = case_rng(24, k);
    const MeasurementModel m({3}, 2, random_state({2}, rng), haar_unitary(6, rng),
                             Observable(random_hermitian(2, rng)));
    const ComplexMatrix x = lift_system(Observable(random_hermitian(3, rng)), m).matrix();
    const ComplexMatrix y = lift_probe(Observable(random_hermitian(2, rng)), m).matrix();
    EXPECT_EQ(commutator(x, y).max_abs(), 0.0);
  }
}

TEST(ModelProperties, LocalModelLeavesOtherFactorUntouched) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng = case_rng(25, k);
    const MeasurementModel m = local_model({2, 2}, 1, haar_unitary(4, rng), random_state({2}, rng),
                                           Observable(random_hermitian(2, rng)));
    EXPECT_TRUE(is_local_to(m, 1));
    EXPECT_FALSE(is_local_to(m, 0));
    const std::size_t dims[] = {2, 2};
    const Observable b1_0 = lift_system(Observable(on_factor(random_hermitian(2, rng), dims, 0)), m);
    EXPECT_LT((heisenberg(b1_0, m).matrix() - b1_0.matrix()).max_abs(), 1e-12);
  }
}

TEST(ModelProperties, LocalModelMatchesExplicitKron) {
  Rng rng = case_rng(26, 0);
  const ComplexMatrix ul = haar_unitary(4, rng);
  const MeasurementModel m = local_model({2, 2}, 1, ul, QState::basis(2, 0), Observable(sigma_z()));
  EXPECT_LT(naive::max_diff(m.unitary(), naive::kron(naive::eye(2), naive::from(ul))), 1e-14);
  const MeasurementModel first = local_model({2, 2}, 0, ul, QState::basis(2, 0), Observable(sigma_z()));
  EXPECT_TRUE(is_local_to(first, 0));
  EXPECT_FALSE(is_local_to(first, 1));
}

}  // namespace
}  // namespace qedr
