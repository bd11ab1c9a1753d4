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

#include <cmath>
#include <limits>
#include <numbers>

#include "qedr/errors.hpp"
#include "qedr/linalg.hpp"
#include "qedr/operators.hpp"
#include "qedr/random.hpp"
#include "support/naive.hpp"

namespace qedr {
namespace {

using ops::sigma_x;
using ops::sigma_z;

const Complex I1(0.0, 1.0);

TEST(Matmul, IdentityIsNeutral) {
  const ComplexMatrix x{{1.0, I1}, {2.0, -3.0}};
  EXPECT_LT((matmul(ops::identity(2), x) - x).max_abs(), 1e-15);
}

TEST(Matmul, SigmaXSquaresToIdentity) {
  EXPECT_LT((matmul(sigma_x(), sigma_x()) - ops::identity(2)).max_abs(), 1e-15);
}

TEST(Matmul, SigmaZTimesSigmaXIsISigmaY) {
  const ComplexMatrix expected{{0.0, 1.0}, {-1.0, 0.0}};
  EXPECT_LT((matmul(sigma_z(), sigma_x()) - expected).max_abs(), 1e-15);
  EXPECT_LT((matmul(sigma_z(), sigma_x()) - I1 * ops::sigma_y()).max_abs(), 1e-15);
}

TEST(Matmul, RejectsMismatchedShapes) {
  EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
}

TEST(Matmul, AgreesWithNaiveProduct) {
  Rng rng = case_rng(11, 0);
  const ComplexMatrix a = gaussian_matrix(3, 5, rng), b = gaussian_matrix(5, 2, rng);
  EXPECT_LT(naive::max_diff(matmul(a, b), naive::mul(naive::from(a), naive::from(b))), 1e-12);
}

TEST(Dagger, Examples) {
  EXPECT_EQ((dagger(ops::identity(3)) - ops::identity(3)).max_abs(), 0.0);
  const ComplexMatrix x{{0.0, I1}, {0.0, 0.0}};
  const ComplexMatrix expected{{0.0, 0.0}, {-I1, 0.0}};
  EXPECT_EQ((dagger(x) - expected).max_abs(), 0.0);
  Rng rng = case_rng(11, 1);
  const ComplexMatrix g = gaussian_matrix(3, 4, rng);
  EXPECT_EQ((dagger(dagger(g)) - g).max_abs(), 0.0);
}

TEST(Dagger, ReversesProducts) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng = case_rng(12, k);
    const ComplexMatrix a = gaussian_matrix(3, 4, rng), b = gaussian_matrix(4, 2, rng);
    EXPECT_LT((dagger(matmul(a, b)) - matmul(dagger(b), dagger(a))).max_abs(), 1e-12);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ((kron(ops::identity(2), ops::identity(2)) - ops::identity(4)).max_abs(), 0.0);
  const ComplexMatrix ket00 = ComplexMatrix::column(std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
  const ComplexMatrix ket11 = ComplexMatrix::column(std::vector<Complex>{0.0, 0.0, 0.0, 1.0});
  EXPECT_EQ((kron(sigma_x(), sigma_x()) * ket00 - ket11).max_abs(), 0.0);
  const std::vector<double> d12{1.0, 2.0}, d1122{1.0, 1.0, 2.0, 2.0};
  EXPECT_EQ((kron(ComplexMatrix::diagonal(d12), ops::identity(2)) - ComplexMatrix::diagonal(d1122))
                .max_abs(),
            0.0);
}

TEST(Kron, MixedProductProperty) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng = case_rng(13, k);
    const ComplexMatrix a = gaussian_matrix(2, 3, rng), b = gaussian_matrix(3, 2, rng);
    const ComplexMatrix c = gaussian_matrix(3, 2, rng), d = gaussian_matrix(2, 3, rng);
    EXPECT_LT((kron(a, b) * kron(c, d) - kron(a * c, b * d)).max_abs(), 1e-9);
    EXPECT_LT(naive::max_diff(kron(a, b), naive::kron(naive::from(a), naive::from(b))), 1e-15);
  }
}

TEST(Embed, MatchesKronForOrderedTargets) {
  Rng rng = case_rng(14, 0);
  const ComplexMatrix a = gaussian_matrix(2, 2, rng), b = gaussian_matrix(3, 3, rng);
  const std::size_t dims[] = {2, 3, 2};
  const std::size_t targets[] = {0, 1};
  EXPECT_LT((embed(kron(a, b), dims, targets) - kron_all({a, b, ops::identity(2)})).max_abs(), 1e-14);
  const std::size_t last[] = {2};
  EXPECT_LT((embed(a, dims, last) - kron_all({ops::identity(2), ops::identity(3), a})).max_abs(),
            1e-14);
}

TEST(Embed, ReversedTargetsSwapFactors) {
  Rng rng = case_rng(14, 1);
  const ComplexMatrix a = gaussian_matrix(2, 2, rng), b = gaussian_matrix(2, 2, rng);
  const std::size_t dims[] = {2, 2};
  const std::size_t reversed[] = {1, 0};
  EXPECT_LT((embed(kron(a, b), dims, reversed) - kron(b, a)).max_abs(), 1e-14);
}

TEST(ComplexMatrixInvariants, RejectsNonFiniteEntries) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ComplexMatrix{m}, InvariantError);
}

TEST(ComplexMatrixInvariants, RowMajorEntries) {
  const ComplexMatrix m{{1.0, 2.0}, {3.0, 4.0}};
  const auto e = m.row_major_entries();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[1], Complex(2.0));
  EXPECT_EQ(e[2], Complex(3.0));
  EXPECT_EQ((ComplexMatrix::from_row_major(2, 2, e) - m).max_abs(), 0.0);
}

TEST(EigHermitian, SigmaZ) {
  const auto d = eig_hermitian(sigma_z());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-12);
  EXPECT_LT((d.projectors[0] - ops::unit(2, 1, 1)).max_abs(), 1e-12);
  EXPECT_LT((d.projectors[1] - ops::unit(2, 0, 0)).max_abs(), 1e-12);
}

TEST(EigHermitian, SigmaX) {
  const auto d = eig_hermitian(sigma_x());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_LT((d.projectors[0] - 0.5 * (ops::identity(2) - sigma_x())).max_abs(), 1e-12);
  EXPECT_LT((d.projectors[1] - 0.5 * (ops::identity(2) + sigma_x())).max_abs(), 1e-12);
}

TEST(EigHermitian, SigmaXSigmaXHasRankTwoProjectors) {
  const auto d = eig_hermitian(kron(sigma_x(), sigma_x()));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-12);
  const ComplexMatrix p = 0.5 * (ops::identity(2) + sigma_x());
  const ComplexMatrix m = 0.5 * (ops::identity(2) - sigma_x());
  EXPECT_LT((d.projectors[1] - (kron(p, p) + kron(m, m))).max_abs(), 1e-12);
  EXPECT_NEAR(d.projectors[0].trace().real(), 2.0, 1e-12);
  EXPECT_NEAR(d.projectors[1].trace().real(), 2.0, 1e-12);
}

TEST(EigHermitian, MergesNearlyDegenerateEigenvalues) {
  const std::vector<double> values{1.0, 1.0 + 1e-11, 3.0};
  const auto d = eig_hermitian(ComplexMatrix::diagonal(values));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.eigenvalues[0], 1.0, 1e-10);
  EXPECT_NEAR(d.projectors[0].trace().real(), 2.0, 1e-12);
}

TEST(EigHermitian, RejectsBadInput) {
  EXPECT_THROW(eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), InvariantError);
  EXPECT_THROW(eig_hermitian(ComplexMatrix(2, 3)), DimensionError);
  EXPECT_THROW(eig_hermitian(sigma_z(), 0.0), PreconditionError);
}

// Invariants of the decomposition on random Hermitian matrices, some with
// repeated eigenvalues, and the spectrum against an independent Jacobi solve.
TEST(EigHermitian, RandomDecompositionInvariants) {
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng = case_rng(15, k);
    const std::size_t n = 1 + k % 8;
    ComplexMatrix h = random_hermitian(n, rng);
    if (k % 3 == 0) {
      std::vector<double> values;
      for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<double>(i % 3) - 1.0);
      h = random_with_spectrum(values, rng);
    }
    const auto d = eig_hermitian(h);
    ComplexMatrix sum(n, n);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const ComplexMatrix& p = d.projectors[i];
      EXPECT_LT((p * p - p).max_abs(), 1e-9);
      EXPECT_LT((dagger(p) - p).max_abs(), 1e-9);
      sum = sum + p;
      if (i > 0) {
        EXPECT_GT(d.eigenvalues[i] - d.eigenvalues[i - 1], kDefaultClusterTol);
        EXPECT_LT((d.projectors[i - 1] * p).max_abs(), 1e-9);
      }
    }
    EXPECT_LT((sum - ops::identity(n)).max_abs(), 1e-9);
    EXPECT_LT((d.reconstruct() - h).max_abs(), 1e-9);

    const auto ref = naive::spectrum(naive::from(h));
    ASSERT_EQ(ref.size(), d.size()) << "case " << k;
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_NEAR(ref[i].first, d.eigenvalues[i], 1e-9);
      EXPECT_LT(naive::max_diff(d.projectors[i], ref[i].second), 1e-8);
    }
  }
}

TEST(SpectralDecomposition, FindMatchesWithinTolerance) {
  const auto d = eig_hermitian(sigma_z());
  EXPECT_EQ(d.find(1.0 + 1e-12), 1);
  EXPECT_EQ(d.find(0.5), -1);
}

}  // namespace
}  // namespace qedr
