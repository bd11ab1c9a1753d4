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

#include "qedr/random.hpp"

#include <cmath>
#include <utility>

namespace qedr {

Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Complex(re, im);
    }
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(n, n, rng).eigen();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  return ComplexMatrix(std::move(q));
}

QState random_state(std::vector<std::size_t> dims, Rng& rng) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  const auto g = gaussian_matrix(n, 1, rng).row_major_entries();
  return QState::normalized(std::move(dims), g);
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  return Complex(0.5) * (g + dagger(g));
}

ComplexMatrix random_with_spectrum(const std::vector<double>& values, Rng& rng) {
  const ComplexMatrix v = haar_unitary(values.size(), rng);
  const ComplexMatrix h = v * ComplexMatrix::diagonal(values) * dagger(v);
  return Complex(0.5) * (h + dagger(h));
}

ComplexMatrix random_dichotomic(std::size_t n, Rng& rng) {
  std::vector<double> signs(n, 1.0);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : signs) s = coin(rng) ? 1.0 : -1.0;
  if (n >= 2) {
    signs[0] = 1.0;
    signs[1] = -1.0;
  }
  return random_with_spectrum(signs, rng);
}

}  // namespace qedr
