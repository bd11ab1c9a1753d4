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

// Named qubit operators and kets.

#pragma once

#include <cmath>
#include <cstddef>

#include "qedr/linalg.hpp"

namespace qedr::ops {

inline ComplexMatrix identity(std::size_t n = 2) { return ComplexMatrix::identity(n); }

inline ComplexMatrix sigma_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

inline ComplexMatrix sigma_y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }

inline ComplexMatrix sigma_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

/// cos(θ)·σ_z + sin(θ)·σ_x
inline ComplexMatrix sigma_theta(double theta) {
  return Complex(std::cos(theta)) * sigma_z() + Complex(std::sin(theta)) * sigma_x();
}

/// |i⟩⟨j| on a `dim`-level space.
inline ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return ComplexMatrix(std::move(m));
}

/// Cyclic shift |i⟩ ↦ |i+1 mod dim⟩.
inline ComplexMatrix cyclic_shift(std::size_t dim) {
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) out = out + unit(dim, (i + 1) % dim, i);
  return out;
}

}  // namespace qedr::ops
