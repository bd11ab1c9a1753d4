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

// Seeded random matrices and states for audits and randomized scenarios.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qedr/linalg.hpp"
#include "qedr/model.hpp"

namespace qedr {

using Rng = std::mt19937_64;

/// Generator for case `index` of a run seeded with `seed`; distinct cases get
/// independent streams and the same (seed, index) always gives the same one.
Rng case_rng(std::uint64_t seed, std::uint64_t index);

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

/// Uniformly distributed pure state on the given factor dimensions.
QState random_state(std::vector<std::size_t> dims, Rng& rng);

/// (G + G†)/2 for Gaussian G.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// V diag(values) V† for Haar V.
ComplexMatrix random_with_spectrum(const std::vector<double>& values, Rng& rng);

/// V diag(±1) V† with random signs (at least one of each when n ≥ 2).
ComplexMatrix random_dichotomic(std::size_t n, Rng& rng);

}  // namespace qedr
