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

// Dense complex matrices and Hermitian spectral decomposition.
//
// ComplexMatrix is an immutable value type over Eigen::MatrixXcd. Every
// operator used by the library (states as columns, unitaries, observables)
// is carried by it. Composite spaces use the Kronecker convention where the
// left factor's index varies slowest.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qedr {

using Complex = std::complex<double>;

/// Clustering tolerance for eigenvalues, relative to max(1, spectral radius).
inline constexpr double kDefaultClusterTol = 1e-8;

/// Tolerance used to validate Hermiticity, unitarity and normalization.
inline constexpr double kStructureTol = 1e-9;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Wraps an Eigen matrix; throws InvariantError on NaN/Inf entries.
  explicit ComplexMatrix(Eigen::MatrixXcd m);
  /// Row-major literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column vector from amplitudes.
  static ComplexMatrix column(std::span<const Complex> entries);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Row-major flat entries; throws DimensionError if the size is wrong.
  static ComplexMatrix from_row_major(std::size_t rows, std::size_t cols,
                                      std::span<const Complex> entries);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const { return m_.rows() == m_.cols(); }

  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  const Eigen::MatrixXcd& eigen() const { return m_; }

  std::vector<Complex> row_major_entries() const;

  double frobenius_norm() const { return m_.norm(); }
  /// Largest absolute entry.
  double max_abs() const;
  Complex trace() const;

  /// ‖A − A†‖_F.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kStructureTol) const;
  /// ‖U†U − I‖_F; infinite for non-square input.
  double unitarity_defect() const;
  bool is_unitary(double tol = kStructureTol) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

 private:
  Eigen::MatrixXcd m_;
};

/// Standard matrix product; DimensionError if a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list, left to right.
ComplexMatrix kron_all(std::initializer_list<ComplexMatrix> factors);

/// [a, b] = ab − ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embeds `op`, acting on the tensor factors listed in `targets` (in that
/// order), into the full space with factor dimensions `dims`. Identity acts on
/// every other factor.
ComplexMatrix embed(const ComplexMatrix& op, std::span<const std::size_t> dims,
                    std::span<const std::size_t> targets);

/// Eigenvalues grouped into clusters with the orthogonal projector onto each
/// cluster's eigenspace. Eigenvalues ascend.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<ComplexMatrix> projectors;

  std::size_t size() const { return eigenvalues.size(); }
  ComplexMatrix reconstruct() const;
  /// Index of the cluster whose value is within `tol` of `value`, or -1.
  std::ptrdiff_t find(double value, double tol = kDefaultClusterTol) const;
};

/// Absolute eigenvalue merge threshold for a spectrum with the given radius.
double cluster_threshold(double spectral_radius, double cluster_tol = kDefaultClusterTol);

/// Spectral decomposition of a Hermitian matrix. Eigenvalues whose
/// consecutive gaps fall within the cluster threshold are merged; the
/// cluster value is the mean of its members and its projector the sum of
/// their rank-one projectors.
/// Throws InvariantError if ‖a − a†‖ > 1e-9, PreconditionError if
/// cluster_tol ≤ 0.
SpectralDecomposition eig_hermitian(const ComplexMatrix& a,
                                    double cluster_tol = kDefaultClusterTol);

}  // namespace qedr
