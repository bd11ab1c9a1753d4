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

#include "qedr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "qedr/errors.hpp"

namespace qedr {

namespace {

std::string shape(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : m_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                static_cast<Eigen::Index>(cols))) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (!m_.allFinite()) throw InvariantError("matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  m_.resize(n, m);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m) {
      throw DimensionError("ragged matrix literal");
    }
    Eigen::Index c = 0;
    for (const auto& v : row) m_(r, c++) = v;
    ++r;
  }
  if (!m_.allFinite()) throw InvariantError("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix(Eigen::MatrixXcd::Identity(k, k));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(entries.size()), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = entries[i];
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::from_row_major(std::size_t rows, std::size_t cols,
                                            std::span<const Complex> entries) {
  if (entries.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries.size()));
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r * cols + c];
    }
  }
  return ComplexMatrix(std::move(m));
}

std::vector<Complex> ComplexMatrix::row_major_entries() const {
  std::vector<Complex> out;
  out.reserve(rows() * cols());
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    for (Eigen::Index c = 0; c < m_.cols(); ++c) out.push_back(m_(r, c));
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

Complex ComplexMatrix::trace() const { return m_.trace(); }

double ComplexMatrix::hermiticity_defect() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  return (m_ - m_.adjoint()).norm();
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

double ComplexMatrix::unitarity_defect() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  return (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).norm();
}

bool ComplexMatrix::is_unitary(double tol) const { return unitarity_defect() <= tol; }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  }
  return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot subtract " + shape(b) + " from " + shape(a));
  }
  return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
  }
  return ComplexMatrix(Eigen::MatrixXcd(a.eigen() * b.eigen()));
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  return ComplexMatrix(Eigen::MatrixXcd(a.eigen().adjoint()));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return ComplexMatrix(Eigen::MatrixXcd(Eigen::kroneckerProduct(a.eigen(), b.eigen())));
}

ComplexMatrix kron_all(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0) return ComplexMatrix::identity(1);
  auto it = factors.begin();
  ComplexMatrix out = *it++;
  for (; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

ComplexMatrix embed(const ComplexMatrix& op, std::span<const std::size_t> dims,
                    std::span<const std::size_t> targets) {
  const std::size_t n_factors = dims.size();
  std::size_t target_dim = 1;
  std::vector<bool> is_target(n_factors, false);
  for (std::size_t t : targets) {
    if (t >= n_factors || is_target[t]) throw DimensionError("invalid embedding target list");
    is_target[t] = true;
    target_dim *= dims[t];
  }
  if (!op.is_square() || op.rows() != target_dim) {
    throw DimensionError("operator " + shape(op) + " does not match target dimension " +
                         std::to_string(target_dim));
  }
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());

  // Split a flat index into (index within targets, index within the rest).
  auto split = [&](std::size_t flat) {
    std::vector<std::size_t> digits(n_factors);
    for (std::size_t k = n_factors; k-- > 0;) {
      digits[k] = flat % dims[k];
      flat /= dims[k];
    }
    std::size_t in_target = 0;
    for (std::size_t t : targets) in_target = in_target * dims[t] + digits[t];
    std::size_t rest = 0;
    for (std::size_t k = 0; k < n_factors; ++k) {
      if (!is_target[k]) rest = rest * dims[k] + digits[k];
    }
    return std::pair{in_target, rest};
  };

  std::vector<std::pair<std::size_t, std::size_t>> parts(total);
  for (std::size_t i = 0; i < total; ++i) parts[i] = split(i);

  const auto& src = op.eigen();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(total),
                                                static_cast<Eigen::Index>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (parts[i].second != parts[j].second) continue;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          src(static_cast<Eigen::Index>(parts[i].first), static_cast<Eigen::Index>(parts[j].first));
    }
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  if (projectors.empty()) return {};
  ComplexMatrix out(projectors.front().rows(), projectors.front().cols());
  for (std::size_t k = 0; k < size(); ++k) out = out + Complex(eigenvalues[k]) * projectors[k];
  return out;
}

std::ptrdiff_t SpectralDecomposition::find(double value, double tol) const {
  double radius = 0.0;
  for (double e : eigenvalues) radius = std::max(radius, std::abs(e));
  const double threshold = cluster_threshold(std::max(radius, std::abs(value)), tol);
  std::ptrdiff_t best = -1;
  double best_gap = threshold;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const double gap = std::abs(eigenvalues[k] - value);
    if (gap <= best_gap) {
      best_gap = gap;
      best = static_cast<std::ptrdiff_t>(k);
    }
  }
  return best;
}

double cluster_threshold(double spectral_radius, double cluster_tol) {
  return cluster_tol * std::max(1.0, spectral_radius);
}

SpectralDecomposition eig_hermitian(const ComplexMatrix& a, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw PreconditionError("cluster_tol must be positive");
  if (!a.is_square()) throw DimensionError("eig_hermitian needs a square matrix, got " + shape(a));
  const double defect = a.hermiticity_defect();
  if (defect > kStructureTol) {
    throw InvariantError("matrix is not Hermitian: ||A - A^dagger|| = " + std::to_string(defect));
  }
  SpectralDecomposition out;
  if (a.rows() == 0) return out;

  const Eigen::MatrixXcd sym = 0.5 * (a.eigen() + a.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw InternalConsistencyError("eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  const double radius = values.cwiseAbs().maxCoeff();
  const double threshold = cluster_threshold(radius, cluster_tol);

  const Eigen::Index n = values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && values(stop) - values(stop - 1) <= threshold) ++stop;
    const auto block = vectors.middleCols(start, stop - start);
    out.eigenvalues.push_back(values.segment(start, stop - start).mean());
    out.projectors.emplace_back(Eigen::MatrixXcd(block * block.adjoint()));
    start = stop;
  }
  return out;
}

}  // namespace qedr
