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

// Deliberately simple reference implementations used as independent
// oracles in tests. Nothing here calls into the library's linear algebra.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "qedr/linalg.hpp"
#include "qedr/model.hpp"

namespace naive {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<C>(c, 0.0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat from(const qedr::ComplexMatrix& a) {
  Mat m = zeros(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

inline Vec from(const qedr::QState& s) { return s.amplitudes(); }

inline Mat mul(const Mat& a, const Mat& b) {
  Mat m = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

inline Mat add(const Mat& a, const Mat& b, C sb = 1.0) {
  Mat m = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m[i][j] += sb * b[i][j];
  return m;
}

inline Mat scale(const Mat& a, C s) {
  Mat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= s;
  return m;
}

inline Mat dag(const Mat& a) {
  Mat m = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m[j][i] = std::conj(a[i][j]);
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t br = b.size(), bc = b[0].size();
  Mat m = zeros(a.size() * br, a[0].size() * bc);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return m;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec v;
  for (const C& x : a)
    for (const C& y : b) v.push_back(x * y);
  return v;
}

inline Vec act(const Mat& a, const Vec& v) {
  Vec w(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[i] += a[i][j] * v[j];
  return w;
}

inline C inner(const Vec& a, const Vec& b) {
  C s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const Vec& v) { return std::sqrt(std::abs(inner(v, v))); }

inline double max_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

inline double max_diff(const qedr::ComplexMatrix& a, const Mat& b) { return max_diff(from(a), b); }

/// Cyclic Jacobi on the real symmetric embedding [[X, -Y], [Y, X]] of
/// H = X + iY. Each eigenvalue of H appears twice in the embedding.
struct RealEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // columns stored as rows
};

inline RealEigen jacobi(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  RealEigen out;
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(a[i][i]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][i];
    out.vectors.push_back(col);
  }
  return out;
}

/// Distinct eigenvalues (ascending, merged within tol) and their projectors.
inline std::vector<std::pair<double, Mat>> spectrum(const Mat& h, double tol = 1e-7) {
  const std::size_t n = h.size();
  std::vector<std::vector<double>> r(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = r[n + i][n + j] = h[i][j].real();
      r[i][n + j] = -h[i][j].imag();
      r[n + i][j] = h[i][j].imag();
    }
  }
  const RealEigen e = jacobi(r);
  std::vector<std::size_t> order(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return e.values[x] < e.values[y]; });

  std::vector<std::pair<double, Mat>> out;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t idx : order) {
    if (groups.empty() || e.values[idx] - e.values[groups.back().back()] > tol) groups.push_back({});
    groups.back().push_back(idx);
  }
  for (const auto& g : groups) {
    std::vector<std::vector<double>> pr(2 * n, std::vector<double>(2 * n, 0.0));
    double mean = 0.0;
    for (std::size_t idx : g) {
      mean += e.values[idx];
      const auto& w = e.vectors[idx];
      for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) pr[i][j] += w[i] * w[j];
    }
    Mat p = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] = C(pr[i][j], pr[n + i][j]);
    out.emplace_back(mean / static_cast<double>(g.size()), p);
  }
  return out;
}

/// ‖(U†(H⊗I)U − H⊗I)(ψ⊗ξ)‖ evaluated with plain loops.
inline double disturbance(const qedr::MeasurementModel& m, const Mat& b, const Vec& psi) {
  const Mat u = from(m.unitary());
  const Mat b0 = kron(b, eye(m.probe_dim()));
  const Mat bt = mul(dag(u), mul(b0, u));
  return norm(act(add(bt, b0, -1.0), kron(psi, from(m.probe_state()))));
}

/// ‖(U†(I⊗M)U − A⊗I)(ψ⊗ξ)‖ evaluated with plain loops.
inline double error(const qedr::MeasurementModel& m, const Mat& a, const Vec& psi) {
  const Mat u = from(m.unitary());
  const Mat m0 = kron(eye(m.system_dim()), from(m.meter().matrix()));
  const Mat mt = mul(dag(u), mul(m0, u));
  return norm(act(add(mt, kron(a, eye(m.probe_dim())), -1.0), kron(psi, from(m.probe_state()))));
}

/// ⟨Ψ|P^X(u) P^Y(v)|Ψ⟩ over the naive spectra, keyed by (u, v).
inline std::map<std::pair<double, double>, C> joint(const Mat& x, const Mat& y, const Vec& psi) {
  std::map<std::pair<double, double>, C> out;
  for (const auto& [u, pu] : spectrum(x))
    for (const auto& [v, pv] : spectrum(y)) out[{u, v}] = inner(psi, act(mul(pu, pv), psi));
  return out;
}

}  // namespace naive
