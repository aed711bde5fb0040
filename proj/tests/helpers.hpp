// Copyright 2026 The qcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only generators and brute-force oracles. Nothing here calls into the
// gate application engine.

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qcompress/statevec.hpp"
#include "qcompress/symmetric.hpp"

namespace qcompress::testing {

inline std::vector<cplx> gaussian_vector(std::mt19937_64& rng, std::size_t len) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(len);
  for (cplx& x : v) x = {g(rng), g(rng)};
  return v;
}

inline StateVector random_state(std::mt19937_64& rng, int n_qubits) {
  return StateVector::normalized(gaussian_vector(rng, std::size_t{1} << n_qubits));
}

inline QubitParams random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double theta = std::acos(1.0 - 2.0 * u(rng));
  const double phi = 2.0 * std::numbers::pi * u(rng);
  return QubitParams::from_bloch(theta, phi);
}

/// Haar unitary: Gram-Schmidt on a complex Gaussian matrix (column-wise).
inline Matrix haar_unitary(std::mt19937_64& rng, std::size_t dim) {
  std::vector<std::vector<cplx>> cols;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<cplx> v = gaussian_vector(rng, dim);
    for (const auto& q : cols) {
      cplx proj{};
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q[i];
    }
    double norm = 0.0;
    for (const cplx& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (cplx& x : v) x /= norm;
    cols.push_back(std::move(v));
  }
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = cols[c][r];
  return m;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  return max_abs_diff(a.amplitudes(), b.amplitudes());
}

/// Full 2^N x 2^N density matrix |s><s|, then a naive partial trace.
inline Matrix partial_trace_oracle(const StateVector& s, int qubit) {
  const std::size_t dim = s.dim();
  Matrix full(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) full(r, c) = s[r] * std::conj(s[c]);
  Matrix out(2);
  const std::size_t bit = std::size_t{1} << (qubit - 1);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~bit) != (c & ~bit)) continue;
      out((r & bit) ? 1 : 0, (c & bit) ? 1 : 0) += full(r, c);
    }
  return out;
}

/// Expands a k-qubit gate matrix to the full 2^N operator by enumerating
/// matrix elements: <i|G|j> is nonzero only when i and j agree off-target.
inline std::vector<cplx> apply_by_kron_oracle(const StateVector& s, const Matrix& m,
                                              const std::vector<int>& targets) {
  const std::size_t dim = s.dim();
  std::vector<cplx> out(dim);
  std::size_t target_mask = 0;
  for (int t : targets) target_mask |= std::size_t{1} << (t - 1);
  auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (std::size_t j = 0; j < targets.size(); ++j)
      if (idx >> (targets[j] - 1) & 1U) l |= std::size_t{1} << j;
    return l;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~target_mask) != (j & ~target_mask)) continue;
      out[i] += m(local(i), local(j)) * s[j];
    }
  return out;
}

}  // namespace qcompress::testing
