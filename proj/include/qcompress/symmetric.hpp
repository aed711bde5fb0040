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

#pragma once

#include <cstdint>
#include <vector>

#include "qcompress/statevec.hpp"

namespace qcompress {

/// Single-qubit state alpha|0> + beta|1>.
class QubitParams {
 public:
  /// Throws ValidationError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  QubitParams(cplx alpha, cplx beta);

  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
  static QubitParams from_bloch(double theta, double phi);

  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  StateVector as_state() const;

 private:
  cplx alpha_;
  cplx beta_;
};

/// Exact binomial coefficient; 0 when k is outside [0, n].
std::uint64_t binomial(int n, int k);

/// ceil(log2(N+1)): the qubits needed to hold N+1 basis states.
int compressed_register_size(int n_copies);

/// psi^{(x)N}
StateVector product_state(const QubitParams& psi, int n_copies);

/// |N;k>: equal positive weight on every basis state with k excitations.
StateVector dicke_state(int n_qubits, int excitations);

/// |C>_k: all zeros for k = 0, otherwise one excitation on qubit k.
StateVector c_state(int n_qubits, int k);

/// |B>_k: the basis state whose index is k.
StateVector b_state(int n_qubits, int k);

/// Coefficients sqrt(C(N,k)) alpha^(N-k) beta^k of psi^{(x)N} in the
/// Dicke basis, k = 0..N.
std::vector<cplx> symmetric_amplitudes(const QubitParams& psi, int n_copies);

}  // namespace qcompress
