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

#include "qcompress/symmetric.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qcompress {

namespace {

void check_count(int n_qubits) {
  if (n_qubits < 1) {
    throw ValidationError("qubit count must be positive, got " +
                          std::to_string(n_qubits));
  }
}

void check_index(int n_qubits, int k, const char* what) {
  check_count(n_qubits);
  if (k < 0 || k > n_qubits) {
    throw PositionError(std::string(what) + " index " + std::to_string(k) +
                        " outside [0, " + std::to_string(n_qubits) + "]");
  }
}

__extension__ using uint128 = unsigned __int128;

// Repeated multiplication keeps 0^0 = 1 and exact zeros for |0>, |1>.
cplx ipow(cplx base, int exponent) {
  cplx acc = 1.0;
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

}  // namespace

QubitParams::QubitParams(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(norm2 - 1.0) <= kUnitarityTol)) {
    throw ValidationError("qubit amplitudes are not normalized (|a|^2+|b|^2 = " +
                          std::to_string(norm2) + ")");
  }
}

QubitParams QubitParams::from_bloch(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

StateVector QubitParams::as_state() const {
  return StateVector::from_amplitudes({alpha_, beta_});
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Each partial product C(n-k+i, i) is an integer, so the division is exact.
  uint128 acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

int compressed_register_size(int n_copies) {
  check_count(n_copies);
  return std::bit_width(static_cast<unsigned>(n_copies));
}

StateVector product_state(const QubitParams& psi, int n_copies) {
  check_count(n_copies);
  std::vector<cplx> powers(static_cast<std::size_t>(n_copies) + 1);
  for (int w = 0; w <= n_copies; ++w)
    powers[w] = ipow(psi.alpha(), n_copies - w) * ipow(psi.beta(), w);
  std::vector<cplx> amps(std::size_t{1} << n_copies);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = powers[std::popcount(i)];
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector dicke_state(int n_qubits, int excitations) {
  check_index(n_qubits, excitations, "excitation");
  const double weight =
      1.0 / std::sqrt(static_cast<double>(binomial(n_qubits, excitations)));
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (std::popcount(i) == excitations) amps[i] = weight;
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector c_state(int n_qubits, int k) {
  check_index(n_qubits, k, "c_state");
  return StateVector::basis(n_qubits, k == 0 ? 0 : std::uint64_t{1} << (k - 1));
}

StateVector b_state(int n_qubits, int k) {
  check_index(n_qubits, k, "b_state");
  return StateVector::basis(n_qubits, static_cast<std::uint64_t>(k));
}

std::vector<cplx> symmetric_amplitudes(const QubitParams& psi, int n_copies) {
  check_count(n_copies);
  std::vector<cplx> out(static_cast<std::size_t>(n_copies) + 1);
  for (int k = 0; k <= n_copies; ++k) {
    out[k] = std::sqrt(static_cast<double>(binomial(n_copies, k))) *
             ipow(psi.alpha(), n_copies - k) * ipow(psi.beta(), k);
  }
  return out;
}

}  // namespace qcompress
