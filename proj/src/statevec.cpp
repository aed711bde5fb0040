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

#include "qcompress/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qcompress {

namespace {

void check_register_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw PositionError("register size " + std::to_string(n_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

void check_distinct(std::vector<int> positions, const std::string& what) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) !=
      positions.end()) {
    throw PositionError(what + ": repeated qubit position");
  }
  if (!positions.empty() && positions.front() < 1) {
    throw PositionError(what + ": qubit positions are 1-based");
  }
}

std::uint64_t bit_of(int position) {
  return std::uint64_t{1} << (position - 1);
}

// Spreads the bits of `compact` over the positions not in `sorted_bits`
// (0-based bit indices, ascending), leaving those positions zero.
std::uint64_t deposit(std::uint64_t compact, std::span<const int> sorted_bits) {
  for (int bit : sorted_bits) {
    const std::uint64_t low = compact & ((std::uint64_t{1} << bit) - 1);
    compact = ((compact >> bit) << (bit + 1)) | low;
  }
  return compact;
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t dim, std::vector<cplx> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("matrix data does not match dimension " +
                         std::to_string(dim_));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (rhs.dim_ != dim_) throw DimensionError("matrix product dimension mismatch");
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx lhs = (*this)(r, k);
      if (lhs == cplx{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += lhs * rhs(k, c);
    }
  return out;
}

double Matrix::unitarity_deviation() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      cplx acc = r == c ? cplx{-1.0} : cplx{};
      for (std::size_t k = 0; k < dim_; ++k)
        acc += std::conj((*this)(k, r)) * (*this)(k, c);
      worst = std::max(worst, std::abs(acc));
    }
  return worst;
}

// ------------------------------------------------------------------ Gate

Gate Gate::dense(std::string label, Matrix matrix, std::vector<int> targets) {
  check_distinct(targets, "gate " + label);
  if (targets.empty() || targets.size() > 16 ||
      matrix.dim() != (std::size_t{1} << targets.size())) {
    throw ValidationError("gate " + label + ": matrix dimension " +
                          std::to_string(matrix.dim()) + " does not fit " +
                          std::to_string(targets.size()) + " targets");
  }
  const double dev = matrix.unitarity_deviation();
  if (!(dev <= kUnitarityTol)) {
    throw ValidationError("gate " + label + " is not unitary (deviation " +
                          std::to_string(dev) + ")");
  }
  Gate g;
  g.label_ = std::move(label);
  g.targets_ = std::move(targets);
  g.op_ = std::move(matrix);
  return g;
}

Gate Gate::mcx(std::vector<int> positive, std::vector<int> negative, int target,
               std::string label) {
  std::vector<int> all = positive;
  all.insert(all.end(), negative.begin(), negative.end());
  all.push_back(target);
  check_distinct(all, "gate " + label);
  Gate g;
  g.label_ = std::move(label);
  g.targets_ = std::move(all);
  g.op_ = Mcx{std::move(positive), std::move(negative), target};
  return g;
}

int Gate::max_position() const {
  return *std::max_element(targets_.begin(), targets_.end());
}

const Matrix& Gate::matrix() const {
  if (const auto* m = std::get_if<Matrix>(&op_)) return *m;
  throw std::logic_error("gate " + label_ + " has no dense matrix");
}

const Mcx& Gate::mcx_spec() const {
  if (const auto* m = std::get_if<Mcx>(&op_)) return *m;
  throw std::logic_error("gate " + label_ + " is not a controlled NOT");
}

Gate Gate::adjoint(std::string label) const {
  Gate g = *this;
  g.label_ = std::move(label);
  if (auto* m = std::get_if<Matrix>(&g.op_)) *m = m->adjoint();
  return g;
}

double Gate::unitarity_deviation() const {
  // A controlled NOT is a permutation of the computational basis.
  if (is_mcx()) return 0.0;
  return matrix().unitarity_deviation();
}

// ----------------------------------------------------------- StateVector

StateVector::StateVector(int n_qubits) {
  check_register_size(n_qubits);
  n_qubits_ = n_qubits;
  amplitudes_.assign(std::size_t{1} << n_qubits, cplx{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw PositionError("basis index " + std::to_string(index) +
                        " outside a " + std::to_string(n_qubits) +
                        "-qubit register");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t len = amplitudes.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw DimensionError("amplitude count " + std::to_string(len) +
                         " is not 2^n with n >= 1");
  }
  StateVector s;
  s.n_qubits_ = std::countr_zero(len);
  check_register_size(s.n_qubits_);
  s.amplitudes_ = std::move(amplitudes);
  const double norm2 = s.norm_squared();
  if (!(std::abs(norm2 - 1.0) <= kStateTol)) {
    throw ValidationError("state is not normalized (|psi|^2 = " +
                          std::to_string(norm2) + ")");
  }
  return s;
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  double norm2 = 0.0;
  for (const cplx& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DegenerateInputError("cannot normalize a zero or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (cplx& a : amplitudes) a *= scale;
  return from_amplitudes(std::move(amplitudes));
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const cplx& a : amplitudes_) acc += std::norm(a);
  return acc;
}

void StateVector::apply(const Gate& gate) {
  if (gate.max_position() > n_qubits_) {
    throw PositionError("gate " + gate.label() + " targets qubit " +
                        std::to_string(gate.max_position()) + " of a " +
                        std::to_string(n_qubits_) + "-qubit state");
  }

  if (gate.is_mcx()) {
    const Mcx& spec = gate.mcx_spec();
    std::uint64_t pos_mask = 0;
    std::uint64_t neg_mask = 0;
    for (int p : spec.positive) pos_mask |= bit_of(p);
    for (int p : spec.negative) neg_mask |= bit_of(p);
    const std::uint64_t flip = bit_of(spec.target);
    const std::uint64_t care = pos_mask | neg_mask | flip;
    // Visit each pair once, from the member with the target bit clear.
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
      if ((i & care) == pos_mask) std::swap(amplitudes_[i], amplitudes_[i | flip]);
    }
    return;
  }

  const Matrix& m = gate.matrix();
  const auto targets = gate.targets();
  const std::size_t k = targets.size();
  const std::size_t local_dim = std::size_t{1} << k;

  std::vector<std::uint64_t> offsets(local_dim, 0);
  for (std::size_t local = 0; local < local_dim; ++local)
    for (std::size_t j = 0; j < k; ++j)
      if (local >> j & 1U) offsets[local] |= bit_of(targets[j]);

  std::vector<int> sorted_bits;
  sorted_bits.reserve(k);
  for (int t : targets) sorted_bits.push_back(t - 1);
  std::sort(sorted_bits.begin(), sorted_bits.end());

  std::vector<cplx> in(local_dim);
  const std::uint64_t cosets = amplitudes_.size() >> k;
  for (std::uint64_t c = 0; c < cosets; ++c) {
    const std::uint64_t base = deposit(c, sorted_bits);
    for (std::size_t l = 0; l < local_dim; ++l) in[l] = amplitudes_[base | offsets[l]];
    for (std::size_t r = 0; r < local_dim; ++r) {
      cplx acc{};
      for (std::size_t l = 0; l < local_dim; ++l) acc += m(r, l) * in[l];
      amplitudes_[base | offsets[r]] = acc;
    }
  }
}

// -------------------------------------------------------- DensityMatrix2

DensityMatrix2::DensityMatrix2(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.dim() != 2) throw DimensionError("density matrix must be 2x2");
  const cplx off = matrix_(0, 1) - std::conj(matrix_(1, 0));
  if (std::abs(off) > kUnitarityTol ||
      std::abs(matrix_(0, 0).imag()) > kUnitarityTol ||
      std::abs(matrix_(1, 1).imag()) > kUnitarityTol) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const double p0 = matrix_(0, 0).real();
  const double p1 = matrix_(1, 1).real();
  if (std::abs(p0 + p1 - 1.0) > kStateTol) {
    throw ValidationError("density matrix trace " + std::to_string(p0 + p1) +
                          " is not 1");
  }
  // Eigenvalues of a 2x2 Hermitian matrix: (t -/+ sqrt((p0-p1)^2 + 4|c|^2))/2
  const double spread =
      std::sqrt((p0 - p1) * (p0 - p1) + 4.0 * std::norm(matrix_(0, 1)));
  if ((p0 + p1 - spread) / 2.0 < -kStateTol) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix2 DensityMatrix2::pure(const StateVector& qubit) {
  if (qubit.n_qubits() != 1) throw DimensionError("expected a one-qubit state");
  Matrix m(2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = qubit[r] * std::conj(qubit[c]);
  return DensityMatrix2(std::move(m));
}

// ------------------------------------------------------------ operations

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("inner product of " + std::to_string(a.n_qubits()) +
                         "- and " + std::to_string(b.n_qubits()) +
                         "-qubit states");
  }
  cplx acc{};
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  for (std::size_t i = 0; i < lhs.size(); ++i) acc += std::conj(lhs[i]) * rhs[i];
  return acc;
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

DensityMatrix2 reduced_single_qubit(const StateVector& state, int qubit) {
  if (qubit < 1 || qubit > state.n_qubits()) {
    throw PositionError("qubit " + std::to_string(qubit) + " outside a " +
                        std::to_string(state.n_qubits()) + "-qubit state");
  }
  const std::uint64_t mask = bit_of(qubit);
  const auto amps = state.amplitudes();
  double p0 = 0.0;
  double p1 = 0.0;
  cplx coherence{};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const cplx a0 = amps[i];
    const cplx a1 = amps[i | mask];
    p0 += std::norm(a0);
    p1 += std::norm(a1);
    coherence += a0 * std::conj(a1);
  }
  Matrix m(2);
  m(0, 0) = p0;
  m(1, 1) = p1;
  m(0, 1) = coherence;
  m(1, 0) = std::conj(coherence);
  return DensityMatrix2(std::move(m));
}

double qubit_fidelity(const DensityMatrix2& rho, const StateVector& psi) {
  if (psi.n_qubits() != 1) throw DimensionError("expected a one-qubit state");
  cplx acc{};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) acc += std::conj(psi[r]) * rho(r, c) * psi[c];
  return acc.real();
}

StateVector append_zero_qubits(const StateVector& state, int m) {
  if (m < 0) throw ValidationError("cannot append a negative qubit count");
  if (m == 0) return state;
  std::vector<cplx> amps(state.dim() << m);
  std::copy(state.amplitudes().begin(), state.amplitudes().end(), amps.begin());
  return StateVector::from_amplitudes(std::move(amps));
}

ExtractedRegister extract_low_register(const StateVector& state, int n_keep) {
  if (n_keep < 1 || n_keep > state.n_qubits()) {
    throw PositionError("cannot keep " + std::to_string(n_keep) + " of " +
                        std::to_string(state.n_qubits()) + " qubits");
  }
  const std::size_t kept_dim = std::size_t{1} << n_keep;
  const auto amps = state.amplitudes();
  std::vector<cplx> kept(amps.begin(), amps.begin() + kept_dim);
  double kept_weight = 0.0;
  for (const cplx& a : kept) kept_weight += std::norm(a);
  double leak = 0.0;
  for (std::size_t i = kept_dim; i < amps.size(); ++i) leak += std::norm(amps[i]);
  if (kept_weight < 1e-24) {
    throw DegenerateInputError("no support with the discarded qubits in |0>");
  }
  return {StateVector::normalized(std::move(kept)), leak};
}

}  // namespace qcompress
