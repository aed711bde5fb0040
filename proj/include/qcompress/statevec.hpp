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

/**
 * @file
 * Dense state vectors, gates and the gate application engine.
 *
 * Qubit convention used throughout the library: qubits are numbered
 * 1..N from left to right as written in a ket, and qubit j is stored in
 * bit (j-1) of the basis index. Qubit 1 is therefore the least
 * significant bit, and the ket |10> (qubit 1 excited) has index 1.
 *
 * Gate-local matrices follow the same rule: the first target of a gate
 * is the least significant bit of the local index.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcompress {

using cplx = std::complex<double>;

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kStateTol = 1e-10;
/// Largest register the dense engine accepts.
inline constexpr int kMaxQubits = 26;

/// A qubit position or target list is invalid for the state it is used on.
class PositionError : public std::out_of_range {
 public:
  explicit PositionError(const std::string& what) : std::out_of_range(what) {}
};

/// An input violates a documented invariant (unitarity, normalization, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Two operands live in spaces of different dimension.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// The input has no support on the branch an operation conditions on.
class DegenerateInputError : public std::domain_error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : std::domain_error(what) {}
};

/// Square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<cplx> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  cplx operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  Matrix operator*(const Matrix& rhs) const;
  /// max |(M^dagger M - I)_{ij}|
  double unitarity_deviation() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Mixed-polarity multi-controlled NOT. Applied as a basis permutation.
struct Mcx {
  std::vector<int> positive;
  std::vector<int> negative;
  int target = 0;

  friend bool operator==(const Mcx&, const Mcx&) = default;
};

/**
 * A unitary bound to an ordered list of 1-based target qubits.
 *
 * Dense gates carry a 2^k x 2^k matrix that is checked for unitarity on
 * construction. Multi-controlled NOTs are stored by their control sets and
 * applied by conditional amplitude swaps, so their arity is not limited by
 * matrix size.
 */
class Gate {
 public:
  static Gate dense(std::string label, Matrix matrix, std::vector<int> targets);
  static Gate mcx(std::vector<int> positive, std::vector<int> negative,
                  int target, std::string label = "MCX");

  const std::string& label() const { return label_; }
  /// Dense: the matrix targets in local-bit order. MCX: positive controls,
  /// then negative controls, then the target.
  std::span<const int> targets() const { return targets_; }
  int arity() const { return static_cast<int>(targets_.size()); }
  int max_position() const;

  bool is_mcx() const { return std::holds_alternative<Mcx>(op_); }
  /// Throws std::logic_error for MCX gates.
  const Matrix& matrix() const;
  /// Throws std::logic_error for dense gates.
  const Mcx& mcx_spec() const;

  Gate adjoint(std::string label) const;
  double unitarity_deviation() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate() = default;
  std::string label_;
  std::vector<int> targets_;
  std::variant<Matrix, Mcx> op_;
};

/// Dense amplitude array over n qubits. Normalized after every public
/// operation.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Length must be a power of two and the norm must be 1 within kStateTol.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);
  /// Rescales to unit norm; throws DegenerateInputError on a zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t index) const { return amplitudes_[index]; }
  double norm_squared() const;

  /// In-place gate application. Used by the circuit runner to avoid copies.
  void apply(const Gate& gate);

  /// Exact amplitude equality.
  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector() = default;
  int n_qubits_ = 0;
  std::vector<cplx> amplitudes_;
};

/// 2x2 density matrix of one qubit.
class DensityMatrix2 {
 public:
  /// Checks Hermiticity (1e-12), unit trace (1e-10) and eigenvalues >= -1e-10.
  explicit DensityMatrix2(Matrix matrix);

  static DensityMatrix2 pure(const StateVector& qubit);

  const Matrix& matrix() const { return matrix_; }
  cplx operator()(std::size_t row, std::size_t col) const {
    return matrix_(row, col);
  }

 private:
  Matrix matrix_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

/// <a|b>, with a conjugated.
cplx inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2
double fidelity_pure(const StateVector& a, const StateVector& b);

/// Partial trace over every qubit except `qubit`.
DensityMatrix2 reduced_single_qubit(const StateVector& state, int qubit);

/// <psi|rho|psi> for a one-qubit pure state.
double qubit_fidelity(const DensityMatrix2& rho, const StateVector& psi);

/// state (x) |0>^m, the new qubits taking positions n+1..n+m.
StateVector append_zero_qubits(const StateVector& state, int m);

struct ExtractedRegister {
  StateVector state;
  /// Probability weight found on components with any discarded qubit excited.
  double leak;
};

/// Conditions qubits n_keep+1..N on |0> and renormalizes.
ExtractedRegister extract_low_register(const StateVector& state, int n_keep);

}  // namespace qcompress
