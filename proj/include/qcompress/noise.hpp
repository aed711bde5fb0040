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
 * Rotation noise on stored qubits, with and without compression.
 *
 * Every stored qubit is rotated by the same angle about the same Bloch axis.
 * In the uncompressed scenario all N copies are stored. In the compressed
 * scenario the N copies are compressed, only the low register is stored,
 * and the output is decompressed after zero qubits are appended.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/statevec.hpp"
#include "qcompress/symmetric.hpp"

namespace qcompress {

using Axis = std::array<double, 3>;

inline constexpr Axis kAxisX = {1.0, 0.0, 0.0};
inline constexpr Axis kAxisY = {0.0, 1.0, 0.0};
inline constexpr Axis kAxisZ = {0.0, 0.0, 1.0};

/// A pipeline invariant did not hold (e.g. the compressed state leaked).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class RotationNoise {
 public:
  /// The axis must have unit length within 1e-12.
  RotationNoise(Axis axis, double angle);

  const Axis& axis() const { return axis_; }
  double angle() const { return angle_; }

 private:
  Axis axis_;
  double angle_;
};

/// exp(-i angle/2 n.sigma) = cos(angle/2) I - i sin(angle/2) n.sigma
Matrix rotation_unitary(const RotationNoise& noise);

struct PipelineFidelity {
  double global;
  /// Fidelity of the reduced state of qubit 1 with the input qubit.
  double single;
};

/// Closed form for N independently rotated copies.
PipelineFidelity run_uncompressed(int n_copies, const QubitParams& psi,
                                  const RotationNoise& noise);

/// Same quantities by rotating every qubit of the full product state.
PipelineFidelity simulate_uncompressed(int n_copies, const QubitParams& psi,
                                       const RotationNoise& noise);

/// Output of compress, extract, rotate, append zeros, decompress.
StateVector compressed_pipeline_output(int n_copies, const QubitParams& psi,
                                       const RotationNoise& noise);

/// Full simulation of the compressed scenario.
PipelineFidelity run_compressed(int n_copies, const QubitParams& psi,
                                const RotationNoise& noise);

/**
 * The compressed scenario reduced to the stored register.
 *
 * Construction runs the circuit on each Dicke state and the inverse on each
 * stored basis state once. After that a sample only touches 2^n amplitudes,
 * n = ceil(log2(N+1)), which is what makes the Monte Carlo sweeps to N = 16
 * cheap. Agrees with run_compressed to rounding.
 */
class StorageChannel {
 public:
  explicit StorageChannel(int n_copies);

  int n_copies() const { return n_copies_; }
  int register_size() const { return register_size_; }

  PipelineFidelity evaluate(const QubitParams& psi, const RotationNoise& noise) const;

 private:
  int n_copies_;
  int register_size_;
  std::size_t reg_dim_;
  // <x,0...0| U |N;k>, row x, column k.
  std::vector<cplx> encode_;
  // <N;k| U^dagger |x,0...0>, row k, column x.
  std::vector<cplx> overlap_;
  // Tr over qubits 2..N of U^dagger|x,0><y,0|U, as [x][y] -> 2x2 row-major.
  std::vector<std::array<cplx, 4>> reduced_;
};

enum class Scenario { kUncompressed, kCompressed };
enum class Metric { kGlobal, kSingleQubit };

/// A fixed rotation axis, or (nullopt) a uniformly random axis per sample.
struct AxisPolicy {
  std::optional<Axis> fixed;

  static AxisPolicy averaged() { return {}; }
  static AxisPolicy along(Axis a) { return {a}; }
  std::string name() const;
};

struct FidelityRecord {
  Scenario scenario;
  Metric metric;
  int n_copies;
  double phi;
  AxisPolicy axis_policy;
  double mean_fidelity;
  double std_error;
  std::uint64_t samples;
  std::uint64_t rng_seed;
};

std::string to_string(Scenario s);
std::string to_string(Metric m);

/// Independent generator for sample `index`; the result of a sweep does not
/// depend on how samples are scheduled over threads.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform on the Bloch sphere.
QubitParams random_qubit(std::mt19937_64& rng);
/// Uniform on the unit sphere.
Axis random_axis(std::mt19937_64& rng);

/**
 * Monte Carlo mean fidelity over Haar-random input qubits (and random axes
 * under the averaged policy). Sample i draws the input first, then the axis,
 * from sample_rng(seed, i), so scenarios and N values sharing a seed see the
 * same inputs.
 *
 * `channel` is used for the compressed scenario when given and must match N.
 */
FidelityRecord average_fidelity(int n_copies, double phi, Scenario scenario,
                                Metric metric, const AxisPolicy& axis_policy,
                                std::uint64_t samples, std::uint64_t rng_seed,
                                const StorageChannel* channel = nullptr);

}  // namespace qcompress
