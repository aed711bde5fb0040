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
 * Synthesis of the exact compression circuit for N identical qubits.
 *
 * Stage 1 maps the Dicke state |N;k> to the single-excitation state |C>_k
 * using one two-qubit gate V and (N+1)(N-2)/2 three-qubit gates. Stage 2
 * re-encodes |C>_k as |B>_k, the basis state with index k, using CNOTs and
 * mixed-polarity multi-controlled NOTs. Afterwards every symmetric input is
 * supported on the first ceil(log2(N+1)) qubits only.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcompress/statevec.hpp"

namespace qcompress {

/// Pascal-triangle weights of U(a,b), as exact integers (squared amplitudes).
struct UWeights {
  std::uint64_t alpha101_sq;  // C(a-1, b)
  std::uint64_t alpha010_sq;  // C(a-1, b+1)
  std::uint64_t beta010_sq;   // C(a, b+1)
};
UWeights u_weights(int a, int b);

/// Two-qubit seed gate on qubits (1, 2).
Gate gate_V();

/**
 * Three-qubit gate on targets (b, b+1, a), 1 <= b <= a-2.
 *
 * Merges alpha101|10>_b|1>_a + alpha010|01>_b|0>_a into |01>_b|0>_a and
 * fixes |00>_b|0>_a, |10>_b|0>_a, |00>_b|1>_a, |01>_b|1>_a. The orthogonal
 * combination goes to |10>_b|1>_a; |11>_b|x>_a are untouched.
 */
Gate gate_U(int a, int b);

/// Fault injected into gate_W, used to check that verification catches it.
enum class WFault { kNone, kSignFlip };

/**
 * Three-qubit gate on targets (1, a-1, a), a >= 3.
 *
 * |0>_1|11> goes to |0>_1|01>; |0>_1|01> + sqrt(a-1)|1>_1|00> (normalized)
 * goes to |1>_1|00>; the orthogonal combination goes to |0>_1|11>.
 */
Gate gate_W(int a, WFault fault = WFault::kNone);

/// Controlled NOT expressed as an MCX with one positive control.
Gate gate_CX(int control, int target);

/// Throws PositionError when the position lists overlap.
Gate mixed_mcx(std::vector<int> positive_controls,
               std::vector<int> negative_controls, int target);

/// Defining parameters of each circuit gate; what the text format stores.
namespace step {
struct V {
  friend bool operator==(const V&, const V&) = default;
};
struct U {
  int a;
  int b;
  friend bool operator==(const U&, const U&) = default;
};
struct W {
  int a;
  friend bool operator==(const W&, const W&) = default;
};
struct CX {
  int control;
  int target;
  friend bool operator==(const CX&, const CX&) = default;
};
struct MCX {
  std::vector<int> positive;
  std::vector<int> negative;
  int target;
  friend bool operator==(const MCX&, const MCX&) = default;
};
}  // namespace step

using StepSpec = std::variant<step::V, step::U, step::W, step::CX, step::MCX>;

struct CircuitStep {
  StepSpec spec;
  /// True for steps of a decompression circuit (the gate is the adjoint).
  bool adjoint = false;
  Gate gate;

  friend bool operator==(const CircuitStep&, const CircuitStep&) = default;
};

/// Builds the gate a step describes.
CircuitStep make_step(StepSpec spec, bool adjoint = false,
                      WFault fault = WFault::kNone);

class CompressionCircuit {
 public:
  CompressionCircuit(int n_copies, std::vector<CircuitStep> steps,
                     std::size_t stage_boundary, bool decompression = false);

  int n_copies() const { return n_copies_; }
  /// ceil(log2(N+1))
  int register_size() const { return register_size_; }
  const std::vector<CircuitStep>& steps() const { return steps_; }
  /// Forward circuit: count of stage-1 steps. Decompression: count of
  /// stage-2 steps, which come first.
  std::size_t stage_boundary() const { return stage_boundary_; }
  bool is_decompression() const { return decompression_; }

  friend bool operator==(const CompressionCircuit&,
                         const CompressionCircuit&) = default;

 private:
  int n_copies_;
  int register_size_;
  std::vector<CircuitStep> steps_;
  std::size_t stage_boundary_;
  bool decompression_;
};

struct SynthesisOptions {
  WFault w_fault = WFault::kNone;
};

/// V on (1,2), then for a = 3..N: U(a,1..a-2) ascending, then W(a).
std::vector<CircuitStep> synthesize_stage1(int n_copies,
                                           const SynthesisOptions& options = {});

/// For k = 3..N: CNOTs from qubit k onto the set bits of k, then one MCX
/// (positive on those bits, negative on every other qubit below k) onto k.
std::vector<CircuitStep> synthesize_stage2(int n_copies);

CompressionCircuit synthesize(int n_copies, const SynthesisOptions& options = {});

/// Reversed order, every gate replaced by its adjoint.
CompressionCircuit inverse(const CompressionCircuit& circuit);

StateVector run(const CompressionCircuit& circuit, StateVector state);

struct GateCountReport {
  int n_copies = 0;
  std::uint64_t three_qubit_ops = 0;
  std::uint64_t two_qubit_ops = 0;
  /// 21 CNOTs per three-qubit gate plus 3 for V: (21/2)(N^2-N-2)+3.
  std::uint64_t cnot_bound_stage1 = 0;
  /// Emitted stage-2 CNOTs.
  std::uint64_t stage2_cnots = 0;
  /// Sum over k=3..N of popcount(k) + ceil(log2(k+1))^2.
  std::uint64_t stage2_cnot_bound = 0;
  /// N log2(N)^2
  double stage2_loose_bound = 0.0;
  std::uint64_t mcx_count = 0;
};

GateCountReport gate_count_report(int n_copies);

/// One record per line; see README for the grammar.
std::string export_circuit(const CompressionCircuit& circuit);

/// Throws ValidationError with the offending line on malformed input.
CompressionCircuit parse_circuit(const std::string& text);

/// Export label for a step ("V", "U", "Udg", ...).
std::string step_label(const CircuitStep& step);

}  // namespace qcompress
