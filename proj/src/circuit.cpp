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

#include "qcompress/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qcompress/symmetric.hpp"

namespace qcompress {

namespace {

// Row of a gate definition: the normalized input vector `in` (local basis)
// is sent to the local basis state `out`.
struct BasisRow {
  std::vector<std::pair<std::size_t, double>> in;
  std::size_t out;
};

Matrix from_rows(std::size_t dim, const std::vector<BasisRow>& rows) {
  Matrix m(dim);
  for (const BasisRow& row : rows)
    for (const auto& [col, weight] : row.in) m(row.out, col) += weight;
  return m;
}

BasisRow fixed(std::size_t index) { return {{{index, 1.0}}, index}; }

}  // namespace

UWeights u_weights(int a, int b) {
  if (a < 3 || b < 1 || b > a - 2) {
    throw PositionError("U(a,b) requires 1 <= b <= a-2, got a=" +
                        std::to_string(a) + " b=" + std::to_string(b));
  }
  return {binomial(a - 1, b), binomial(a - 1, b + 1), binomial(a, b + 1)};
}

// Local index of gate V: q1 + 2 q2.
Gate gate_V() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<BasisRow> rows = {
      fixed(0),                    // |00> -> |00>
      {{{1, h}, {2, h}}, 1},       // (|10>+|01>)/sqrt2 -> |10>
      {{{3, 1.0}}, 2},             // |11> -> |01>
      {{{2, h}, {1, -h}}, 3},      // (|01>-|10>)/sqrt2 -> |11>
  };
  return Gate::dense("V", from_rows(4, rows), {1, 2});
}

// Local index of gate U(a,b): q_b + 2 q_{b+1} + 4 q_a.
Gate gate_U(int a, int b) {
  const UWeights w = u_weights(a, b);
  const double beta = std::sqrt(static_cast<double>(w.beta010_sq));
  const double c101 = std::sqrt(static_cast<double>(w.alpha101_sq)) / beta;
  const double c010 = std::sqrt(static_cast<double>(w.alpha010_sq)) / beta;
  const std::vector<BasisRow> rows = {
      fixed(0), fixed(1), fixed(4), fixed(6), fixed(3), fixed(7),
      {{{5, c101}, {2, c010}}, 2},   // merge into |01>_b|0>_a
      {{{5, c010}, {2, -c101}}, 5},  // orthogonal completion
  };
  return Gate::dense("U(" + std::to_string(a) + "," + std::to_string(b) + ")",
                     from_rows(8, rows), {b, b + 1, a});
}

// Local index of gate W(a): q_1 + 2 q_{a-1} + 4 q_a.
Gate gate_W(int a, WFault fault) {
  if (a < 3) throw PositionError("W(a) requires a >= 3, got " + std::to_string(a));
  const double beta = std::sqrt(static_cast<double>(a));
  const double c001 = 1.0 / beta;
  const double c100 = std::sqrt(static_cast<double>(a - 1)) / beta;
  const double s = fault == WFault::kSignFlip ? -1.0 : 1.0;
  const std::vector<BasisRow> rows = {
      fixed(0), fixed(2), fixed(5), fixed(3), fixed(7),
      {{{6, 1.0}}, 4},                    // |0>|11> -> |0>|01>
      {{{4, c001}, {1, s * c100}}, 1},    // merge into |1>|00>
      {{{4, s * c100}, {1, -c001}}, 6},   // orthogonal completion
  };
  return Gate::dense("W(" + std::to_string(a) + ")", from_rows(8, rows),
                     {1, a - 1, a});
}

Gate gate_CX(int control, int target) {
  return Gate::mcx({control}, {}, target, "CX");
}

Gate mixed_mcx(std::vector<int> positive_controls,
               std::vector<int> negative_controls, int target) {
  return Gate::mcx(std::move(positive_controls), std::move(negative_controls),
                   target, "MCX");
}

std::string step_label(const CircuitStep& s) {
  static const char* names[] = {"V", "U", "W", "CX", "MCX"};
  std::string label = names[s.spec.index()];
  if (s.adjoint) label += "dg";
  return label;
}

CircuitStep make_step(StepSpec spec, bool adjoint, WFault fault) {
  Gate gate = std::visit(
      [fault](const auto& p) -> Gate {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, step::V>) {
          return gate_V();
        } else if constexpr (std::is_same_v<T, step::U>) {
          return gate_U(p.a, p.b);
        } else if constexpr (std::is_same_v<T, step::W>) {
          return gate_W(p.a, fault);
        } else if constexpr (std::is_same_v<T, step::CX>) {
          return gate_CX(p.control, p.target);
        } else {
          return mixed_mcx(p.positive, p.negative, p.target);
        }
      },
      spec);
  // CX and MCX are involutions and never carry the adjoint flag.
  if (gate.is_mcx()) adjoint = false;
  if (adjoint) gate = gate.adjoint(gate.label() + "dg");
  return {std::move(spec), adjoint, std::move(gate)};
}

CompressionCircuit::CompressionCircuit(int n_copies,
                                       std::vector<CircuitStep> steps,
                                       std::size_t stage_boundary,
                                       bool decompression)
    : n_copies_(n_copies),
      register_size_(compressed_register_size(n_copies)),
      steps_(std::move(steps)),
      stage_boundary_(stage_boundary),
      decompression_(decompression) {
  if (stage_boundary_ > steps_.size()) {
    throw ValidationError("stage boundary past the end of the circuit");
  }
  for (const CircuitStep& s : steps_) {
    if (s.gate.max_position() > n_copies_) {
      throw PositionError("step " + s.gate.label() + " exceeds " +
                          std::to_string(n_copies_) + " qubits");
    }
  }
}

std::vector<CircuitStep> synthesize_stage1(int n_copies,
                                           const SynthesisOptions& options) {
  if (n_copies < 1) throw ValidationError("circuit needs at least one qubit");
  std::vector<CircuitStep> steps;
  if (n_copies == 1) return steps;
  steps.push_back(make_step(step::V{}));
  for (int a = 3; a <= n_copies; ++a) {
    for (int b = 1; b <= a - 2; ++b) steps.push_back(make_step(step::U{a, b}));
    steps.push_back(make_step(step::W{a}, false, options.w_fault));
  }
  return steps;
}

std::vector<CircuitStep> synthesize_stage2(int n_copies) {
  if (n_copies < 1) throw ValidationError("circuit needs at least one qubit");
  std::vector<CircuitStep> steps;
  for (int k = 3; k <= n_copies; ++k) {
    std::vector<int> positive;
    std::vector<int> negative;
    for (int j = 1; j < k; ++j) {
      if (k >> (j - 1) & 1)
        positive.push_back(j);
      else
        negative.push_back(j);
    }
    for (int j : positive) steps.push_back(make_step(step::CX{k, j}));
    steps.push_back(make_step(step::MCX{positive, negative, k}));
  }
  return steps;
}

CompressionCircuit synthesize(int n_copies, const SynthesisOptions& options) {
  std::vector<CircuitStep> steps = synthesize_stage1(n_copies, options);
  const std::size_t boundary = steps.size();
  std::vector<CircuitStep> stage2 = synthesize_stage2(n_copies);
  std::move(stage2.begin(), stage2.end(), std::back_inserter(steps));
  return CompressionCircuit(n_copies, std::move(steps), boundary);
}

CompressionCircuit inverse(const CompressionCircuit& circuit) {
  const auto& fwd = circuit.steps();
  std::vector<CircuitStep> steps;
  steps.reserve(fwd.size());
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
    CircuitStep s = *it;
    if (s.gate.is_mcx()) {
      steps.push_back(std::move(s));
      continue;
    }
    s.adjoint = !s.adjoint;
    std::string label = s.gate.label();
    if (label.ends_with("dg"))
      label.resize(label.size() - 2);
    else
      label += "dg";
    s.gate = s.gate.adjoint(std::move(label));
    steps.push_back(std::move(s));
  }
  return CompressionCircuit(circuit.n_copies(), std::move(steps),
                            fwd.size() - circuit.stage_boundary(),
                            !circuit.is_decompression());
}

StateVector run(const CompressionCircuit& circuit, StateVector state) {
  if (state.n_qubits() != circuit.n_copies()) {
    throw DimensionError("circuit for " + std::to_string(circuit.n_copies()) +
                         " qubits applied to a " +
                         std::to_string(state.n_qubits()) + "-qubit state");
  }
  for (const CircuitStep& s : circuit.steps()) state.apply(s.gate);
  return state;
}

GateCountReport gate_count_report(int n_copies) {
  if (n_copies < 1) throw ValidationError("gate count needs N >= 1");
  const auto n = static_cast<std::uint64_t>(n_copies);
  GateCountReport r;
  r.n_copies = n_copies;
  if (n_copies >= 2) {
    r.two_qubit_ops = 1;
    r.cnot_bound_stage1 = 3;
  }
  if (n_copies >= 3) {
    r.three_qubit_ops = (n + 1) * (n - 2) / 2;
    // (N^2 - N - 2) = (N+1)(N-2) is always even.
    r.cnot_bound_stage1 = 21 * ((n + 1) * (n - 2)) / 2 + 3;
    r.mcx_count = n - 2;
    r.stage2_loose_bound = static_cast<double>(n) * std::pow(std::log2(static_cast<double>(n)), 2);
  }
  for (int k = 3; k <= n_copies; ++k) {
    const auto width = static_cast<std::uint64_t>(std::bit_width(static_cast<unsigned>(k)));
    const auto ones = static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(k)));
    r.stage2_cnots += ones;
    r.stage2_cnot_bound += ones + width * width;
  }
  return r;
}

}  // namespace qcompress
