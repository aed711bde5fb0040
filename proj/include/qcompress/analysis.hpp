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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qcompress/noise.hpp"

namespace qcompress {

/// Direction-transmission fidelity with n plain copies: 1 - 1/(n+2).
double naive_fidelity(int n);

/// n sent qubits holding 2^n - 1 compressed copies: 2^n / (2^n + 1).
double compressed_fidelity(int n);

/// Reference values for the entangled (reference-frame free) encoding,
/// n = 1..6. Display only.
inline constexpr std::array<double, 6> kEntangledEncodingFidelity = {
    0.666, 0.789, 0.845, 0.911, 0.931, 0.943};

struct DirectionFidelityRow {
  int n;
  double naive;
  double eb;
  double pb;
};

/// Rows for n = 1..6.
std::vector<DirectionFidelityRow> table1();

/// Prints the rows to three decimals, plus the note on the n = 6 PB cell.
void render_table1(std::ostream& out);

/// Global fidelity for every N in [n_min, n_max] (within [2, 16]),
/// uncompressed then compressed, averaged over inputs and axes.
std::vector<FidelityRecord> sweep_global(int n_min, int n_max, double phi,
                                         std::uint64_t samples, std::uint64_t seed);

/// Single-qubit fidelity at fixed N for each (phi, axis policy, scenario).
std::vector<FidelityRecord> sweep_single(int n_copies, const std::vector<double>& phis,
                                         const std::vector<AxisPolicy>& axes,
                                         std::uint64_t samples, std::uint64_t seed);

/// Header plus one row per record; full-precision and 6-decimal columns.
void write_csv(std::ostream& out, const std::vector<FidelityRecord>& records);

/// Aligned text table of the same rows.
void write_text(std::ostream& out, const std::vector<FidelityRecord>& records);

}  // namespace qcompress
