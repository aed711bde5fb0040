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
#include <iosfwd>
#include <string>
#include <vector>

#include "qcompress/circuit.hpp"

namespace qcompress::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kResourceGuard = 2,
  kIoError = 3,
  kUsage = 64,
  kInternal = 70,
};

/// Largest N that simulation commands accept without --allow-large.
inline constexpr int kResourceGuardN = 16;

struct VerifyFailure {
  std::string suite;
  int n_copies;
  /// Excitation number for the basis suite, sample index otherwise.
  int index;
  double error;
};

struct VerifyReport {
  int n_max = 0;
  std::uint64_t basis_mappings = 0;
  std::uint64_t round_trip_states = 0;
  std::uint64_t leakage_states = 0;
  std::uint64_t gates_checked = 0;
  double max_basis_error = 0.0;
  double max_round_trip_error = 0.0;
  double max_leak = 0.0;
  double max_unitarity_deviation = 0.0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Basis map, round trip, leakage and unitarity suites for N = 1..n_max.
VerifyReport verify(int n_max, const SynthesisOptions& options = {},
                    std::uint64_t seed = 1);

void write_verify_text(std::ostream& out, const VerifyReport& report);
std::string verify_json(const VerifyReport& report);

struct TraceLine {
  std::string label;
  std::string expression;
};

/// State after V and after every U/W of stage 1, as (processed prefix)
/// (unprocessed suffix) kets with amplitudes in units of 1/sqrt(C(N,k)).
/// Requires 0 <= k <= N <= 10.
std::vector<TraceLine> trace(int n_copies, int k);

/// Two-ket rendering of `state` with the first `prefix_len` qubits split off.
std::string render_two_ket(const StateVector& state, int prefix_len, double unit);

void write_trace(std::ostream& out, int n_copies, int k);

void write_gatecount_text(std::ostream& out, const GateCountReport& report);
std::string gatecount_json(const GateCountReport& report);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcompress::cli
