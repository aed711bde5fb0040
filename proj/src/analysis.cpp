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

#include "qcompress/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace qcompress {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_n(int n) {
  if (n < 1) throw ValidationError("qubit count n must be >= 1, got " + std::to_string(n));
}

}  // namespace

double naive_fidelity(int n) {
  check_n(n);
  return 1.0 - 1.0 / (n + 2.0);
}

double compressed_fidelity(int n) {
  check_n(n);
  if (n > 62) throw ValidationError("n too large for an integer copy count");
  // N = 2^n - 1 copies, optimal estimation gives (N+1)/(N+2).
  const double copies = std::ldexp(1.0, n) - 1.0;
  return (copies + 1.0) / (copies + 2.0);
}

std::vector<DirectionFidelityRow> table1() {
  std::vector<DirectionFidelityRow> rows;
  for (int n = 1; n <= 6; ++n)
    rows.push_back({n, naive_fidelity(n), kEntangledEncodingFidelity[n - 1],
                    compressed_fidelity(n)});
  return rows;
}

void render_table1(std::ostream& out) {
  const auto rows = table1();
  out << "n         ";
  for (const auto& r : rows) out << "  " << r.n << "    ";
  out << "\nnaive     ";
  for (const auto& r : rows) out << "  " << fixed(r.naive, 3);
  out << "\nEB        ";
  for (const auto& r : rows) out << "  " << fixed(r.eb, 3);
  out << "\nPB        ";
  for (const auto& r : rows) out << "  " << fixed(r.pb, 3);
  out << "\n\n"
         "naive = 1 - 1/(n+2) for n plain copies\n"
         "EB    = reference values for the entangled encoding (not computed)\n"
         "PB    = 2^n/(2^n+1), n qubits carrying 2^n - 1 compressed copies\n"
         "note: the PB cell at n=6 is often quoted as 0.992; both 2^n/(2^n+1)\n"
         "      and 1 - 1/(2^n+2) give 0.985 there.\n";
}

std::vector<FidelityRecord> sweep_global(int n_min, int n_max, double phi,
                                         std::uint64_t samples, std::uint64_t seed) {
  if (n_min < 2 || n_max > 16 || n_min > n_max) {
    throw ValidationError("global sweep range must lie within [2, 16]");
  }
  std::vector<FidelityRecord> out;
  for (int n = n_min; n <= n_max; ++n) {
    const StorageChannel channel(n);
    for (Scenario s : {Scenario::kUncompressed, Scenario::kCompressed}) {
      out.push_back(average_fidelity(n, phi, s, Metric::kGlobal, AxisPolicy::averaged(),
                                     samples, seed, &channel));
    }
  }
  return out;
}

std::vector<FidelityRecord> sweep_single(int n_copies, const std::vector<double>& phis,
                                         const std::vector<AxisPolicy>& axes,
                                         std::uint64_t samples, std::uint64_t seed) {
  if (n_copies < 2 || n_copies > 16) {
    throw ValidationError("single-qubit sweep needs N within [2, 16]");
  }
  const StorageChannel channel(n_copies);
  std::vector<FidelityRecord> out;
  for (double phi : phis)
    for (const AxisPolicy& axis : axes)
      for (Scenario s : {Scenario::kUncompressed, Scenario::kCompressed})
        out.push_back(average_fidelity(n_copies, phi, s, Metric::kSingleQubit, axis, samples,
                                       seed, &channel));
  return out;
}

void write_csv(std::ostream& out, const std::vector<FidelityRecord>& records) {
  out << "scenario,metric,N,phi,axis,samples,seed,mean_fidelity,std_error,"
         "mean_fidelity_display,std_error_display\n";
  for (const auto& r : records) {
    out << to_string(r.scenario) << ',' << to_string(r.metric) << ',' << r.n_copies << ','
        << full(r.phi) << ',' << r.axis_policy.name() << ',' << r.samples << ',' << r.rng_seed
        << ',' << full(r.mean_fidelity) << ',' << full(r.std_error) << ','
        << fixed(r.mean_fidelity, 6) << ',' << fixed(r.std_error, 6) << '\n';
  }
}

void write_text(std::ostream& out, const std::vector<FidelityRecord>& records) {
  char line[160];
  std::snprintf(line, sizeof line, "%-13s %-12s %3s %9s %-8s %8s %10s %10s\n", "scenario",
                "metric", "N", "phi", "axis", "samples", "mean", "stderr");
  out << line;
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-13s %-12s %3d %9.4f %-8s %8llu %10.6f %10.2e\n",
                  to_string(r.scenario).c_str(), to_string(r.metric).c_str(), r.n_copies, r.phi,
                  r.axis_policy.name().c_str(), static_cast<unsigned long long>(r.samples),
                  r.mean_fidelity, r.std_error);
    out << line;
  }
}

}  // namespace qcompress
