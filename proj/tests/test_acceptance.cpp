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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcompress/analysis.hpp"
#include "qcompress/circuit.hpp"
#include "qcompress/cli.hpp"
#include "qcompress/noise.hpp"
#include "qcompress/symmetric.hpp"

using namespace qcompress;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

StateVector gaussian_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return StateVector::normalized(std::move(amps));
}

// weight * (|prefix> (x) |m;j>) with qubit 1 leftmost in `prefix`.
struct Term {
  double weight_sq;
  std::string prefix;
  int m;
  int j;
};

StateVector expected_state(int n, const std::vector<Term>& terms, double total) {
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  for (const Term& t : terms) {
    std::uint64_t head = 0;
    for (std::size_t q = 0; q < t.prefix.size(); ++q) {
      if (t.prefix[q] == '1') head |= std::uint64_t{1} << q;
    }
    const int p = static_cast<int>(t.prefix.size());
    const double amp = std::sqrt(t.weight_sq / total / static_cast<double>(binomial(t.m, t.j)));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.m); ++s) {
      if (std::popcount(s) == t.j) amps[head | (s << p)] += amp;
    }
  }
  return StateVector::from_amplitudes(std::move(amps));
}

Outcome basis_map() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const auto c = synthesize(n);
    for (int k = 0; k <= n; ++k) {
      worst = std::max(worst, max_abs_diff(run(c, dicke_state(n, k)), b_state(n, k)));
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 10.0, fmt("max error %.2e, %.2f s", worst, t)};
}

Outcome three_qubit_table() {
  StateVector expected[] = {StateVector::basis(3, 0b000), StateVector::basis(3, 0b001),
                            StateVector::basis(3, 0b010), StateVector::basis(3, 0b100)};
  double worst = 0.0;
  for (int k = 0; k <= 3; ++k) {
    StateVector s = dicke_state(3, k);
    for (const auto& step : synthesize_stage1(3)) s.apply(step.gate);
    worst = std::max(worst, max_abs_diff(s, expected[k]));
  }
  return {worst <= 1e-12, fmt("max error %.2e over 4 rows", worst)};
}

Outcome five_qubit_trace() {
  // After V, then the six table rows; step indices into stage 1 of N = 5.
  struct Row {
    std::size_t step;
    std::vector<Term> terms;
  };
  const std::vector<Row> rows = {
      {0, {{1, "00", 3, 3}, {6, "10", 3, 2}, {3, "01", 3, 1}}},
      {2, {{3, "100", 2, 2}, {6, "010", 2, 1}, {1, "001", 2, 0}}},
      {3, {{6, "0100", 1, 1}, {3, "01010", 0, 0}, {1, "00100", 0, 0}}},
      {4, {{6, "0100", 1, 1}, {4, "0010", 1, 0}}},
      {6, {{6, "0100", 1, 1}, {4, "0010", 1, 0}}},
      {7, {{10, "00100", 0, 0}}},
      {8, {{10, "00100", 0, 0}}},
  };
  const auto steps = synthesize_stage1(5);
  StateVector s = dicke_state(5, 3);
  std::vector<StateVector> after;
  for (const auto& step : steps) {
    s.apply(step.gate);
    after.push_back(s);
  }
  double worst = 0.0;
  for (const Row& r : rows) {
    worst = std::max(worst, max_abs_diff(after.at(r.step), expected_state(5, r.terms, 10.0)));
  }
  const auto lines = cli::trace(5, 3);
  const bool text_ok = lines.at(0).expression == "|00⟩|111⟩ + √6|10⟩|3;2⟩ + √3|01⟩|3;1⟩" &&
                       lines.at(4).expression == "√6|0100⟩|1⟩ + √4|0010⟩|0⟩";
  return {worst <= 1e-10 && text_ok,
          fmt("max error %.2e over 7 states, rendering ", worst) + (text_ok ? "ok" : "WRONG")};
}

Outcome round_trip() {
  double worst_loss = 0.0;
  double worst_elem = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const auto c = synthesize(n);
    const auto back = inverse(c);
    std::mt19937_64 rng = sample_rng(kSeed, static_cast<std::uint64_t>(n));
    for (int i = 0; i < 100; ++i) {
      const auto in = product_state(random_qubit(rng), n);
      worst_loss = std::max(worst_loss, 1.0 - fidelity_pure(run(back, run(c, in)), in));
      const auto full = gaussian_state(n, rng);
      worst_elem = std::max(worst_elem, max_abs_diff(run(back, run(c, full)), full));
    }
  }
  return {worst_loss <= 1e-10 && worst_elem <= 1e-12,
          fmt("product 1-F max %.2e, full-space max %.2e", worst_loss, worst_elem)};
}

Outcome leakage() {
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const auto c = synthesize(n);
    const std::size_t kept = std::size_t{1} << c.register_size();
    std::mt19937_64 rng = sample_rng(kSeed + 1, static_cast<std::uint64_t>(n));
    for (int i = 0; i < 100; ++i) {
      const auto out = run(c, product_state(random_qubit(rng), n));
      double w = 0.0;
      for (std::size_t x = kept; x < out.dim(); ++x) w += std::norm(out[x]);
      worst = std::max(worst, w);
    }
  }
  return {worst <= 1e-10, fmt("max leaked weight %.2e", worst)};
}

Outcome gate_counts() {
  bool ok = true;
  for (int n = 3; n <= 16; ++n) {
    std::uint64_t three = 0;
    for (const auto& s : synthesize_stage1(n)) three += (s.gate.arity() == 3);
    const auto expected = static_cast<std::uint64_t>((n + 1) * (n - 2) / 2);
    const auto report = gate_count_report(n);
    ok = ok && three == expected && report.three_qubit_ops == expected &&
         2 * (report.cnot_bound_stage1 - 3) ==
             21 * static_cast<std::uint64_t>(n * n - n - 2);
  }
  const auto bound5 = gate_count_report(5).cnot_bound_stage1;
  ok = ok && bound5 == 192;
  return {ok, fmt("N=5 CNOT bound %.0f", static_cast<double>(bound5))};
}

Outcome table_one() {
  const double naive_printed[] = {0.666, 0.750, 0.800, 0.833, 0.855, 0.875};
  const double pb_printed[] = {0.666, 0.800, 0.889, 0.941, 0.969};
  const auto rows = table1();
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(rows[i].naive - naive_printed[i]));
  for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(rows[i].pb - pb_printed[i]));
  std::ostringstream os;
  render_table1(os);
  const bool noted = os.str().find("0.992") != std::string::npos;
  return {worst <= 0.005 && noted,
          fmt("max deviation %.4f; n=6 PB computed %.4f, excluded", worst, rows[5].pb)};
}

Outcome global_fidelity() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = sweep_global(3, 16, 0.1, 2000, kSeed);
  const double t = seconds_since(t0);
  auto at = [&](int n, Scenario s) -> const FidelityRecord& {
    return rows.at(2 * static_cast<std::size_t>(n - 3) + (s == Scenario::kCompressed));
  };
  bool ok = t < 300.0;
  double min_z = 1e300;
  for (int n = 3; n <= 15; ++n) {
    const auto& u = at(n, Scenario::kUncompressed);
    const auto& c = at(n, Scenario::kCompressed);
    const double z = (c.mean_fidelity - u.mean_fidelity) /
                     std::hypot(c.std_error, u.std_error);
    min_z = std::min(min_z, z);
  }
  ok = ok && min_z > 3.0;
  double min_peak_z = 1e300;
  for (int n : {3, 7, 15}) {
    const auto& here = at(n, Scenario::kCompressed);
    const auto& next = at(n + 1, Scenario::kCompressed);
    const double z = (here.mean_fidelity - next.mean_fidelity) /
                     std::hypot(here.std_error, next.std_error);
    min_peak_z = std::min(min_peak_z, z);
  }
  ok = ok && min_peak_z > 3.0;
  return {ok, fmt("min margin %.1f SE, min peak margin %.1f SE, %.1f s", min_z, min_peak_z, t)};
}

Outcome single_fidelity() {
  const auto z_rows = sweep_single(7, {0.05, 0.1, 0.2}, {AxisPolicy::along(kAxisZ)}, 2000, kSeed);
  double min_z = 1e300;
  for (std::size_t i = 0; i < z_rows.size(); i += 2) {
    const auto& u = z_rows[i];
    const auto& c = z_rows[i + 1];
    min_z = std::min(min_z, (c.mean_fidelity - u.mean_fidelity) /
                                std::hypot(c.std_error, u.std_error));
  }
  const auto avg = sweep_single(7, {0.2}, {AxisPolicy::averaged()}, 2000, kSeed);
  const double avg_z = (avg[1].mean_fidelity - avg[0].mean_fidelity) /
                       std::hypot(avg[1].std_error, avg[0].std_error);
  return {min_z >= -3.0 && avg_z <= 3.0,
          fmt("z axis: compressed - uncompressed >= %.1f SE; averaged: %.1f SE", min_z, avg_z)};
}

Outcome unitarity() {
  double worst = 0.0;
  std::uint64_t gates = 0;
  for (int n = 1; n <= 16; ++n) {
    const auto forward = synthesize(n);
    const auto backward = inverse(forward);
    for (const auto* circuit : {&forward, &backward}) {
      for (const auto& s : circuit->steps()) {
        worst = std::max(worst, s.gate.unitarity_deviation());
        ++gates;
      }
    }
  }
  bool pascal = true;
  for (int a = 3; a <= 20; ++a) {
    for (int b = 1; b <= a - 2; ++b) {
      const auto w = u_weights(a, b);
      pascal = pascal && w.alpha101_sq + w.alpha010_sq == w.beta010_sq;
    }
  }
  return {worst <= 1e-12 && pascal,
          fmt("%.0f gates, max deviation %.2e, Pascal identity ", static_cast<double>(gates),
              worst) +
              (pascal ? "exact" : "BROKEN")};
}

Outcome bookkeeping() {
  std::uint64_t branches = 0;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      StateVector s = dicke_state(n, k);
      for (const auto& step : synthesize_stage1(n)) {
        s.apply(step.gate);
        int prefix = 0;
        if (std::holds_alternative<step::V>(step.spec)) prefix = 2;
        if (const auto* w = std::get_if<step::W>(&step.spec)) prefix = w->a;
        if (prefix == 0) continue;
        const std::uint64_t mask = (std::uint64_t{1} << prefix) - 1;
        for (std::size_t x = 0; x < s.dim(); ++x) {
          if (std::abs(s[x]) < 1e-12) continue;
          ++branches;
          const std::uint64_t head = x & mask;
          if (std::popcount(head) > 1) {
            ok = false;
            continue;
          }
          const int position = head ? std::countr_zero(head) + 1 : 0;
          ok = ok && position + std::popcount(x >> prefix) == k;
        }
      }
    }
  }
  return {ok, fmt("%.0f nonzero branches inspected", static_cast<double>(branches))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"basis-map exactness, N<=12", basis_map},
      {"three-qubit table", three_qubit_table},
      {"five-qubit golden trace", five_qubit_trace},
      {"round trip, N in [2,12]", round_trip},
      {"leakage, N<=12", leakage},
      {"gate counts", gate_counts},
      {"direction-fidelity table", table_one},
      {"global fidelity vs N at phi=0.1", global_fidelity},
      {"single-qubit fidelity at N=7", single_fidelity},
      {"unitarity and Pascal identity", unitarity},
      {"bookkeeping invariant, N<=8", bookkeeping},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu  %-34s %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
