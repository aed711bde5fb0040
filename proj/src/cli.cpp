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

#include "qcompress/cli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcompress/analysis.hpp"
#include "qcompress/noise.hpp"
#include "qcompress/symmetric.hpp"

namespace qcompress::cli {

namespace {

constexpr double kBasisTol = 1e-10;
constexpr double kRoundTripFidelityTol = 1e-10;
constexpr double kRoundTripElementTol = 1e-12;
constexpr double kLeakTol = 1e-10;
constexpr int kProductSamples = 4;
constexpr int kFullSpaceSamples = 2;

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double weight_above(const StateVector& s, int n_keep) {
  double w = 0.0;
  for (std::size_t i = std::size_t{1} << n_keep; i < s.dim(); ++i) w += std::norm(s[i]);
  return w;
}

StateVector gaussian_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return StateVector::normalized(std::move(amps));
}

// Ket over qubits [first, first + len), qubit `first` leftmost.
std::string bits_ket(std::uint64_t bits, int len) {
  if (len == 0) return "";
  std::string s = "|";
  for (int q = 0; q < len; ++q) s += ((bits >> q) & 1U) ? '1' : '0';
  return s + "⟩";
}

struct Coefficient {
  bool negative;
  std::string magnitude;
};

Coefficient format_coefficient(cplx v) {
  if (std::abs(v.imag()) < 1e-9) {
    const double r = v.real();
    const double sq = r * r;
    const double rounded = std::round(sq);
    if (rounded >= 1.0 && std::abs(sq - rounded) < 1e-9) {
      const auto m = static_cast<long long>(rounded);
      return {r < 0, m == 1 ? "" : "√" + std::to_string(m)};
    }
    return {r < 0, fixed(std::abs(r), 6)};
  }
  return {false, "(" + fixed(v.real(), 6) + (v.imag() < 0 ? "-" : "+") +
                     fixed(std::abs(v.imag()), 6) + "i)"};
}

struct Term {
  std::uint64_t order;
  std::uint64_t suffix_order;
  cplx coefficient;
  std::string kets;
};

std::uint64_t prefix_order(std::uint64_t prefix) {
  const int ones = std::popcount(prefix);
  if (ones == 0) return 0;
  if (ones == 1) return static_cast<std::uint64_t>(std::countr_zero(prefix)) + 1;
  return (std::uint64_t{1} << 32) + prefix;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("bad N range '" + text + "', expected A..B or A");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dots)),
          to_int(std::string_view(text).substr(dots + 2))};
}

AxisPolicy parse_axis(const std::string& name) {
  if (name == "x") return AxisPolicy::along(kAxisX);
  if (name == "y") return AxisPolicy::along(kAxisY);
  if (name == "z") return AxisPolicy::along(kAxisZ);
  if (name == "averaged") return AxisPolicy::averaged();
  throw ValidationError("unknown axis '" + name + "', expected x, y, z or averaged");
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QCOMPRESS_OUTPUT_DIR"); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const auto p = resolve_output(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open '" + p.string() + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + p.string() + "'");
  out << "wrote " << p.string() << '\n';
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  std::uint64_t s;
  if (seed) {
    s = *seed;
  } else {
    std::random_device rd;
    s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  }
  err << "seed: " << s << '\n';
  return s;
}

std::string records_json(const std::vector<FidelityRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) {
    rows.push_back({{"scenario", to_string(r.scenario)},
                    {"metric", to_string(r.metric)},
                    {"N", r.n_copies},
                    {"phi", r.phi},
                    {"axis", r.axis_policy.name()},
                    {"samples", r.samples},
                    {"seed", r.rng_seed},
                    {"mean_fidelity", r.mean_fidelity},
                    {"std_error", r.std_error}});
  }
  nlohmann::json doc = {{"schema", "qcompress-fidelity/1"}, {"records", rows}};
  return doc.dump(2) + "\n";
}

std::string render_records(const std::vector<FidelityRecord>& records,
                           const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    write_csv(os, records);
  } else if (format == "text") {
    write_text(os, records);
  } else {
    os << records_json(records);
  }
  return os.str();
}

}  // namespace

VerifyReport verify(int n_max, const SynthesisOptions& options, std::uint64_t seed) {
  if (n_max < 1 || n_max > kMaxQubits) {
    throw ValidationError("n-max must lie in [1, " + std::to_string(kMaxQubits) + "]");
  }
  VerifyReport r;
  r.n_max = n_max;
  auto fail = [&r](const char* suite, int n, int index, double error) {
    r.failures.push_back({suite, n, index, error});
  };
  for (int n = 1; n <= n_max; ++n) {
    const CompressionCircuit circuit = synthesize(n, options);
    const CompressionCircuit back = inverse(circuit);
    const int keep = circuit.register_size();

    for (std::size_t i = 0; i < circuit.steps().size(); ++i) {
      const double dev = circuit.steps()[i].gate.unitarity_deviation();
      ++r.gates_checked;
      r.max_unitarity_deviation = std::max(r.max_unitarity_deviation, dev);
      if (dev > kUnitarityTol) fail("unitarity", n, static_cast<int>(i), dev);
    }

    for (int k = 0; k <= n; ++k) {
      const double e = max_abs_diff(run(circuit, dicke_state(n, k)), b_state(n, k));
      ++r.basis_mappings;
      r.max_basis_error = std::max(r.max_basis_error, e);
      if (e > kBasisTol) fail("basis", n, k, e);
    }

    std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(n));
    for (int s = 0; s < kProductSamples; ++s) {
      const StateVector input = product_state(random_qubit(rng), n);
      const StateVector compressed = run(circuit, input);
      const double leak = weight_above(compressed, keep);
      ++r.leakage_states;
      r.max_leak = std::max(r.max_leak, leak);
      if (leak > kLeakTol) fail("leakage", n, s, leak);

      const double loss = 1.0 - fidelity_pure(run(back, compressed), input);
      ++r.round_trip_states;
      r.max_round_trip_error = std::max(r.max_round_trip_error, loss);
      if (loss > kRoundTripFidelityTol) fail("round_trip_product", n, s, loss);
    }
    for (int s = 0; s < kFullSpaceSamples; ++s) {
      const StateVector input = gaussian_state(n, rng);
      const double e = max_abs_diff(run(back, run(circuit, input)), input);
      ++r.round_trip_states;
      r.max_round_trip_error = std::max(r.max_round_trip_error, e);
      if (e > kRoundTripElementTol) fail("round_trip_full", n, s, e);
    }
  }
  return r;
}

void write_verify_text(std::ostream& out, const VerifyReport& r) {
  out << "verify N=1.." << r.n_max << '\n'
      << "basis mappings checked: " << r.basis_mappings << " (max error "
      << sci(r.max_basis_error) << ")\n"
      << "round-trip states: " << r.round_trip_states << " (max error "
      << sci(r.max_round_trip_error) << ")\n"
      << "leakage states: " << r.leakage_states << " (max weight " << sci(r.max_leak)
      << ")\n"
      << "gates checked for unitarity: " << r.gates_checked << " (max deviation "
      << sci(r.max_unitarity_deviation) << ")\n";
  for (const auto& f : r.failures) {
    out << "FAIL " << f.suite << " N=" << f.n_copies
        << (f.suite == "basis" ? " k=" : " index=") << f.index << " error=" << sci(f.error)
        << '\n';
  }
  if (r.passed()) {
    out << "PASS\n";
  } else {
    out << "FAIL (" << r.failures.size() << " failures)\n";
  }
}

std::string verify_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        {{"suite", f.suite}, {"N", f.n_copies}, {"index", f.index}, {"error", f.error}});
  }
  nlohmann::json doc = {{"schema", "qcompress-verify/1"},
                        {"n_max", r.n_max},
                        {"passed", r.passed()},
                        {"basis_mappings", r.basis_mappings},
                        {"round_trip_states", r.round_trip_states},
                        {"leakage_states", r.leakage_states},
                        {"gates_checked", r.gates_checked},
                        {"max_basis_error", r.max_basis_error},
                        {"max_round_trip_error", r.max_round_trip_error},
                        {"max_leak", r.max_leak},
                        {"max_unitarity_deviation", r.max_unitarity_deviation},
                        {"failures", failures}};
  return doc.dump(2) + "\n";
}

std::string render_two_ket(const StateVector& state, int prefix_len, double unit) {
  const int n = state.n_qubits();
  if (prefix_len < 0 || prefix_len > n) throw ValidationError("prefix length out of range");
  const int m = n - prefix_len;
  const std::uint64_t prefix_mask = (std::uint64_t{1} << prefix_len) - 1;

  std::map<std::uint64_t, std::map<std::uint64_t, cplx>> groups;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (std::abs(state[i]) > 1e-12) groups[i & prefix_mask][i >> prefix_len] = state[i];
  }

  std::vector<Term> terms;
  for (const auto& [prefix, suffixes] : groups) {
    const std::string head = bits_ket(prefix, prefix_len);
    const auto& [first_bits, first_amp] = *suffixes.begin();
    const int j = std::popcount(first_bits);
    bool dicke = suffixes.size() == binomial(m, j);
    for (const auto& [bits, amp] : suffixes) {
      if (std::popcount(bits) != j || std::abs(amp - first_amp) > 1e-10) dicke = false;
    }
    if (dicke) {
      std::string tail;
      if (m > 0) {
        tail = (j == 0 || j == m) ? bits_ket(first_bits, m)
                                  : "|" + std::to_string(m) + ";" + std::to_string(j) + "⟩";
      }
      const double weight = std::sqrt(static_cast<double>(binomial(m, j)));
      terms.push_back({prefix_order(prefix), 0, first_amp * weight * unit, head + tail});
    } else {
      for (const auto& [bits, amp] : suffixes) {
        terms.push_back({prefix_order(prefix), bits, amp * unit, head + bits_ket(bits, m)});
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.order, a.suffix_order) < std::tie(b.order, b.suffix_order);
  });

  std::string s;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Coefficient c = format_coefficient(terms[t].coefficient);
    if (t == 0) {
      if (c.negative) s += "−";
    } else {
      s += c.negative ? " − " : " + ";
    }
    s += c.magnitude + terms[t].kets;
  }
  return s.empty() ? "0" : s;
}

std::vector<TraceLine> trace(int n_copies, int k) {
  if (n_copies < 1 || n_copies > 10) throw ValidationError("trace needs 1 <= N <= 10");
  if (k < 0 || k > n_copies) throw ValidationError("trace needs 0 <= k <= N");
  const double unit = std::sqrt(static_cast<double>(binomial(n_copies, k)));
  StateVector state = dicke_state(n_copies, k);
  std::vector<TraceLine> lines;
  for (const CircuitStep& s : synthesize_stage1(n_copies)) {
    state.apply(s.gate);
    std::string label;
    int prefix = 0;
    if (std::holds_alternative<step::V>(s.spec)) {
      label = "V";
      prefix = 2;
    } else if (const auto* u = std::get_if<step::U>(&s.spec)) {
      label = "U(" + std::to_string(u->a) + "," + std::to_string(u->b) + ")";
      prefix = u->a;
    } else if (const auto* w = std::get_if<step::W>(&s.spec)) {
      label = "W(" + std::to_string(w->a) + ")";
      prefix = w->a;
    }
    lines.push_back({label, render_two_ket(state, prefix, unit)});
  }
  return lines;
}

void write_trace(std::ostream& out, int n_copies, int k) {
  const auto lines = trace(n_copies, k);
  out << "# N=" << n_copies << " k=" << k << ", amplitudes in units of 1/√"
      << binomial(n_copies, k) << '\n';
  for (const auto& l : lines) {
    out << l.label << std::string(l.label.size() < 8 ? 8 - l.label.size() : 1, ' ')
        << l.expression << '\n';
  }
}

void write_gatecount_text(std::ostream& out, const GateCountReport& r) {
  const double n2 = static_cast<double>(r.n_copies) * r.n_copies;
  out << "N=" << r.n_copies << ", register size " << compressed_register_size(r.n_copies)
      << '\n'
      << "stage 1 two-qubit ops: " << r.two_qubit_ops << '\n'
      << "stage 1 three-qubit ops: " << r.three_qubit_ops << '\n'
      << "stage 1 CNOT bound: " << r.cnot_bound_stage1
      << " (bound/N^2 = " << fixed(r.cnot_bound_stage1 / n2, 3) << ")\n"
      << "stage 2 CNOTs: " << r.stage2_cnots << ", MCX: " << r.mcx_count << '\n'
      << "stage 2 CNOT bound: " << r.stage2_cnot_bound
      << " (N log2(N)^2 = " << fixed(r.stage2_loose_bound, 2) << ")\n";
}

std::string gatecount_json(const GateCountReport& r) {
  const double n2 = static_cast<double>(r.n_copies) * r.n_copies;
  nlohmann::json doc = {{"schema", "qcompress-gatecount/1"},
                        {"N", r.n_copies},
                        {"register_size", compressed_register_size(r.n_copies)},
                        {"two_qubit_ops", r.two_qubit_ops},
                        {"three_qubit_ops", r.three_qubit_ops},
                        {"cnot_bound_stage1", r.cnot_bound_stage1},
                        {"cnot_bound_stage1_over_n2", r.cnot_bound_stage1 / n2},
                        {"stage2_cnots", r.stage2_cnots},
                        {"stage2_cnot_bound", r.stage2_cnot_bound},
                        {"stage2_loose_bound", r.stage2_loose_bound},
                        {"mcx_count", r.mcx_count}};
  return doc.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact compression of identical qubits: synthesis, verification and noise"};
  app.name("qcompress");
  app.require_subcommand(1);

  int verify_n_max = 7;
  bool verify_json_flag = false;
  bool allow_large = false;
  std::string inject;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check the synthesized circuits");
  verify_cmd->add_option("--n-max", verify_n_max, "largest N to check")->required();
  verify_cmd->add_flag("--json", verify_json_flag, "machine-readable report");
  verify_cmd->add_option("--inject-fault", inject, "deliberate defect: w-sign")
      ->check(CLI::IsMember({"w-sign"}));
  verify_cmd->add_option("--seed", verify_seed, "seed for the random states");
  verify_cmd->add_flag("--allow-large", allow_large, "lift the N <= 16 guard");

  int trace_n = 0;
  int trace_k = 0;
  auto* trace_cmd = app.add_subcommand("trace", "stage-1 state after every gate");
  trace_cmd->add_option("--n", trace_n, "number of copies N")->required();
  trace_cmd->add_option("--k", trace_k, "excitations k")->required();

  int gc_n = 0;
  bool gc_json = false;
  auto* gc_cmd = app.add_subcommand("gatecount", "gate counts and CNOT bounds");
  gc_cmd->add_option("--n", gc_n, "number of copies N")->required();
  gc_cmd->add_flag("--json", gc_json, "JSON output");

  auto* noise_cmd = app.add_subcommand("noise", "Monte Carlo fidelity under rotation noise");
  noise_cmd->require_subcommand(1);
  std::string format = "csv";
  std::string output;
  std::uint64_t samples = 2000;
  std::optional<std::uint64_t> seed;

  std::string global_range = "3..15";
  double global_phi = 0.1;
  auto* global_cmd = noise_cmd->add_subcommand("global", "global fidelity versus N");
  global_cmd->add_option("--n", global_range, "N range A..B");
  global_cmd->add_option("--phi", global_phi, "rotation angle in radians");

  int single_n = 7;
  std::vector<double> single_phis = {0.05, 0.1, 0.2};
  std::vector<std::string> single_axes = {"x", "y", "z", "averaged"};
  auto* single_cmd = noise_cmd->add_subcommand("single", "single-qubit fidelity at fixed N");
  single_cmd->add_option("--n", single_n, "number of copies N");
  single_cmd->add_option("--phi", single_phis, "rotation angles")->delimiter(',');
  single_cmd->add_option("--axes", single_axes, "x, y, z, averaged")->delimiter(',');

  for (auto* cmd : {global_cmd, single_cmd}) {
    cmd->add_option("--samples", samples, "samples per point");
    cmd->add_option("--seed", seed, "RNG seed (generated when omitted)");
    cmd->add_option("--output", output, "output file (default stdout)");
    cmd->add_option("--format", format, "csv, text or json")
        ->check(CLI::IsMember({"csv", "text", "json"}));
  }

  app.add_subcommand("table1", "direction-transmission fidelities for n = 1..6");

  int export_n = 0;
  bool export_decompress = false;
  std::string export_output;
  auto* export_cmd = app.add_subcommand("export", "circuit in text form");
  export_cmd->add_option("--n", export_n, "number of copies N")->required();
  export_cmd->add_flag("--decompress", export_decompress, "export the inverse circuit");
  export_cmd->add_option("--output", export_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (*verify_cmd) {
      if (verify_n_max > kResourceGuardN && !allow_large) {
        throw ResourceGuardError("n-max " + std::to_string(verify_n_max) + " exceeds " +
                                 std::to_string(kResourceGuardN) + "; pass --allow-large");
      }
      SynthesisOptions options;
      if (inject == "w-sign") options.w_fault = WFault::kSignFlip;
      const VerifyReport report = verify(verify_n_max, options, verify_seed);
      if (verify_json_flag) {
        out << verify_json(report);
      } else {
        write_verify_text(out, report);
      }
      return report.passed() ? kOk : kCheckFailed;
    }
    if (*trace_cmd) {
      write_trace(out, trace_n, trace_k);
      return kOk;
    }
    if (*gc_cmd) {
      if (gc_n < 1) throw ValidationError("gatecount needs N >= 1");
      const auto report = gate_count_report(gc_n);
      if (gc_json) {
        out << gatecount_json(report);
      } else {
        write_gatecount_text(out, report);
      }
      return kOk;
    }
    if (*noise_cmd) {
      if (samples < 1) throw ValidationError("samples must be >= 1");
      std::vector<FidelityRecord> records;
      if (*global_cmd) {
        const auto [lo, hi] = parse_range(global_range);
        if (hi > kResourceGuardN) {
          throw ResourceGuardError("noise sweeps are limited to N <= " +
                                   std::to_string(kResourceGuardN));
        }
        records = sweep_global(lo, hi, global_phi, samples, pick_seed(seed, err));
      } else {
        if (single_n > kResourceGuardN) {
          throw ResourceGuardError("noise sweeps are limited to N <= " +
                                   std::to_string(kResourceGuardN));
        }
        std::vector<AxisPolicy> axes;
        for (const auto& a : single_axes) axes.push_back(parse_axis(a));
        records = sweep_single(single_n, single_phis, axes, samples, pick_seed(seed, err));
      }
      emit(output, render_records(records, format), out);
      return kOk;
    }
    if (app.got_subcommand("table1")) {
      render_table1(out);
      return kOk;
    }
    if (*export_cmd) {
      if (export_n < 1) throw ValidationError("export needs N >= 1");
      if (export_n > kResourceGuardN) {
        throw ResourceGuardError("export is limited to N <= " + std::to_string(kResourceGuardN));
      }
      CompressionCircuit c = synthesize(export_n);
      if (export_decompress) c = inverse(c);
      emit(export_output, export_circuit(c), out);
      return kOk;
    }
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace qcompress::cli
