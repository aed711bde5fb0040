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

// Text form of a CompressionCircuit:
//
//   qcompress-circuit 1
//   N=<int> direction=<compress|decompress> stage_boundary=<int>
//   <record>*
//
// record := V[dg] targets=[..]
//         | U[dg] a=<int> b=<int> targets=[..]
//         | W[dg] a=<int> targets=[..]
//         | CX control=<int> target=<int> targets=[..]
//         | MCX pos=[..] neg=[..] target=<int> targets=[..]

#include <charconv>
#include <map>
#include <sstream>

#include "qcompress/circuit.hpp"

namespace qcompress {

namespace {

constexpr const char* kMagic = "qcompress-circuit 1";

std::string list(std::span<const int> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

class LineError {
 public:
  LineError(std::size_t line_no, std::string line)
      : line_no_(line_no), line_(std::move(line)) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("circuit text line " + std::to_string(line_no_) +
                          ": " + why + " in '" + line_ + "'");
  }

 private:
  std::size_t line_no_;
  std::string line_;
};

int parse_int(std::string_view text, const LineError& err) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    err.fail("bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, const LineError& err) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    err.fail("bad list '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), err));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

struct Record {
  std::string label;
  std::map<std::string, std::string, std::less<>> fields;
};

Record split_record(const std::string& line, const LineError& err) {
  std::istringstream in(line);
  Record r;
  in >> r.label;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) err.fail("expected key=value");
    if (!r.fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
      err.fail("duplicate key '" + token.substr(0, eq) + "'");
    }
  }
  return r;
}

const std::string& field(const Record& r, const char* key, const LineError& err) {
  const auto it = r.fields.find(key);
  if (it == r.fields.end()) err.fail(std::string("missing '") + key + "'");
  return it->second;
}

}  // namespace

std::string export_circuit(const CompressionCircuit& circuit) {
  std::ostringstream out;
  out << kMagic << "\n";
  out << "N=" << circuit.n_copies()
      << " direction=" << (circuit.is_decompression() ? "decompress" : "compress")
      << " stage_boundary=" << circuit.stage_boundary() << "\n";
  for (const CircuitStep& s : circuit.steps()) {
    out << step_label(s);
    std::visit(
        [&out](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, step::U>) {
            out << " a=" << p.a << " b=" << p.b;
          } else if constexpr (std::is_same_v<T, step::W>) {
            out << " a=" << p.a;
          } else if constexpr (std::is_same_v<T, step::CX>) {
            out << " control=" << p.control << " target=" << p.target;
          } else if constexpr (std::is_same_v<T, step::MCX>) {
            out << " pos=" << list(p.positive) << " neg=" << list(p.negative)
                << " target=" << p.target;
          }
        },
        s.spec);
    out << " targets=" << list(s.gate.targets()) << "\n";
  }
  return out.str();
}

CompressionCircuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line() || line != kMagic) {
    throw ValidationError("circuit text must start with '" + std::string(kMagic) + "'");
  }
  if (!next_line()) throw ValidationError("circuit text has no header line");
  const LineError header_err(line_no, line);
  const Record header = split_record("header " + line, header_err);
  const int n_copies = parse_int(field(header, "N", header_err), header_err);
  const std::string& direction = field(header, "direction", header_err);
  if (direction != "compress" && direction != "decompress") {
    header_err.fail("unknown direction");
  }
  const int boundary = parse_int(field(header, "stage_boundary", header_err), header_err);
  if (n_copies < 1 || boundary < 0) header_err.fail("out-of-range header value");

  std::vector<CircuitStep> steps;
  while (next_line()) {
    const LineError err(line_no, line);
    Record r = split_record(line, err);
    bool adjoint = false;
    std::string base = r.label;
    if (base.ends_with("dg")) {
      adjoint = true;
      base.resize(base.size() - 2);
    }
    StepSpec spec;
    std::size_t expected_fields = 1;  // targets
    if (base == "V") {
      spec = step::V{};
    } else if (base == "U") {
      spec = step::U{parse_int(field(r, "a", err), err), parse_int(field(r, "b", err), err)};
      expected_fields += 2;
    } else if (base == "W") {
      spec = step::W{parse_int(field(r, "a", err), err)};
      expected_fields += 1;
    } else if (base == "CX" && !adjoint) {
      spec = step::CX{parse_int(field(r, "control", err), err),
                      parse_int(field(r, "target", err), err)};
      expected_fields += 2;
    } else if (base == "MCX" && !adjoint) {
      spec = step::MCX{parse_list(field(r, "pos", err), err),
                       parse_list(field(r, "neg", err), err),
                       parse_int(field(r, "target", err), err)};
      expected_fields += 3;
    } else {
      err.fail("unknown gate label '" + r.label + "'");
    }
    if (r.fields.size() != expected_fields) err.fail("unexpected fields");

    CircuitStep s = [&] {
      try {
        return make_step(std::move(spec), adjoint);
      } catch (const std::exception& e) {
        err.fail(e.what());
      }
    }();
    const std::vector<int> targets = parse_list(field(r, "targets", err), err);
    if (!std::equal(targets.begin(), targets.end(), s.gate.targets().begin(),
                    s.gate.targets().end())) {
      err.fail("targets do not match the gate parameters");
    }
    steps.push_back(std::move(s));
  }
  if (static_cast<std::size_t>(boundary) > steps.size()) {
    header_err.fail("stage_boundary past the last record");
  }
  return CompressionCircuit(n_copies, std::move(steps),
                            static_cast<std::size_t>(boundary),
                            direction == "decompress");
}

}  // namespace qcompress
