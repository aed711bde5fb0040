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

#include "qcompress/noise.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

namespace qcompress {

namespace {

constexpr double kLeakTol = 1e-10;
constexpr double kFidelitySlack = 1e-12;

Gate rotation_gate(const RotationNoise& noise, int qubit) {
  return Gate::dense("R", rotation_unitary(noise), {qubit});
}

StateVector rotate_all(StateVector s, const RotationNoise& noise) {
  const Gate r = rotation_gate(noise, 1);
  for (int q = 1; q <= s.n_qubits(); ++q) {
    s.apply(q == 1 ? r : rotation_gate(noise, q));
  }
  return s;
}

void check_fidelity(double f, const char* what) {
  if (!(f >= -kFidelitySlack && f <= 1.0 + kFidelitySlack)) {
    throw ConsistencyError(std::string(what) + " fidelity " + std::to_string(f) +
                           " outside [0, 1]");
  }
}

PipelineFidelity finish(const StateVector& original, const StateVector& output,
                        const QubitParams& psi) {
  const double global = fidelity_pure(original, output);
  const double single = qubit_fidelity(reduced_single_qubit(output, 1), psi.as_state());
  check_fidelity(global, "global");
  check_fidelity(single, "single-qubit");
  return {global, single};
}

}  // namespace

RotationNoise::RotationNoise(Axis axis, double angle) : axis_(axis), angle_(angle) {
  const double len2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (!(std::abs(std::sqrt(len2) - 1.0) <= kUnitarityTol)) {
    throw ValidationError("rotation axis is not a unit vector");
  }
  if (!std::isfinite(angle)) throw ValidationError("rotation angle is not finite");
}

Matrix rotation_unitary(const RotationNoise& noise) {
  const double c = std::cos(noise.angle() / 2.0);
  const double s = std::sin(noise.angle() / 2.0);
  const auto& [nx, ny, nz] = noise.axis();
  const cplx i{0.0, 1.0};
  // n.sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
  return Matrix(2, {c - i * s * nz, -i * s * cplx(nx, -ny),  //
                    -i * s * cplx(nx, ny), c + i * s * nz});
}

PipelineFidelity run_uncompressed(int n_copies, const QubitParams& psi,
                                  const RotationNoise& noise) {
  if (n_copies < 1) throw ValidationError("need at least one copy");
  const Matrix r = rotation_unitary(noise);
  const cplx a = psi.alpha();
  const cplx b = psi.beta();
  const cplx overlap = std::conj(a) * (r(0, 0) * a + r(0, 1) * b) +
                       std::conj(b) * (r(1, 0) * a + r(1, 1) * b);
  const double single = std::min(1.0, std::norm(overlap));
  return {std::pow(single, n_copies), single};
}

PipelineFidelity simulate_uncompressed(int n_copies, const QubitParams& psi,
                                       const RotationNoise& noise) {
  const StateVector original = product_state(psi, n_copies);
  return finish(original, rotate_all(original, noise), psi);
}

StateVector compressed_pipeline_output(int n_copies, const QubitParams& psi,
                                       const RotationNoise& noise) {
  if (n_copies < 2) throw ValidationError("compression needs N >= 2");
  const CompressionCircuit circuit = synthesize(n_copies);
  const int n = circuit.register_size();
  const StateVector compressed = run(circuit, product_state(psi, n_copies));
  auto [stored, leak] = extract_low_register(compressed, n);
  if (leak > kLeakTol) {
    throw ConsistencyError("compressed state leaked " + std::to_string(leak) +
                           " outside the low register");
  }
  stored = rotate_all(std::move(stored), noise);
  return run(inverse(circuit), append_zero_qubits(stored, n_copies - n));
}

PipelineFidelity run_compressed(int n_copies, const QubitParams& psi,
                                const RotationNoise& noise) {
  const StateVector out = compressed_pipeline_output(n_copies, psi, noise);
  return finish(product_state(psi, n_copies), out, psi);
}

// --------------------------------------------------------- StorageChannel

StorageChannel::StorageChannel(int n_copies)
    : n_copies_(n_copies),
      register_size_(compressed_register_size(n_copies)),
      reg_dim_(std::size_t{1} << register_size_) {
  if (n_copies < 2) throw ValidationError("compression needs N >= 2");
  const CompressionCircuit fwd = synthesize(n_copies);
  const CompressionCircuit back = inverse(fwd);
  const std::size_t kdim = static_cast<std::size_t>(n_copies) + 1;

  encode_.assign(reg_dim_ * kdim, cplx{});
  for (int k = 0; k <= n_copies; ++k) {
    const StateVector img = run(fwd, dicke_state(n_copies, k));
    double kept = 0.0;
    for (std::size_t x = 0; x < reg_dim_; ++x) {
      encode_[x * kdim + k] = img[x];
      kept += std::norm(img[x]);
    }
    if (1.0 - kept > kLeakTol) {
      throw ConsistencyError("|N;k> leaks outside the low register for k=" +
                             std::to_string(k));
    }
  }

  std::vector<StateVector> decoded;
  decoded.reserve(reg_dim_);
  for (std::size_t x = 0; x < reg_dim_; ++x)
    decoded.push_back(run(back, StateVector::basis(n_copies, x)));

  overlap_.assign(kdim * reg_dim_, cplx{});
  for (int k = 0; k <= n_copies; ++k) {
    const StateVector d = dicke_state(n_copies, k);
    for (std::size_t x = 0; x < reg_dim_; ++x)
      overlap_[k * reg_dim_ + x] = inner_product(d, decoded[x]);
  }

  reduced_.assign(reg_dim_ * reg_dim_, {});
  for (std::size_t x = 0; x < reg_dim_; ++x) {
    const auto dx = decoded[x].amplitudes();
    for (std::size_t y = 0; y < reg_dim_; ++y) {
      const auto dy = decoded[y].amplitudes();
      std::array<cplx, 4> acc{};
      for (std::size_t i = 0; i < dx.size(); i += 2) {
        // qubit 1 is bit 0: i is the |0> member, i+1 the |1> member
        acc[0] += dx[i] * std::conj(dy[i]);
        acc[1] += dx[i] * std::conj(dy[i + 1]);
        acc[2] += dx[i + 1] * std::conj(dy[i]);
        acc[3] += dx[i + 1] * std::conj(dy[i + 1]);
      }
      reduced_[x * reg_dim_ + y] = acc;
    }
  }
}

PipelineFidelity StorageChannel::evaluate(const QubitParams& psi,
                                          const RotationNoise& noise) const {
  const std::vector<cplx> sym = symmetric_amplitudes(psi, n_copies_);
  const std::size_t kdim = sym.size();

  std::vector<cplx> stored(reg_dim_);
  for (std::size_t x = 0; x < reg_dim_; ++x)
    for (std::size_t k = 0; k < kdim; ++k) stored[x] += encode_[x * kdim + k] * sym[k];
  StateVector reg = rotate_all(StateVector::normalized(std::move(stored)), noise);

  cplx overlap{};
  for (std::size_t x = 0; x < reg_dim_; ++x) {
    cplx orig_dx{};
    for (std::size_t k = 0; k < kdim; ++k) orig_dx += std::conj(sym[k]) * overlap_[k * reg_dim_ + x];
    overlap += reg[x] * orig_dx;
  }

  Matrix rho(2);
  for (std::size_t x = 0; x < reg_dim_; ++x)
    for (std::size_t y = 0; y < reg_dim_; ++y) {
      const cplx w = reg[x] * std::conj(reg[y]);
      const auto& blk = reduced_[x * reg_dim_ + y];
      rho(0, 0) += w * blk[0];
      rho(0, 1) += w * blk[1];
      rho(1, 0) += w * blk[2];
      rho(1, 1) += w * blk[3];
    }
  const double global = std::min(1.0, std::norm(overlap));
  const double single = qubit_fidelity(DensityMatrix2(std::move(rho)), psi.as_state());
  check_fidelity(global, "global");
  check_fidelity(single, "single-qubit");
  return {global, single};
}

// --------------------------------------------------------------- sampling

std::string AxisPolicy::name() const {
  if (!fixed) return "averaged";
  if (*fixed == kAxisX) return "x";
  if (*fixed == kAxisY) return "y";
  if (*fixed == kAxisZ) return "z";
  return "fixed";
}

std::string to_string(Scenario s) {
  return s == Scenario::kCompressed ? "compressed" : "uncompressed";
}

std::string to_string(Metric m) {
  return m == Metric::kGlobal ? "global" : "single_qubit";
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

QubitParams random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double cos_theta = 1.0 - 2.0 * u(rng);
  const double phi = 2.0 * std::numbers::pi * u(rng);
  return QubitParams::from_bloch(std::acos(cos_theta), phi);
}

Axis random_axis(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double z = 1.0 - 2.0 * u(rng);
  const double phi = 2.0 * std::numbers::pi * u(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

FidelityRecord average_fidelity(int n_copies, double phi, Scenario scenario,
                                Metric metric, const AxisPolicy& axis_policy,
                                std::uint64_t samples, std::uint64_t rng_seed,
                                const StorageChannel* channel) {
  if (samples < 1) throw ValidationError("need at least one sample");
  if (n_copies < 1) throw ValidationError("need at least one copy");

  std::optional<StorageChannel> own;
  if (scenario == Scenario::kCompressed) {
    if (channel == nullptr) {
      own.emplace(n_copies);
      channel = &*own;
    } else if (channel->n_copies() != n_copies) {
      throw ValidationError("storage channel built for a different N");
    }
  }

  std::vector<double> values(samples);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      std::mt19937_64 rng = sample_rng(rng_seed, i);
      const QubitParams psi = random_qubit(rng);
      const Axis axis = axis_policy.fixed ? *axis_policy.fixed : random_axis(rng);
      const RotationNoise noise(axis, phi);
      const PipelineFidelity f = scenario == Scenario::kCompressed
                                     ? channel->evaluate(psi, noise)
                                     : run_uncompressed(n_copies, psi, noise);
      values[i] = metric == Metric::kGlobal ? f.global : f.single;
    }
  };

  const std::uint64_t threads = std::clamp<std::uint64_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(1, samples / 64));
  if (threads <= 1) {
    work(0, samples);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      const std::uint64_t chunk = (samples + threads - 1) / threads;
      for (std::uint64_t t = 0; t < threads; ++t) {
        const std::uint64_t begin = t * chunk;
        const std::uint64_t end = std::min(samples, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&work, &errors, t, begin, end] {
          try {
            work(begin, end);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Summed in index order so the result is independent of scheduling.
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(samples);
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double std_error =
      samples > 1 ? std::sqrt(sq / static_cast<double>(samples - 1) / static_cast<double>(samples))
                  : 0.0;
  return {scenario, metric, n_copies, phi, axis_policy, mean, std_error, samples, rng_seed};
}

}  // namespace qcompress
