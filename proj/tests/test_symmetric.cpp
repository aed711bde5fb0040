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

#include <bit>

#include "doctest.h"
#include "helpers.hpp"
#include "qcompress/symmetric.hpp"

using namespace qcompress;
using qcompress::testing::max_abs_diff;

namespace {

Gate swap_gate(int p, int q) {
  return Gate::dense("SWAP",
                     Matrix(4, {1, 0, 0, 0,  //
                                0, 0, 1, 0,  //
                                0, 1, 0, 0,  //
                                0, 0, 0, 1}),
                     {p, q});
}

}  // namespace

TEST_CASE("binomial coefficients are exact") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("compressed register size is ceil(log2(N+1))") {
  CHECK(compressed_register_size(1) == 1);
  CHECK(compressed_register_size(2) == 2);
  CHECK(compressed_register_size(3) == 2);
  CHECK(compressed_register_size(4) == 3);
  CHECK(compressed_register_size(7) == 3);
  CHECK(compressed_register_size(8) == 4);
  CHECK(compressed_register_size(15) == 4);
  CHECK(compressed_register_size(16) == 5);
}

TEST_CASE("qubit parameters must be normalized") {
  CHECK_THROWS_AS(QubitParams(1.0, 1.0), ValidationError);
  CHECK_NOTHROW(QubitParams(0.6, cplx(0.0, 0.8)));
}

TEST_CASE("product states") {
  CHECK(product_state(QubitParams(1.0, 0.0), 3) == StateVector(3));

  const double h = 1.0 / std::sqrt(2.0);
  const StateVector plus4 = product_state(QubitParams(h, h), 4);
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(plus4[i] - 0.25) < 1e-15);

  // Each single-excitation index carries alpha^4 beta; together they are
  // sqrt(5) alpha^4 beta |5;1>.
  const QubitParams psi(0.6, cplx(0.0, 0.8));
  const StateVector five = product_state(psi, 5);
  const cplx a4b = std::pow(psi.alpha(), 4) * psi.beta();
  for (int q = 0; q < 5; ++q) CHECK(std::abs(five[std::size_t{1} << q] - a4b) < 1e-15);
  const cplx on_dicke = inner_product(dicke_state(5, 1), five);
  CHECK(std::abs(on_dicke - std::sqrt(5.0) * a4b) < 1e-14);

  CHECK_THROWS_AS(product_state(psi, 0), ValidationError);
}

TEST_CASE("Dicke states") {
  CHECK(dicke_state(3, 0) == StateVector(3));
  const StateVector d31 = dicke_state(3, 1);
  const double w = 1.0 / std::sqrt(3.0);
  for (std::size_t i : {1, 2, 4}) CHECK(std::abs(d31[i] - w) < 1e-15);
  for (std::size_t i : {0, 3, 5, 6, 7}) CHECK(d31[i] == cplx{});

  CHECK(std::abs(inner_product(dicke_state(5, 2), dicke_state(5, 3))) < 1e-15);
  CHECK(dicke_state(5, 3).norm_squared() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(dicke_state(3, 4), PositionError);
  CHECK_THROWS_AS(dicke_state(3, -1), PositionError);
}

TEST_CASE("C and B states") {
  CHECK(c_state(5, 0) == StateVector(5));
  CHECK(c_state(5, 3)[4] == cplx{1.0});
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l <= 6; ++l)
      CHECK(std::abs(inner_product(c_state(6, k), c_state(6, l))) == (k == l ? 1.0 : 0.0));

  CHECK(b_state(5, 0) == c_state(5, 0));
  CHECK(b_state(5, 3)[3] == cplx{1.0});  // qubits 1 and 2
  CHECK(b_state(5, 4)[4] == cplx{1.0});  // qubit 3
  CHECK(b_state(5, 1) == c_state(5, 1));
  CHECK(b_state(5, 2) == c_state(5, 2));
  CHECK_THROWS_AS(b_state(5, 6), PositionError);
  CHECK_THROWS_AS(c_state(5, 6), PositionError);
}

TEST_CASE("symmetric amplitudes") {
  const auto basis = symmetric_amplitudes(QubitParams(1.0, 0.0), 7);
  CHECK(basis[0] == cplx{1.0});
  for (int k = 1; k <= 7; ++k) CHECK(basis[k] == cplx{});

  const QubitParams psi(0.6, cplx(0.0, 0.8));
  const auto five = symmetric_amplitudes(psi, 5);
  CHECK(std::abs(five[1] - std::sqrt(5.0) * std::pow(psi.alpha(), 4) * psi.beta()) < 1e-15);
  CHECK(std::abs(five[2] - std::sqrt(10.0) * std::pow(psi.alpha(), 3) * std::pow(psi.beta(), 2)) < 1e-15);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const QubitParams q = testing::random_qubit(rng);
    const auto amps = symmetric_amplitudes(q, 6);
    const StateVector prod = product_state(q, 6);
    double total = 0.0;
    for (int k = 0; k <= 6; ++k) {
      CHECK(std::abs(amps[k] - inner_product(dicke_state(6, k), prod)) < 1e-12);
      total += std::norm(amps[k]);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: product state expands over the Dicke basis") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const QubitParams q = testing::random_qubit(rng);
    const int n = 1 + trial % 10;
    const auto amps = symmetric_amplitudes(q, n);
    std::vector<cplx> sum(std::size_t{1} << n);
    for (int k = 0; k <= n; ++k) {
      const StateVector d = dicke_state(n, k);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += amps[k] * d[i];
    }
    REQUIRE(max_abs_diff(product_state(q, n).amplitudes(), sum) < 1e-12);
  }
}

TEST_CASE("property: Dicke states are permutation symmetric with C(N,k) support") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const StateVector d = dicke_state(n, k);
      std::uint64_t support = 0;
      for (const cplx& a : d.amplitudes()) support += a != cplx{} ? 1 : 0;
      CHECK(support == binomial(n, k));
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
          CHECK(max_abs_diff(apply_gate(d, swap_gate(p, q)), d) < 1e-12);
    }
}
