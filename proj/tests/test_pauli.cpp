// Copyright 2026 The bsqec Authors.
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

#include "doctest.h"

#include <random>

#include "bsqec/pauli.hpp"

using bsqec::Pauli;

namespace {

Pauli random_pauli(std::mt19937& gen, int nq) {
  std::uniform_int_distribution<int> mask(0, (1 << nq) - 1);
  std::uniform_int_distribution<int> ph(0, 3);
  return Pauli{static_cast<uint16_t>(mask(gen)), static_cast<uint16_t>(mask(gen)),
               static_cast<uint8_t>(ph(gen)), static_cast<uint8_t>(nq)};
}

}  // namespace

TEST_CASE("single-qubit products") {
  const auto X1 = Pauli::single(9, 1, 'X');
  const auto Z9 = Pauli::single(9, 9, 'Z');
  const auto X9 = Pauli::single(9, 9, 'X');
  const auto Y9 = Pauli::single(9, 9, 'Y');

  // Involution, phase included.
  CHECK((X1 * X1) == Pauli::identity(9));
  CHECK((Y9 * Y9) == Pauli::identity(9));

  // X9 Z9 = -i Y9.
  const auto p = X9 * Z9;
  CHECK(p.equal_up_to_phase(Y9));
  CHECK(((p.phase + 4 - Y9.phase) & 3) == 3);  // relative phase -i
  CHECK(bsqec::to_string(p) == "-i*Y9");
}

TEST_CASE("commutation by support overlap") {
  const auto X5 = Pauli::single(9, 5, 'X');
  const auto Z5 = Pauli::single(9, 5, 'Z');
  const auto X45 = Pauli::single(9, 4, 'X') * Pauli::single(9, 5, 'X');
  CHECK(bsqec::commutes(X5, X45));
  CHECK(!bsqec::commutes(Z5, X45));
}

TEST_CASE("product properties on random operators") {
  std::mt19937 gen(7);
  for (int it = 0; it < 500; ++it) {
    const auto a = random_pauli(gen, 9);
    const auto b = random_pauli(gen, 9);
    const auto c = random_pauli(gen, 9);

    // Associativity with exact phases.
    CHECK(((a * b) * c) == (a * (b * c)));

    // P * adjoint(P) = identity with zero phase.
    const auto unit = a * bsqec::adjoint(a);
    CHECK(unit == Pauli::identity(9));

    // a b = +/- b a depending on the commutation parity.
    const auto ab = a * b;
    const auto ba = b * a;
    CHECK(ab.equal_up_to_phase(ba));
    const int rel = (ab.phase + 4 - ba.phase) & 3;
    CHECK(rel == (bsqec::commutes(a, b) ? 0 : 2));
  }
}
