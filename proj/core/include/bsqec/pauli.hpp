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

#ifndef BSQEC_PAULI_HPP_
#define BSQEC_PAULI_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsqec {

// n-qubit Pauli operator in symplectic form with a quarter-turn phase:
//
//   P = i^phase * prod_j X_j^{x_j} Z_j^{z_j}
//
// so that Y = i X Z on each qubit.  Qubits are numbered 1..nq; qubit q maps
// to bit (nq - q) of the masks, which makes the X mask directly usable as an
// XOR on computational-basis indices written with qubit 1 as the most
// significant bit.
struct Pauli {
  uint16_t x = 0;
  uint16_t z = 0;
  uint8_t phase = 0;  // exponent of i, mod 4
  uint8_t nq = 9;

  static constexpr uint16_t bit(int nq, int qubit) {
    return static_cast<uint16_t>(1u << (nq - qubit));
  }

  static Pauli identity(int nq) { return Pauli{0, 0, 0, static_cast<uint8_t>(nq)}; }

  // Single-qubit factor; kind is 'X', 'Y' or 'Z'.  Y carries phase 1 (Y = iXZ).
  static Pauli single(int nq, int qubit, char kind) {
    if (qubit < 1 || qubit > nq) throw std::out_of_range("Pauli::single: qubit index");
    const uint16_t b = bit(nq, qubit);
    switch (kind) {
      case 'X': return Pauli{b, 0, 0, static_cast<uint8_t>(nq)};
      case 'Z': return Pauli{0, b, 0, static_cast<uint8_t>(nq)};
      case 'Y': return Pauli{b, b, 1, static_cast<uint8_t>(nq)};
      default: throw std::invalid_argument("Pauli::single: kind must be X, Y or Z");
    }
  }

  bool is_identity_up_to_phase() const { return x == 0 && z == 0; }

  bool operator==(const Pauli& o) const {
    return x == o.x && z == o.z && phase == o.phase && nq == o.nq;
  }

  bool equal_up_to_phase(const Pauli& o) const { return x == o.x && z == o.z && nq == o.nq; }

  // Support of the operator (qubits acted on nontrivially).
  uint16_t support() const { return static_cast<uint16_t>(x | z); }
  int weight() const { return std::popcount(support()); }
};

// Exact product including the quarter-turn phase.  Moving the left factor's
// Z block past the right factor's X block picks up (-1) per overlap.
inline Pauli operator*(const Pauli& a, const Pauli& b) {
  if (a.nq != b.nq) throw std::invalid_argument("Pauli product: qubit count mismatch");
  Pauli r;
  r.nq = a.nq;
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  r.phase = static_cast<uint8_t>((a.phase + b.phase + 2 * std::popcount(static_cast<unsigned>(a.z & b.x))) & 3);
  return r;
}

inline bool commutes(const Pauli& a, const Pauli& b) {
  const int s = std::popcount(static_cast<unsigned>(a.x & b.z)) +
                std::popcount(static_cast<unsigned>(a.z & b.x));
  return (s & 1) == 0;
}

inline Pauli adjoint(const Pauli& p) {
  // (i^k X^x Z^z)^dagger = i^{-k} Z^z X^x = i^{-k} (-1)^{|x&z|} X^x Z^z.
  Pauli r = p;
  r.phase = static_cast<uint8_t>((4 - p.phase + 2 * std::popcount(static_cast<unsigned>(p.x & p.z))) & 3);
  return r;
}

inline std::string to_string(const Pauli& p) {
  // Displayed in terms of X/Y/Z letters; each Y letter absorbs one factor of
  // i from the stored X^x Z^z form.
  static const char* phase_txt[4] = {"", "i*", "-", "-i*"};
  const int n_y = std::popcount(static_cast<unsigned>(p.x & p.z));
  std::string s = phase_txt[(p.phase + 4 - (n_y & 3)) & 3];
  bool any = false;
  for (int q = 1; q <= p.nq; ++q) {
    const uint16_t b = Pauli::bit(p.nq, q);
    const bool hx = p.x & b, hz = p.z & b;
    if (!hx && !hz) continue;
    any = true;
    s += hx ? (hz ? 'Y' : 'X') : 'Z';
    s += std::to_string(q);
  }
  if (!any) s += "I";
  return s;
}

}  // namespace bsqec

#endif  // BSQEC_PAULI_HPP_
