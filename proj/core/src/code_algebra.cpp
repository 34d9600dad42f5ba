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

#include "bsqec/code_algebra.hpp"

#include <stdexcept>
#include <string>

namespace bsqec {
namespace {

// Reference copy of the subspace-representative multiplication table,
// Q_{row} * Q_{col} = i^phase * Q_{index}.  Kept as data independent of the
// Pauli-algebra computation; the two are compared at construction time to
// guard against transcription drift in either.
constexpr int8_t kQMulIndex[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
    {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13},
    {3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11},
    {5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14, 9, 8, 11, 10},
    {6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13, 10, 11, 8, 9},
    {7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 8, 9, 14, 15, 12, 13, 2, 3, 0, 1, 6, 7, 4, 5},
    {11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0, 7, 6, 5, 4},
    {12, 13, 14, 15, 8, 9, 10, 11, 4, 5, 6, 7, 0, 1, 2, 3},
    {13, 12, 15, 14, 9, 8, 11, 10, 5, 4, 7, 6, 1, 0, 3, 2},
    {14, 15, 12, 13, 10, 11, 8, 9, 6, 7, 4, 5, 2, 3, 0, 1},
    {15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0},
};

// Phase exponents (powers of i) for the same products.
constexpr int8_t kQMulPhase[16][16] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 3, 0, 0, 1, 3, 0, 0, 1, 3, 0, 0, 1, 3},
    {0, 3, 0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 0, 3, 0, 1},
    {0, 1, 3, 0, 0, 1, 3, 0, 0, 1, 3, 0, 0, 1, 3, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 3, 3, 3, 3},
    {0, 0, 1, 3, 0, 0, 1, 3, 1, 1, 2, 0, 3, 3, 0, 2},
    {0, 3, 0, 1, 0, 3, 0, 1, 1, 0, 1, 2, 3, 2, 3, 0},
    {0, 1, 3, 0, 0, 1, 3, 0, 1, 2, 0, 1, 3, 0, 2, 3},
    {0, 0, 0, 0, 3, 3, 3, 3, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 1, 3, 3, 3, 0, 2, 0, 0, 1, 3, 1, 1, 2, 0},
    {0, 3, 0, 1, 3, 2, 3, 0, 0, 3, 0, 1, 1, 0, 1, 2},
    {0, 1, 3, 0, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2, 0, 1},
    {0, 0, 0, 0, 1, 1, 1, 1, 3, 3, 3, 3, 0, 0, 0, 0},
    {0, 0, 1, 3, 1, 1, 2, 0, 3, 3, 0, 2, 0, 0, 1, 3},
    {0, 3, 0, 1, 1, 0, 1, 2, 3, 2, 3, 0, 0, 3, 0, 1},
    {0, 1, 3, 0, 1, 2, 0, 1, 3, 0, 2, 3, 0, 1, 3, 0},
};

// Syndrome signs (Sx1, Sz1, Sx2, Sz2) per subspace.
constexpr int8_t kSyndromeSigns[16][4] = {
    {+1, +1, +1, +1}, {+1, +1, +1, -1}, {+1, +1, -1, -1}, {+1, +1, -1, +1},
    {+1, -1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, -1}, {+1, -1, -1, +1},
    {-1, -1, +1, +1}, {-1, -1, +1, -1}, {-1, -1, -1, -1}, {-1, -1, -1, +1},
    {-1, +1, +1, +1}, {-1, +1, +1, -1}, {-1, +1, -1, -1}, {-1, +1, -1, +1},
};

// Canonical single-qubit correction per subspace: (qubit, kind).
constexpr struct { int qubit; char kind; } kCorrection[16] = {
    {0, 'I'}, {7, 'X'}, {9, 'Y'}, {3, 'Z'}, {1, 'X'}, {4, 'X'}, {6, 'Y'},
    {3, 'Y'}, {1, 'Y'}, {4, 'Y'}, {5, 'Y'}, {2, 'Y'}, {1, 'Z'}, {7, 'Y'},
    {8, 'Y'}, {2, 'Z'},
};

Pauli make9(std::initializer_list<std::pair<int, char>> factors) {
  Pauli p = Pauli::identity(kNumQubits);
  for (auto [q, k] : factors) p = p * Pauli::single(kNumQubits, q, k);
  return p;
}

}  // namespace

const char* to_string(LogicalOp op) {
  switch (op) {
    case LogicalOp::I: return "I";
    case LogicalOp::X: return "X";
    case LogicalOp::Y: return "Y";
    case LogicalOp::Z: return "Z";
  }
  return "?";
}

int channel_qubit(int channel) { return channel / 3 + 1; }

char channel_kind(int channel) {
  static const char kinds[3] = {'X', 'Y', 'Z'};
  return kinds[channel % 3];
}

Pauli channel_pauli(int channel) {
  return Pauli::single(kNumQubits, channel_qubit(channel), channel_kind(channel));
}

const CodeTables& CodeTables::instance() {
  static const CodeTables tables;
  return tables;
}

CodeTables::CodeTables() {
  // Measured two-qubit operators: ZZ down the columns, XX along the rows of
  // the 3x3 qubit grid (qubit q sits at row (q-1)/3, column (q-1)%3).
  const std::pair<int, int> z_pairs[6] = {{1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}, {6, 9}};
  const std::pair<int, int> x_pairs[6] = {{1, 2}, {4, 5}, {7, 8}, {2, 3}, {5, 6}, {8, 9}};
  for (int i = 0; i < 6; ++i) {
    gauge_[i] = make9({{z_pairs[i].first, 'Z'}, {z_pairs[i].second, 'Z'}});
    gauge_[6 + i] = make9({{x_pairs[i].first, 'X'}, {x_pairs[i].second, 'X'}});
  }

  stab_[0] = gauge_[6] * gauge_[7] * gauge_[8];    // Sx1 = X12 X45 X78
  stab_[1] = gauge_[0] * gauge_[1] * gauge_[2];    // Sz1 = Z14 Z25 Z36
  stab_[2] = gauge_[9] * gauge_[10] * gauge_[11];  // Sx2 = X23 X56 X89
  stab_[3] = gauge_[3] * gauge_[4] * gauge_[5];    // Sz2 = Z47 Z58 Z69

  logical_x_ = make9({{1, 'X'}, {4, 'X'}, {7, 'X'}});
  logical_z_ = make9({{1, 'Z'}, {2, 'Z'}, {3, 'Z'}});

  // Subspace representatives factor as (op on qubit 1) x (op on qubit 9) with
  // the letters cycling I, X, Y, Z; l = 4*(qubit-1 letter) + (qubit-9 letter).
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int l = 0; l < kNumSubspaces; ++l) {
    Pauli p = Pauli::identity(kNumQubits);
    if (const char c1 = letters[l >> 2]; c1 != 'I') p = p * Pauli::single(kNumQubits, 1, c1);
    if (const char c9 = letters[l & 3]; c9 != 'I') p = p * Pauli::single(kNumQubits, 9, c9);
    q_[l] = p;
  }

  for (int l = 0; l < kNumSubspaces; ++l) {
    for (int n = 0; n < 4; ++n) syndrome_[l][n] = kSyndromeSigns[l][n];
  }
  for (int l = 0; l < kNumSubspaces; ++l) {
    int pattern = 0;
    for (int n = 0; n < 4; ++n) {
      if (syndrome_[l][n] < 0) pattern |= 1 << n;
    }
    syndrome_lookup_[pattern] = l;
  }

  // Consistency of the syndrome table with the representatives.
  for (int l = 0; l < kNumSubspaces; ++l) {
    if (syndrome_of(q_[l]) != l) throw std::logic_error("syndrome table inconsistent");
  }

  for (int l = 0; l < kNumSubspaces; ++l) {
    cop_[l] = kCorrection[l].qubit == 0
                  ? Pauli::identity(kNumQubits)
                  : Pauli::single(kNumQubits, kCorrection[l].qubit, kCorrection[l].kind);
    if (l != 0 && syndrome_of(cop_[l]) != l) throw std::logic_error("correction table inconsistent");
  }

  // Subspace multiplication, computed then compared with the reference copy.
  for (int l1 = 0; l1 < kNumSubspaces; ++l1) {
    for (int l2 = 0; l2 < kNumSubspaces; ++l2) {
      const Pauli p = q_[l1] * q_[l2];
      int l = -1;
      for (int c = 0; c < kNumSubspaces; ++c) {
        if (q_[c].equal_up_to_phase(p)) {
          l = c;
          break;
        }
      }
      if (l < 0) throw std::logic_error("subspace product not closed");
      qmul_[l1][l2].subspace = l;
      qmul_[l1][l2].phase = static_cast<uint8_t>((p.phase + 4 - q_[l].phase) & 3);
      if (l != kQMulIndex[l1][l2] || qmul_[l1][l2].phase != kQMulPhase[l1][l2]) {
        throw std::logic_error("subspace multiplication table mismatch at (" +
                               std::to_string(l1) + "," + std::to_string(l2) + ")");
      }
    }
  }

  for (int k = 0; k < kNumGauge; ++k) {
    for (int l = 0; l < kNumSubspaces; ++l) {
      zeta_[k][l] = commutes(gauge_[k], q_[l]) ? 1 : -1;
    }
  }

  // Effective action of each measured operator on the 4 gauge qubits.
  auto g4 = [](std::initializer_list<std::pair<int, char>> factors) {
    Pauli p = Pauli::identity(kNumGaugeQubits);
    for (auto [q, k] : factors) p = p * Pauli::single(kNumGaugeQubits, q, k);
    return p;
  };
  curly_g_[0] = g4({{1, 'Z'}});
  curly_g_[1] = g4({{1, 'Z'}, {2, 'Z'}});
  curly_g_[2] = g4({{2, 'Z'}});
  curly_g_[3] = g4({{3, 'Z'}});
  curly_g_[4] = g4({{3, 'Z'}, {4, 'Z'}});
  curly_g_[5] = g4({{4, 'Z'}});
  curly_g_[6] = g4({{1, 'X'}});
  curly_g_[7] = g4({{1, 'X'}, {3, 'X'}});
  curly_g_[8] = g4({{3, 'X'}});
  curly_g_[9] = g4({{2, 'X'}});
  curly_g_[10] = g4({{2, 'X'}, {4, 'X'}});
  curly_g_[11] = g4({{4, 'X'}});

  build_reduction_basis();

  for (int c = 0; c < kNumErrorChannels; ++c) {
    action_[c] = decompose_error(channel_pauli(c));
  }

  class_logical_[0] = LogicalOp::I;
  for (int l = 1; l < kNumSubspaces; ++l) {
    const auto red = reduce_mod_gauge(cop_[l] * q_[l]);
    if (!red) throw std::logic_error("correction residue not in normalizer");
    class_logical_[l] = red->logical;
  }
}

void CodeTables::build_reduction_basis() {
  // Generators of the group used to classify normalizer elements: the 12
  // measured operators plus the two bare logicals.  Bits 0..11 select G_k,
  // bit 12 selects X_L, bit 13 selects Z_L.
  auto vec_of = [](const Pauli& p) -> uint32_t {
    return static_cast<uint32_t>(p.x) | (static_cast<uint32_t>(p.z) << kNumQubits);
  };
  std::array<SolveRow, 14> rows;
  for (int k = 0; k < kNumGauge; ++k) rows[k] = {vec_of(gauge_[k]), static_cast<uint16_t>(1u << k)};
  rows[12] = {vec_of(logical_x_), 1u << 12};
  rows[13] = {vec_of(logical_z_), 1u << 13};

  // Gaussian elimination over GF(2), tracking combinations.
  int rank = 0;
  for (int bitpos = 2 * kNumQubits - 1; bitpos >= 0 && rank < 14; --bitpos) {
    const uint32_t mask = 1u << bitpos;
    int pivot = -1;
    for (int r = rank; r < 14; ++r) {
      if (rows[r].vec & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 14; ++r) {
      if (r != rank && (rows[r].vec & mask)) {
        rows[r].vec ^= rows[rank].vec;
        rows[r].combo ^= rows[rank].combo;
      }
    }
    ++rank;
  }
  if (rank != 14) throw std::logic_error("reduction generators not independent");
  echelon_ = rows;
}

int CodeTables::syndrome_of(const Pauli& p) const {
  int pattern = 0;
  for (int n = 0; n < kNumStabilizers; ++n) {
    if (!commutes(p, stab_[n])) pattern |= 1 << n;
  }
  return syndrome_lookup_[pattern];
}

int CodeTables::subspace_from_signs(const std::array<int8_t, 4>& signs) const {
  int pattern = 0;
  for (int n = 0; n < 4; ++n) {
    if (signs[n] < 0) pattern |= 1 << n;
  }
  return syndrome_lookup_[pattern];
}

Pauli CodeTables::lift_gauge_mask(uint16_t gauge_mask) const {
  Pauli g = Pauli::identity(kNumGaugeQubits);
  for (int k = 0; k < kNumGauge; ++k) {
    if (gauge_mask & (1u << k)) g = g * curly_g_[k];
  }
  return g;
}

std::optional<NormalizerReduction> CodeTables::reduce_mod_gauge(const Pauli& p) const {
  for (int n = 0; n < kNumStabilizers; ++n) {
    if (!commutes(p, stab_[n])) return std::nullopt;
  }
  uint32_t v = static_cast<uint32_t>(p.x) | (static_cast<uint32_t>(p.z) << kNumQubits);
  uint16_t combo = 0;
  for (const auto& row : echelon_) {
    // Rows are in reduced echelon form; each row's highest bit is its pivot.
    const uint32_t high = 1u << (31 - std::countl_zero(row.vec));
    if (v & high) {
      v ^= row.vec;
      combo ^= row.combo;
    }
  }
  if (v != 0) return std::nullopt;  // outside the normalizer span

  NormalizerReduction red;
  red.gauge_mask = combo & 0x0fff;
  const bool lx = combo & (1u << 12);
  const bool lz = combo & (1u << 13);
  red.logical = lx ? (lz ? LogicalOp::Y : LogicalOp::X) : (lz ? LogicalOp::Z : LogicalOp::I);

  // Phase making the factorization exact: p = i^phase * L * prod_k G_k.
  Pauli recon = Pauli::identity(kNumQubits);
  if (lx) recon = recon * logical_x_;
  if (lz) recon = recon * logical_z_;
  if (lx && lz) recon.phase = static_cast<uint8_t>((recon.phase + 1) & 3);  // Y_L = i X_L Z_L
  for (int k = 0; k < kNumGauge; ++k) {
    if (red.gauge_mask & (1u << k)) recon = recon * gauge_[k];
  }
  if (!recon.equal_up_to_phase(p)) throw std::logic_error("reduction reconstruction mismatch");
  red.phase = static_cast<uint8_t>((p.phase + 4 - recon.phase) & 3);
  return red;
}

ErrorAction CodeTables::decompose_error(const Pauli& e) const {
  if (e.nq != kNumQubits || e.weight() != 1) {
    throw std::invalid_argument("decompose_error: expected a single-qubit operator on 9 qubits");
  }
  ErrorAction a;
  a.subspace = syndrome_of(e);
  const Pauli m = adjoint(q_[a.subspace]) * e;
  const auto red = reduce_mod_gauge(m);
  if (!red) throw std::logic_error("single-qubit error residue not reducible");
  a.logical = red->logical;
  a.gauge_op = lift_gauge_mask(red->gauge_mask);
  a.phase = red->phase;
  return a;
}

std::vector<HarmfulPair> CodeTables::enumerate_harmful_pairs() const {
  std::vector<HarmfulPair> out;
  for (int c1 = 0; c1 < kNumErrorChannels; ++c1) {
    for (int c2 = c1 + 1; c2 < kNumErrorChannels; ++c2) {
      const Pauli pair = channel_pauli(c1) * channel_pauli(c2);
      const int l = syndrome_of(pair);
      const Pauli residue = pair * cop_[l];
      const auto red = reduce_mod_gauge(residue);
      if (!red) throw std::logic_error("pair residue not in normalizer");
      if (red->logical != LogicalOp::I) {
        out.push_back({c1, c2, red->logical, l});
      }
    }
  }
  return out;
}

}  // namespace bsqec
