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

#ifndef BSQEC_CODE_ALGEBRA_HPP_
#define BSQEC_CODE_ALGEBRA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bsqec/pauli.hpp"

namespace bsqec {

// The 3x3 Bacon-Shor layout: 9 physical qubits, 12 two-qubit gauge operators
// (6 ZZ on vertical neighbors, 6 XX on horizontal neighbors), 4 stabilizer
// generators, 16 stabilizer eigenspaces, 4 effective gauge qubits.
inline constexpr int kNumQubits = 9;
inline constexpr int kNumGauge = 12;
inline constexpr int kNumStabilizers = 4;
inline constexpr int kNumSubspaces = 16;
inline constexpr int kNumGaugeQubits = 4;
inline constexpr int kNumErrorChannels = 27;  // 9 qubits x {X, Y, Z}

enum class LogicalOp : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

const char* to_string(LogicalOp op);

// Accumulated logical Pauli operation tracked as two bits, phases dropped.
struct LogicalFrame {
  bool x = false;
  bool z = false;

  void apply(LogicalOp op) {
    switch (op) {
      case LogicalOp::I: break;
      case LogicalOp::X: x = !x; break;
      case LogicalOp::Z: z = !z; break;
      case LogicalOp::Y: x = !x; z = !z; break;
    }
  }
  LogicalOp op() const {
    if (x && z) return LogicalOp::Y;
    if (x) return LogicalOp::X;
    if (z) return LogicalOp::Z;
    return LogicalOp::I;
  }
  bool operator==(const LogicalFrame&) const = default;
};

// Residue of an error after fixing its subspace jump: the remaining logical
// operation and gauge-qubit operation, plus the quarter-turn phase that makes
// the factorization exact.
struct ErrorAction {
  int subspace = 0;       // index l of the Q_l factor
  LogicalOp logical = LogicalOp::I;
  Pauli gauge_op;         // operator on the 4 gauge qubits
  uint8_t phase = 0;      // exponent of i in E = i^phase Q_l L G
};

struct HarmfulPair {
  int channel1 = 0;  // error channels, qubit-major with X < Y < Z
  int channel2 = 0;
  LogicalOp logical = LogicalOp::I;
  int subspace = 0;  // subspace reached from the code space by the pair
};

struct QMulResult {
  int subspace = 0;
  uint8_t phase = 0;  // Q_{l1} Q_{l2} = i^phase Q_subspace
};

// Decomposition of an element of the stabilizer normalizer over the gauge
// group and the logical operators.
struct NormalizerReduction {
  LogicalOp logical = LogicalOp::I;
  uint16_t gauge_mask = 0;  // bit k set -> gauge generator k+1 participates
  uint8_t phase = 0;        // p = i^phase * L * prod_k G_k (ascending k)
};

// Error channel indexing: channel = 3*(qubit-1) + kind with kind X=0, Y=1,
// Z=2.  This is the order in which simultaneous jumps are applied.
inline constexpr int channel_index(int qubit, char kind) {
  return 3 * (qubit - 1) + (kind == 'X' ? 0 : (kind == 'Y' ? 1 : 2));
}
int channel_qubit(int channel);
char channel_kind(int channel);
Pauli channel_pauli(int channel);

// Immutable table set for the code.  Construction runs a self-check of the
// computed subspace multiplication table against a stored reference copy and
// throws on any mismatch.  Thread-safe for concurrent reads.
class CodeTables {
 public:
  static const CodeTables& instance();

  // Two-qubit measured operators, k = 1..12.
  const Pauli& gauge_op(int k) const { return gauge_[k - 1]; }
  // Stabilizer generators in the syndrome ordering (Sx1, Sz1, Sx2, Sz2).
  const Pauli& stabilizer(int n) const { return stab_[n]; }
  // Subspace basis representative Q_l, l = 0..15.
  const Pauli& subspace_rep(int l) const { return q_[l]; }
  // Syndrome signs (Sx1, Sz1, Sx2, Sz2) of subspace l.
  const std::array<int8_t, 4>& syndrome_signs(int l) const { return syndrome_[l]; }
  // Canonical correction operator for subspace l (identity for l = 0).
  const Pauli& correction_op(int l) const { return cop_[l]; }
  // Logical factor carried by the single-error class with Q-factor Q_l.
  LogicalOp class_logical(int l) const { return class_logical_[l]; }

  // Subspace whose syndrome pattern matches the anticommutation pattern of p
  // with the four stabilizer generators.
  int syndrome_of(const Pauli& p) const;
  // Subspace index from explicit signs in (Sx1, Sz1, Sx2, Sz2) order.
  int subspace_from_signs(const std::array<int8_t, 4>& signs) const;

  // Q_{l1} * Q_{l2} = i^phase * Q_l, computed from Pauli products and
  // cross-checked against the stored table.
  QMulResult q_mul(int l1, int l2) const { return qmul_[l1][l2]; }

  // Sign of [G_k]_{Q_l}: -1 iff G_k anticommutes with Q_l.
  int zeta(int k, int l) const { return zeta_[k - 1][l]; }

  // Effective operator of G_k on the 4 gauge qubits.
  const Pauli& gauge_rep(int k) const { return curly_g_[k - 1]; }

  // Align a 9-qubit gauge-group element to the 4 gauge qubits.
  Pauli lift_gauge_mask(uint16_t gauge_mask) const;

  // Factorization of a single-qubit error per the equivalence tables.
  const ErrorAction& error_action(int channel) const { return action_[channel]; }
  ErrorAction decompose_error(const Pauli& single_qubit_error) const;

  // Logical/gauge content of an element of the stabilizer normalizer;
  // nullopt if p anticommutes with some stabilizer generator.
  std::optional<NormalizerReduction> reduce_mod_gauge(const Pauli& p) const;

  // All unordered pairs of single-qubit errors that, combined with the
  // canonical correction for their joint syndrome, act as a logical operator.
  std::vector<HarmfulPair> enumerate_harmful_pairs() const;

  const Pauli& logical_x() const { return logical_x_; }  // X on qubits 1,4,7
  const Pauli& logical_z() const { return logical_z_; }  // Z on qubits 1,2,3

 private:
  CodeTables();

  std::array<Pauli, kNumGauge> gauge_;
  std::array<Pauli, kNumStabilizers> stab_;
  std::array<Pauli, kNumSubspaces> q_;
  std::array<std::array<int8_t, 4>, kNumSubspaces> syndrome_;
  std::array<Pauli, kNumSubspaces> cop_;
  std::array<LogicalOp, kNumSubspaces> class_logical_;
  std::array<std::array<QMulResult, kNumSubspaces>, kNumSubspaces> qmul_;
  std::array<std::array<int8_t, kNumSubspaces>, kNumGauge> zeta_;
  std::array<Pauli, kNumGauge> curly_g_;
  std::array<ErrorAction, kNumErrorChannels> action_;
  Pauli logical_x_;
  Pauli logical_z_;
  int syndrome_lookup_[16] = {};

  // GF(2) solver state for reduction over {G_1..G_12, X_L, Z_L}.
  struct SolveRow {
    uint32_t vec = 0;   // x||z bits (18 used)
    uint16_t combo = 0; // combination over the 14 generators
  };
  std::array<SolveRow, 14> echelon_;
  void build_reduction_basis();
};

// Convenience accessor.
inline const CodeTables& code() { return CodeTables::instance(); }

}  // namespace bsqec

#endif  // BSQEC_CODE_ALGEBRA_HPP_
