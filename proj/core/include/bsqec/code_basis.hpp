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

#ifndef BSQEC_CODE_BASIS_HPP_
#define BSQEC_CODE_BASIS_HPP_

#include <array>
#include <vector>

#include "bsqec/pauli.hpp"

namespace bsqec {

inline constexpr int kFullDim = 512;  // 2^9
inline constexpr int kCodeDim = 32;

using FullVector = std::array<double, kFullDim>;

// Apply a real Pauli (no Y content in the stored X^x Z^z form is required;
// the quarter-turn phase is dropped) to a computational-basis expansion.
void apply_pauli(const Pauli& p, const FullVector& in, FullVector& out);

// Orthonormal basis of the joint +1 eigenspace of the four stabilizer
// generators, built by projector products from |0...0> and |1...1>.  Vectors
// 1..16 span the logical-0 sector; vectors 17..32 are their images under the
// all-qubit X flip.  All amplitudes are dyadic rationals.
class CodeBasis {
 public:
  static const CodeBasis& instance();

  const FullVector& vec(int j) const { return vecs_[j - 1]; }  // j = 1..32

  // Overlap matrix between the two families of nominal collapse states:
  // row i gives the expansion of the i-th X-type collapse state over the
  // Z-type collapse states.  Symmetric, orthogonal, entries +/- 1/4.
  const std::array<std::array<double, 16>, 16>& collapse_transform() const { return u_; }

  // Reference copy of the expected transform for validation.
  static const std::array<std::array<double, 16>, 16>& expected_transform();

  // The 16 "good" sign configurations (g1 g2 g3, g4 g5 g6) in table order;
  // entry i gives six signs, product of each triple = +1.
  static std::array<int, 6> good_config(int i);

 private:
  CodeBasis();
  std::vector<FullVector> vecs_;
  std::array<std::array<double, 16>, 16> u_;
};

}  // namespace bsqec

#endif  // BSQEC_CODE_BASIS_HPP_
