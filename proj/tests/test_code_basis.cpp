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

#include <cmath>

#include "bsqec/code_algebra.hpp"
#include "bsqec/code_basis.hpp"

using namespace bsqec;

namespace {

double dot(const FullVector& a, const FullVector& b) {
  double s = 0;
  for (int i = 0; i < kFullDim; ++i) s += a[i] * b[i];
  return s;
}

int idx(const char* bits) {
  int v = 0;
  for (const char* p = bits; *p; ++p) v = 2 * v + (*p - '0');
  return v;
}

}  // namespace

TEST_CASE("first basis vectors match their dyadic expansions") {
  const auto& b = CodeBasis::instance();

  const auto& v1 = b.vec(1);
  CHECK(v1[idx("000000000")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v1[idx("110110110")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v1[idx("101101101")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v1[idx("011011011")] == doctest::Approx(0.5).epsilon(1e-14));

  const auto& v2 = b.vec(2);
  CHECK(v2[idx("000000011")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v2[idx("110110101")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v2[idx("101101110")] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(v2[idx("011011000")] == doctest::Approx(0.5).epsilon(1e-14));

  // Exactly four nonzero amplitudes each.
  int nnz = 0;
  for (double a : v1) nnz += std::abs(a) > 1e-14;
  CHECK(nnz == 4);
}

TEST_CASE("all sixteen logical-zero basis vectors") {
  static const char* kComponents[16][4] = {
      {"000000000", "110110110", "101101101", "011011011"},
      {"000000011", "110110101", "101101110", "011011000"},
      {"000000110", "110110000", "101101011", "011011101"},
      {"000000101", "110110011", "101101000", "011011110"},
      {"000011011", "110101101", "101110110", "011000000"},
      {"000011000", "110101110", "101110101", "011000011"},
      {"000011101", "110101011", "101110000", "011000110"},
      {"000011110", "110101000", "101110011", "011000101"},
      {"000110110", "110000000", "101011011", "011101101"},
      {"000110101", "110000011", "101011000", "011101110"},
      {"000110000", "110000110", "101011101", "011101011"},
      {"000110011", "110000101", "101011110", "011101000"},
      {"000101101", "110011011", "101000000", "011110110"},
      {"000101110", "110011000", "101000011", "011110101"},
      {"000101011", "110011101", "101000110", "011110000"},
      {"000101000", "110011110", "101000101", "011110011"},
  };
  const auto& b = CodeBasis::instance();
  for (int j = 0; j < 16; ++j) {
    const auto& v = b.vec(j + 1);
    double mass = 0;
    for (int c = 0; c < 4; ++c) {
      CHECK(v[idx(kComponents[j][c])] == doctest::Approx(0.5).epsilon(1e-14));
      mass += v[idx(kComponents[j][c])] * v[idx(kComponents[j][c])];
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("upper half is the all-qubit flip of the lower half") {
  const auto& b = CodeBasis::instance();
  Pauli flip = Pauli::identity(kNumQubits);
  for (int q = 1; q <= kNumQubits; ++q) flip = flip * Pauli::single(kNumQubits, q, 'X');
  for (int j = 1; j <= 16; ++j) {
    FullVector fv;
    apply_pauli(flip, b.vec(j), fv);
    CHECK(std::abs(dot(fv, b.vec(16 + j)) - 1.0) < 1e-12);
  }
}

TEST_CASE("basis vectors are +1 eigenvectors of every stabilizer generator") {
  const auto& b = CodeBasis::instance();
  const auto& t = code();
  for (int j = 1; j <= kCodeDim; ++j) {
    for (int n = 0; n < kNumStabilizers; ++n) {
      FullVector sv;
      apply_pauli(t.stabilizer(n), b.vec(j), sv);
      double resid = 0;
      for (int i = 0; i < kFullDim; ++i) resid = std::max(resid, std::abs(sv[i] - b.vec(j)[i]));
      CHECK(resid < 1e-12);
    }
  }
}

TEST_CASE("basis orthonormality") {
  const auto& b = CodeBasis::instance();
  for (int i = 1; i <= kCodeDim; ++i) {
    for (int j = i; j <= kCodeDim; ++j) {
      CHECK(std::abs(dot(b.vec(i), b.vec(j)) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("collapse transform matches the expected matrix") {
  const auto& b = CodeBasis::instance();
  const auto& u = b.collapse_transform();
  const auto& expected = CodeBasis::expected_transform();
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      CHECK(std::abs(u[i][j] - expected[i][j]) < 1e-12);
    }
  }
  // First row all +1/4; symmetric; orthogonal.
  for (int j = 0; j < 16; ++j) CHECK(u[0][j] == doctest::Approx(0.25).epsilon(1e-14));
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      CHECK(std::abs(u[i][j] - u[j][i]) < 1e-12);
      double s = 0;
      for (int k = 0; k < 16; ++k) s += u[k][i] * u[k][j];
      CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
}
