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

#include "bsqec/code_basis.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "bsqec/code_algebra.hpp"

namespace bsqec {
namespace {

// Expected collapse transform, 16x denominator.  Row i expands the i-th
// X-type collapse state over the Z-type collapse states.
constexpr int8_t kExpectedU[16][16] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1},
    {1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1},
    {1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1},
    {1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1},
    {1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1},
    {1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1},
    {1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1},
    {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1},
    {1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1},
    {1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1},
    {1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1},
    {1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1},
    {1, -1, -1, 1, 1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1},
    {1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1},
};

// Sign triples with product +1, in the order used to index gauge
// configurations.
constexpr int kTriples[4][3] = {{+1, +1, +1}, {+1, -1, -1}, {-1, -1, +1}, {-1, +1, -1}};

void project(const Pauli& g, int sign, FullVector& v) {
  // v <- (1 + sign * g) / 2 * v
  FullVector gv;
  apply_pauli(g, v, gv);
  for (int i = 0; i < kFullDim; ++i) v[i] = 0.5 * (v[i] + sign * gv[i]);
}

double norm(const FullVector& v) {
  double s = 0;
  for (double a : v) s += a * a;
  return std::sqrt(s);
}

}  // namespace

void apply_pauli(const Pauli& p, const FullVector& in, FullVector& out) {
  const unsigned x = p.x, z = p.z;
  for (int i = 0; i < kFullDim; ++i) {
    const int j = i ^ static_cast<int>(x);
    const double s = (std::popcount(static_cast<unsigned>(j) & z) & 1) ? -1.0 : 1.0;
    out[i] = s * in[j];
  }
}

std::array<int, 6> CodeBasis::good_config(int i) {
  const auto& a = kTriples[(i >> 2) & 3];
  const auto& b = kTriples[i & 3];
  return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

const std::array<std::array<double, 16>, 16>& CodeBasis::expected_transform() {
  static const auto u = [] {
    std::array<std::array<double, 16>, 16> m{};
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) m[i][j] = kExpectedU[i][j] / 4.0;
    }
    return m;
  }();
  return u;
}

const CodeBasis& CodeBasis::instance() {
  static const CodeBasis basis;
  return basis;
}

CodeBasis::CodeBasis() : vecs_(kCodeDim) {
  const auto& t = code();

  auto apply_step = [&](FullVector& v, const std::array<int, 6>& signs, int first_gauge) {
    for (int j = 0; j < 6; ++j) project(t.gauge_op(first_gauge + j), signs[j], v);
  };

  // Reference states: project |0..0> (and |1..1>) onto the all-plus
  // configuration of both measurement steps.
  auto make_reference = [&](int seed_index) {
    FullVector v{};
    v[seed_index] = 1.0;
    apply_step(v, good_config(0), 1);  // ZZ factors
    apply_step(v, good_config(0), 7);  // XX factors
    const double n = norm(v);
    if (n < 1e-12) throw std::logic_error("code basis: zero projection");
    for (auto& a : v) a /= n;
    return v;
  };
  const FullVector ref0 = make_reference(0);
  const FullVector ref1 = make_reference(kFullDim - 1);

  for (int i = 0; i < 16; ++i) {
    for (int half = 0; half < 2; ++half) {
      FullVector v = half == 0 ? ref0 : ref1;
      apply_step(v, good_config(i), 1);
      const double n = norm(v);
      if (n < 1e-12) throw std::logic_error("code basis: zero projection");
      for (auto& a : v) a /= n;
      vecs_[16 * half + i] = v;
    }
  }

  // X-type collapse states in the logical-0 sector, fixed to have positive
  // overlap with the first Z-type collapse state.
  for (int i = 0; i < 16; ++i) {
    FullVector v = vecs_[0];
    const auto cfg = good_config(i);
    for (int j = 0; j < 6; ++j) project(t.gauge_op(7 + j), cfg[j], v);
    for (auto& a : v) a *= 4.0;  // overlap with vecs_[0] is 1/4 by construction
    for (int j = 0; j < 16; ++j) {
      double dot = 0;
      for (int b = 0; b < kFullDim; ++b) dot += vecs_[j][b] * v[b];
      u_[i][j] = dot;
    }
  }
}

}  // namespace bsqec
