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

#ifndef BSQEC_GAUGE_STATE_HPP_
#define BSQEC_GAUGE_STATE_HPP_

#include <array>
#include <bit>
#include <cmath>

#include "bsqec/pauli.hpp"

namespace bsqec {

inline constexpr int kGaugeDim = 16;

// Pure state of the four gauge qubits: 16 real amplitudes over the
// measurement collapse basis.
struct PureGauge {
  std::array<double, kGaugeDim> a{};

  static PureGauge basis_state(int index) {
    PureGauge p;
    p.a[index] = 1.0;
    return p;
  }

  double norm2() const {
    double s = 0;
    for (double v : a) s += v * v;
    return s;
  }
  void normalize() {
    const double n = std::sqrt(norm2());
    for (double& v : a) v /= n;
  }

  // Expectation of a 4-qubit X^x Z^z operator (phase dropped).
  double expectation(const Pauli& g) const {
    double s = 0;
    for (int i = 0; i < kGaugeDim; ++i) {
      const int j = i ^ g.x;
      const double sign = (std::popcount(static_cast<unsigned>(j) & g.z) & 1) ? -1.0 : 1.0;
      s += a[i] * sign * a[j];
    }
    return s;
  }

  // In-place conjugation psi <- P psi, overall phase dropped.
  void apply(const Pauli& g) {
    std::array<double, kGaugeDim> out;
    for (int i = 0; i < kGaugeDim; ++i) {
      const int j = i ^ g.x;
      const double sign = (std::popcount(static_cast<unsigned>(j) & g.z) & 1) ? -1.0 : 1.0;
      out[i] = sign * a[j];
    }
    a = out;
  }
};

// Real symmetric unit-trace density matrix of the four gauge qubits,
// row-major 16x16.
struct GaugeDensity {
  std::array<double, kGaugeDim * kGaugeDim> m{};

  double& at(int i, int j) { return m[i * kGaugeDim + j]; }
  double at(int i, int j) const { return m[i * kGaugeDim + j]; }

  static GaugeDensity maximally_mixed() {
    GaugeDensity d;
    for (int i = 0; i < kGaugeDim; ++i) d.at(i, i) = 1.0 / kGaugeDim;
    return d;
  }
  static GaugeDensity from_pure(const PureGauge& p) {
    GaugeDensity d;
    for (int i = 0; i < kGaugeDim; ++i) {
      for (int j = 0; j < kGaugeDim; ++j) d.at(i, j) = p.a[i] * p.a[j];
    }
    return d;
  }

  double trace() const {
    double s = 0;
    for (int i = 0; i < kGaugeDim; ++i) s += at(i, i);
    return s;
  }
  double purity() const {
    double s = 0;
    for (int i = 0; i < kGaugeDim; ++i) {
      for (int j = 0; j < kGaugeDim; ++j) s += at(i, j) * at(j, i);
    }
    return s;
  }

  double expectation(const Pauli& g) const {
    // Tr[G rho] with G = X^x Z^z: (G rho)_{ii} = sign(i) rho_{i^x, i}.
    double s = 0;
    for (int i = 0; i < kGaugeDim; ++i) {
      const double sign = (std::popcount(static_cast<unsigned>(i) & g.z) & 1) ? -1.0 : 1.0;
      s += sign * at(i ^ g.x, i);
    }
    return s;
  }

  // rho <- G rho G (conjugation by a real Pauli; phases cancel).
  void conjugate(const Pauli& g) {
    GaugeDensity out;
    for (int i = 0; i < kGaugeDim; ++i) {
      const int pi = i ^ g.x;
      const bool si = std::popcount(static_cast<unsigned>(pi) & g.z) & 1;
      for (int j = 0; j < kGaugeDim; ++j) {
        const int pj = j ^ g.x;
        const bool sj = std::popcount(static_cast<unsigned>(pj) & g.z) & 1;
        out.at(i, j) = ((si ^ sj) ? -1.0 : 1.0) * at(pi, pj);
      }
    }
    m = out.m;
  }

  void symmetrize() {
    for (int i = 0; i < kGaugeDim; ++i) {
      for (int j = i + 1; j < kGaugeDim; ++j) {
        const double v = 0.5 * (at(i, j) + at(j, i));
        at(i, j) = v;
        at(j, i) = v;
      }
    }
  }
};

}  // namespace bsqec

#endif  // BSQEC_GAUGE_STATE_HPP_
