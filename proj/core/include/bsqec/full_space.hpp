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

#ifndef BSQEC_FULL_SPACE_HPP_
#define BSQEC_FULL_SPACE_HPP_

#include <array>
#include <functional>
#include <vector>

#include "bsqec/code_basis.hpp"
#include "bsqec/gauge_state.hpp"
#include "bsqec/sde.hpp"
#include "bsqec/trajectory.hpp"

namespace bsqec {

// Reference integrator on the full nine-qubit Hilbert space, used to check
// the reduced gauge-qubit engine.  It evolves the 512x512 density matrix
// under the same measurement model with the full two-qubit operators, driven
// by externally supplied Wiener increments so runs can share noise with the
// reduced engine.  Intended for tests; cost is O(512^2) per channel-step.
class FullSpaceOracle {
 public:
  explicit FullSpaceOracle(const MeasurementParams& params);

  // Initializes rho to |psi><psi| for the encoded logical state
  // (alpha, beta) with the gauge qubits in collapse-basis state
  // `gauge_index` of the code space.
  void reset(double alpha, double beta, int gauge_index = 0);

  // Advances one step with the given reduced-engine Wiener increments; the
  // per-channel sign flips relating the reduced noises to the full-space
  // noises in the current subspace are applied internally.  Returns the 12
  // detector signals.
  std::array<double, 12> step(const std::array<double, 12>& reduced_noise);

  // Applies a single-qubit error channel instantaneously.
  void apply_error(int channel);

  // Expectation of a full-space Pauli, Tr[rho P] (phase dropped).
  double expectation(const Pauli& p) const;

  int current_subspace() const { return subspace_; }

  struct Decomposition {
    int subspace = 0;
    double support = 0;            // weight found in that subspace
    GaugeDensity gauge;            // reduced gauge-qubit density matrix
    std::array<double, 4> logical; // 2x2 logical density matrix, row-major
  };

  // Projects rho onto its dominant subspace's basis and separates the
  // logical and gauge factors.  Throws if the state has support spread over
  // more than one subspace beyond `tolerance`.
  Decomposition decompose(double tolerance = 1e-9) const;

 private:
  MeasurementParams params_;
  std::vector<double> rho_;  // 512x512 row-major
  int subspace_ = 0;
  LogicalFrame frame_;

  // Precomputed masks for the 12 measured operators.
  struct Op {
    unsigned flip;
    unsigned zmask;
  };
  std::array<Op, 12> ops_;
};

}  // namespace bsqec

#endif  // BSQEC_FULL_SPACE_HPP_
