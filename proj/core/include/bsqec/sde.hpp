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

#ifndef BSQEC_SDE_HPP_
#define BSQEC_SDE_HPP_

#include <array>

#include "bsqec/code_algebra.hpp"
#include "bsqec/gauge_state.hpp"

namespace bsqec {

// Simultaneous weak measurement of the 12 noncommuting two-qubit operators,
// all with the same strength.  Time is measured in units fixed by gamma_m;
// the natural unit is the collapse time 1/gamma_m.
struct MeasurementParams {
  double gamma_m = 1.0;  // ensemble dephasing rate per channel
  double eta = 1.0;      // quantum efficiency, (0, 1]
  double dt = 0.01;      // integration step

  double tau_m() const { return 1.0 / (2.0 * eta * gamma_m); }
  double tau_coll() const { return 1.0 / gamma_m; }
};

// Per-step diagnostics for the density-matrix path.
struct StepDiagnostics {
  long clip_events = 0;      // eigenvalue clips applied
  double min_trace = 1.0;    // smallest pre-renormalization trace seen
  long steps = 0;
};

class SdeStepper {
 public:
  explicit SdeStepper(const MeasurementParams& params);

  // Overrides the per-channel rates (testing hook; the public parameter set
  // is symmetric).  Channel k = 1..12.
  void set_channel_gammas(const std::array<double, 12>& gammas);

  // One Euler step of the pure-state unraveling (valid for eta = 1).
  // noise holds the 12 Wiener increments ~ N(0, dt) shared between the
  // backaction and the signal; on return, expectations holds the pre-step
  // values Tr[G_k rho], from which signals are formed.
  void step(PureGauge& psi, const std::array<double, 12>& noise,
            std::array<double, 12>& expectations) const;

  // One Euler step of the density-matrix equation (any eta), with
  // symmetrization, trace renormalization, and eigenvalue clipping when the
  // smallest eigenvalue drops below -1e-9.  Throws on trace collapse.
  void step(GaugeDensity& rho, const std::array<double, 12>& noise,
            std::array<double, 12>& expectations, StepDiagnostics* diag = nullptr) const;

  const MeasurementParams& params() const { return params_; }

  // Raw detector signal for channel k (1..12) in subspace l, given the
  // pre-step expectation and the shared Wiener increment.
  double signal(int k, int l, double expectation, double dw) const {
    return code().zeta(k, l) * (expectation + sqrt_tau_m_ * dw / params_.dt);
  }

 private:
  MeasurementParams params_;
  std::array<double, 12> gamma_{};
  std::array<double, 12> sqrt_inv_tau_{};  // 1/sqrt(tau_k) per channel
  double sqrt_tau_m_;
};

// Smallest eigenvalue of a real symmetric 16x16 matrix (cyclic Jacobi).
double min_eigenvalue(const GaugeDensity& rho);

}  // namespace bsqec

#endif  // BSQEC_SDE_HPP_
