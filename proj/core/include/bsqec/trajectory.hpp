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

#ifndef BSQEC_TRAJECTORY_HPP_
#define BSQEC_TRAJECTORY_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "bsqec/code_algebra.hpp"
#include "bsqec/gauge_state.hpp"
#include "bsqec/rng.hpp"
#include "bsqec/sde.hpp"

namespace bsqec {

// Independent Markovian error channels; rates indexed like error channels
// (qubit-major, X < Y < Z).
struct ErrorModel {
  std::array<double, kNumErrorChannels> rates{};

  static ErrorModel none() { return {}; }
  static ErrorModel depolarizing(double gamma_d) {
    ErrorModel m;
    m.rates.fill(gamma_d / 3.0);
    return m;
  }
  double total() const {
    double s = 0;
    for (double r : rates) s += r;
    return s;
  }
};

struct SimState {
  int subspace = 0;
  LogicalFrame frame;
  bool pure = true;
  PureGauge psi;
  GaugeDensity rho;
  double t = 0;

  double gauge_expectation(const Pauli& g) const {
    return pure ? psi.expectation(g) : rho.expectation(g);
  }
};

// Applies a single-qubit error: subspace jump, logical-frame update, and
// gauge-qubit conjugation; overall phases are dropped.
void inject_error(SimState& state, int channel);

struct JumpRecord {
  double t = 0;
  int channel = -1;        // -1 for scripted entries without a channel
  int subspace_after = 0;
};

// Draws the channels that fire in one step; exact per-step Bernoulli
// statistics via geometric skipping.
class JumpSampler {
 public:
  JumpSampler(const ErrorModel& model, double dt, Rng rng);

  // Appends firing channels for this step index, in channel order.
  void sample(uint64_t step, std::vector<int>& fired);

 private:
  static constexpr uint64_t kNever = std::numeric_limits<uint64_t>::max();
  uint64_t draw_gap(int channel);
  std::array<double, kNumErrorChannels> log1m_p_{};
  std::array<uint64_t, kNumErrorChannels> next_{};
  uint64_t next_min_ = kNever;
  Rng rng_;
};

// Direct per-step Bernoulli draw over all channels (reference form of the
// same process; used by tests and the projective-cycle model).
std::vector<int> sample_jumps(const ErrorModel& model, double dt, Rng& rng);

struct ScriptedError {
  double t = 0;
  int channel = 0;
};

struct TrajectoryConfig {
  MeasurementParams meas;
  ErrorModel errors;
  double t_op = 100.0;
  bool start_maximally_mixed = false;
  bool use_script = false;
  std::vector<ScriptedError> script;       // must be sorted by time
  double max_total_rate_dt = 0.01;         // validation bound on Gamma_tot * dt
};

// Receives per-step outputs; t is the time at the start of the step.
class StepSink {
 public:
  virtual ~StepSink() = default;
  virtual void on_step(double t, const std::array<double, 12>& signals, int true_subspace) = 0;
};

struct TrajectoryRecord {
  std::vector<JumpRecord> true_path;  // (t, channel, subspace after)
  LogicalFrame final_frame;
  int final_subspace = 0;
  uint64_t steps = 0;
  StepDiagnostics diagnostics;
};

// Runs one trajectory; deterministic given (config, master_seed, index).
// The sink, when provided, sees every step's raw signals and true subspace.
TrajectoryRecord run_trajectory(const TrajectoryConfig& config, uint64_t master_seed,
                                uint64_t trajectory_index, StepSink* sink = nullptr);

}  // namespace bsqec

#endif  // BSQEC_TRAJECTORY_HPP_
