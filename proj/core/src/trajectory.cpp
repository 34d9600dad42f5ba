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

#include "bsqec/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bsqec {

void inject_error(SimState& state, int channel) {
  const auto& t = code();
  const ErrorAction& a = t.error_action(channel);
  state.subspace = t.q_mul(a.subspace, state.subspace).subspace;
  state.frame.apply(a.logical);
  if (!a.gauge_op.is_identity_up_to_phase()) {
    if (state.pure) {
      state.psi.apply(a.gauge_op);
    } else {
      state.rho.conjugate(a.gauge_op);
    }
  }
}

JumpSampler::JumpSampler(const ErrorModel& model, double dt, Rng rng) : rng_(rng) {
  for (int c = 0; c < kNumErrorChannels; ++c) {
    const double p = model.rates[c] * dt;
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("jump probability out of [0, 1)");
    log1m_p_[c] = p > 0.0 ? std::log1p(-p) : 0.0;
  }
  for (int c = 0; c < kNumErrorChannels; ++c) {
    next_[c] = model.rates[c] > 0.0 ? draw_gap(c) : kNever;
    next_min_ = std::min(next_min_, next_[c]);
  }
}

uint64_t JumpSampler::draw_gap(int channel) {
  // Number of failures before the next success of a Bernoulli(p) sequence.
  const double g = std::floor(std::log(rng_.uniform_pos()) / log1m_p_[channel]);
  if (g >= 9e18) return kNever;
  return static_cast<uint64_t>(g);
}

void JumpSampler::sample(uint64_t step, std::vector<int>& fired) {
  if (step < next_min_) return;
  next_min_ = kNever;
  for (int c = 0; c < kNumErrorChannels; ++c) {
    if (next_[c] == step) {
      fired.push_back(c);
      const uint64_t gap = draw_gap(c);
      next_[c] = gap == kNever ? kNever : step + 1 + gap;
    }
    next_min_ = std::min(next_min_, next_[c]);
  }
}

std::vector<int> sample_jumps(const ErrorModel& model, double dt, Rng& rng) {
  std::vector<int> fired;
  for (int c = 0; c < kNumErrorChannels; ++c) {
    const double p = model.rates[c] * dt;
    if (p > 0.0 && rng.uniform() < p) fired.push_back(c);
  }
  return fired;
}

TrajectoryRecord run_trajectory(const TrajectoryConfig& config, uint64_t master_seed,
                                uint64_t trajectory_index, StepSink* sink) {
  const double dt = config.meas.dt;
  if (config.t_op <= 0.0) throw std::invalid_argument("t_op must be positive");
  if (!config.use_script && config.errors.total() * dt > config.max_total_rate_dt) {
    throw std::invalid_argument("total error rate times dt exceeds the configured bound");
  }

  SimState state;
  state.pure = (config.meas.eta == 1.0) && !config.start_maximally_mixed;
  if (state.pure) {
    state.psi = PureGauge::basis_state(0);
  } else if (config.start_maximally_mixed) {
    state.rho = GaugeDensity::maximally_mixed();
  } else {
    state.rho = GaugeDensity::from_pure(PureGauge::basis_state(0));
  }

  const SdeStepper stepper(config.meas);
  Rng noise_rng(master_seed, trajectory_index, 0);
  JumpSampler jumps(config.use_script ? ErrorModel::none() : config.errors, dt,
                    Rng(master_seed, trajectory_index, 1));

  TrajectoryRecord rec;
  const uint64_t n_steps = static_cast<uint64_t>(std::llround(config.t_op / dt));
  const double sqrt_dt = std::sqrt(dt);

  std::vector<int> fired;
  size_t script_pos = 0;
  std::array<double, 12> dw;
  std::array<double, 12> expect;
  std::array<double, 12> signals;

  try {
    for (uint64_t step = 0; step < n_steps; ++step) {
      const double t = step * dt;

      // Errors land on step boundaries; simultaneous ones apply in channel
      // order.
      fired.clear();
      if (config.use_script) {
        while (script_pos < config.script.size() && config.script[script_pos].t <= t + 0.5 * dt) {
          fired.push_back(config.script[script_pos].channel);
          ++script_pos;
        }
      } else {
        jumps.sample(step, fired);
      }
      for (int c : fired) {
        inject_error(state, c);
        rec.true_path.push_back({t, c, state.subspace});
      }

      for (auto& w : dw) w = sqrt_dt * noise_rng.normal();
      if (state.pure) {
        stepper.step(state.psi, dw, expect);
      } else {
        stepper.step(state.rho, dw, expect, &rec.diagnostics);
      }
      if (sink) {
        for (int k = 0; k < 12; ++k) {
          signals[k] = stepper.signal(k + 1, state.subspace, expect[k], dw[k]);
        }
        sink->on_step(t, signals, state.subspace);
      }
      state.t = t + dt;
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("trajectory " + std::to_string(trajectory_index) + " (seed " +
                             std::to_string(master_seed) + ") aborted: " + e.what());
  }

  rec.final_frame = state.frame;
  rec.final_subspace = state.subspace;
  rec.steps = n_steps;
  return rec;
}

}  // namespace bsqec
