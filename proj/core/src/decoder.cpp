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

#include "bsqec/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bsqec {

void Thresholds::validate() const {
  if (!(theta1 >= 0.0 && theta1 <= 1.0)) throw std::invalid_argument("theta1 outside [0, 1]");
  if (!(theta2 >= 1.0 && theta2 <= 2.0)) throw std::invalid_argument("theta2 outside [1, 2]");
}

namespace {

// Logical factor the decoder books for an inferred jump between monitored
// subspaces: the single-error class whose subspace factor connects them.
LogicalOp inferred_logical(int from, int to, bool& multi_error) {
  const auto& t = code();
  const int q = t.q_mul(to, from).subspace;
  // Every nonidentity subspace factor has a single-error preimage for this
  // code; the flag records if that ever stops holding.
  if (q == 0) {
    multi_error = true;
    return LogicalOp::I;
  }
  return t.class_logical(q);
}

}  // namespace

void decode_step(DecoderState& state, const std::array<double, 4>& normalized,
                 const Thresholds& th, double t) {
  const double lo = 1.0 - th.theta2;
  const double hi = 1.0 - th.theta1;

  // Hold while any sign-adjusted correlator sits strictly inside the
  // uncertainty band.
  for (int n = 0; n < 4; ++n) {
    const double v = state.digitized[n] * normalized[n];
    if (v > lo && v < hi) return;
  }

  std::array<int8_t, 4> digit;
  for (int n = 0; n < 4; ++n) {
    if (normalized[n] > hi) {
      digit[n] = +1;
    } else if (normalized[n] < lo) {
      digit[n] = -1;
    } else {
      // Values caught between the digitization cuts (possible when
      // theta1 + theta2 != 2, or exactly on a cut) resolve toward the
      // previous estimate.
      digit[n] = state.digitized[n];
    }
  }

  const int l = code().subspace_from_signs(digit);
  if (l != state.monitored) {
    const LogicalOp op = inferred_logical(state.monitored, l, state.multi_error_inference);
    state.inferred.apply(op);
    state.jump_count++;
    if (state.log) state.log->push_back({t, state.monitored, l, op});
    state.monitored = l;
  }
  state.digitized = digit;
}

LogicalOp finalize(const DecoderState& state, std::optional<int> true_final_subspace,
                   const LogicalFrame& frame_true) {
  LogicalFrame inferred = state.inferred;
  if (true_final_subspace && *true_final_subspace != state.monitored) {
    bool multi = false;
    inferred.apply(inferred_logical(state.monitored, *true_final_subspace, multi));
  }
  // Residual operation between the applied correction and the true frame.
  LogicalFrame residue;
  residue.x = inferred.x != frame_true.x;
  residue.z = inferred.z != frame_true.z;
  return residue.op();
}

namespace {

struct LineFit {
  double slope = 0, intercept = 0, slope_se = 0;
};

// Weighted least squares of p ~ slope * t + intercept with binomial weights.
LineFit fit_line(const std::vector<std::pair<double, std::pair<long, long>>>& pts) {
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (const auto& [t, counts] : pts) {
    const auto [k, n] = counts;
    const double p = static_cast<double>(k) / n;
    const double var = std::max(p * (1 - p) / n, 1e-12 / n);
    const double w = 1.0 / var;
    sw += w;
    swx += w * t;
    swy += w * p;
    swxx += w * t * t;
    swxy += w * t * p;
  }
  const double det = sw * swxx - swx * swx;
  LineFit f;
  if (det <= 0) return f;
  f.slope = (sw * swxy - swx * swy) / det;
  f.intercept = (swxx * swy - swx * swxy) / det;
  f.slope_se = std::sqrt(sw / det);
  return f;
}

}  // namespace

RateEstimate estimate_rates(const std::vector<std::pair<double, OutcomeCounts>>& by_t_op) {
  RateEstimate est;
  if (by_t_op.empty()) return est;

  long total_n = 0, total_x = 0, total_y = 0, total_z = 0;
  double exposure = 0;  // sum of n * t_op
  for (const auto& [t_op, c] : by_t_op) {
    total_n += c.n;
    total_x += c.x;
    total_y += c.y;
    total_z += c.z;
    exposure += c.n * t_op;
  }
  if (total_n == 0 || exposure <= 0) return est;

  auto freq_rate = [&](long k, double& gamma, double& se) {
    gamma = k / exposure;
    const double p = static_cast<double>(k) / total_n;
    se = std::sqrt(std::max(p * (1 - p), 0.0) / total_n) * total_n / exposure;
  };
  freq_rate(total_x, est.gamma_x, est.se_x);
  freq_rate(total_y, est.gamma_y, est.se_y);
  freq_rate(total_z, est.gamma_z, est.se_z);
  freq_rate(total_x + total_y + total_z, est.gamma_total, est.se_total);

  // Saturation correction: with independent Poisson flips of the three
  // logical types over duration T, the parity expectations
  //   u1 = E[(-1)^{ny+nz}], u2 = E[(-1)^{nx+nz}], u3 = E[(-1)^{nx+ny}]
  // give back the rates exactly.  Estimated per duration and
  // exposure-averaged.
  {
    double gx = 0, gy = 0, gz = 0, wsum = 0;
    for (const auto& [t_op, c] : by_t_op) {
      if (c.n == 0 || t_op <= 0) continue;
      const double fi = static_cast<double>(c.none()) / c.n;
      const double fx = static_cast<double>(c.x) / c.n;
      const double fy = static_cast<double>(c.y) / c.n;
      const double fz = static_cast<double>(c.z) / c.n;
      const double u1 = fi + fx - fy - fz;
      const double u2 = fi - fx + fy - fz;
      const double u3 = fi - fx - fy + fz;
      if (u1 <= 0 || u2 <= 0 || u3 <= 0) continue;  // beyond usable saturation
      const double w = c.n * t_op;
      gx += w * (-(std::log(u2) + std::log(u3) - std::log(u1)) / (4.0 * t_op));
      gy += w * (-(std::log(u1) + std::log(u3) - std::log(u2)) / (4.0 * t_op));
      gz += w * (-(std::log(u1) + std::log(u2) - std::log(u3)) / (4.0 * t_op));
      wsum += w;
    }
    if (wsum > 0) {
      est.gamma_x_corr = gx / wsum;
      est.gamma_y_corr = gy / wsum;
      est.gamma_z_corr = gz / wsum;
      est.gamma_total_corr = est.gamma_x_corr + est.gamma_y_corr + est.gamma_z_corr;
    } else {
      est.gamma_x_corr = est.gamma_x;
      est.gamma_y_corr = est.gamma_y;
      est.gamma_z_corr = est.gamma_z;
      est.gamma_total_corr = est.gamma_total;
    }
  }

  // Offset separation by a linear fit over distinct durations.
  std::vector<double> distinct;
  for (const auto& [t_op, c] : by_t_op) {
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](double v) { return std::abs(v - t_op) < 1e-12; })) {
      distinct.push_back(t_op);
    }
  }
  if (distinct.size() >= 2) {
    auto fit_cat = [&](auto pick, double& slope, double& se, double& dp) {
      std::vector<std::pair<double, std::pair<long, long>>> pts;
      for (const auto& [t_op, c] : by_t_op) {
        if (c.n > 0) pts.push_back({t_op, {pick(c), c.n}});
      }
      const LineFit f = fit_line(pts);
      slope = f.slope;
      se = f.slope_se;
      dp = f.intercept;
    };
    fit_cat([](const OutcomeCounts& c) { return c.x; }, est.gamma_x, est.se_x, est.dp_x);
    fit_cat([](const OutcomeCounts& c) { return c.y; }, est.gamma_y, est.se_y, est.dp_y);
    fit_cat([](const OutcomeCounts& c) { return c.z; }, est.gamma_z, est.se_z, est.dp_z);
    est.gamma_total = est.gamma_x + est.gamma_y + est.gamma_z;
    est.se_total = std::sqrt(est.se_x * est.se_x + est.se_y * est.se_y + est.se_z * est.se_z);
    est.offsets_fitted = true;
  }

  est.low_statistics = total_x < 10 || total_y < 10 || total_z < 10;
  return est;
}

RateEstimate estimate_rates(const OutcomeCounts& counts, double t_op) {
  return estimate_rates({{t_op, counts}});
}

}  // namespace bsqec
