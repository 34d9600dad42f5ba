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

#ifndef BSQEC_DECODER_HPP_
#define BSQEC_DECODER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bsqec/code_algebra.hpp"

namespace bsqec {

struct Thresholds {
  double theta1 = 0.44;  // upper threshold offset, in [0, 1]
  double theta2 = 1.56;  // lower threshold offset, in [1, 2]

  void validate() const;
};

// Two-threshold tracker of the monitored syndrome path.  The previous
// estimate is held while any stabilizer's normalized correlator, multiplied
// by its current estimated sign, sits strictly inside (1 - theta2,
// 1 - theta1); once all four are outside, the correlators digitize and the
// syndrome table gives the new subspace.
struct DecoderState {
  struct JumpLog {
    double t;
    int from, to;
    LogicalOp logical;
  };

  int monitored = 0;                 // current monitored subspace
  std::array<int8_t, 4> digitized;   // estimated stabilizer signs (Sx1, Sz1, Sx2, Sz2)
  LogicalFrame inferred;             // accumulated inferred logical operation
  int jump_count = 0;
  bool multi_error_inference = false;  // a monitored jump had no single-error preimage
  std::vector<JumpLog>* log = nullptr;

  DecoderState() { digitized = {+1, +1, +1, +1}; }
};

// One decoder tick; `normalized` is in (Sx1, Sz1, Sx2, Sz2) order.
void decode_step(DecoderState& state, const std::array<double, 4>& normalized,
                 const Thresholds& th, double t = 0.0);

// End-of-run recovery.  With a final projective readout of the true
// subspace, the bridging single-error class between the monitored and true
// subspaces is folded in before classification.  Returns the residual
// logical operation between the inferred correction and the true frame.
LogicalOp finalize(const DecoderState& state, std::optional<int> true_final_subspace,
                   const LogicalFrame& frame_true);

// --- ensemble rate estimation ------------------------------------------------

struct OutcomeCounts {
  long n = 0;
  long x = 0, y = 0, z = 0;
  long none() const { return n - x - y - z; }
  void add(LogicalOp op) {
    ++n;
    if (op == LogicalOp::X) ++x;
    if (op == LogicalOp::Y) ++y;
    if (op == LogicalOp::Z) ++z;
  }
};

struct RateEstimate {
  double gamma_x = 0, gamma_y = 0, gamma_z = 0;
  double se_x = 0, se_y = 0, se_z = 0;
  double gamma_total = 0, se_total = 0;
  // Saturation-corrected estimates (exact under Poisson logical flips);
  // coincide with the frequency estimates to first order.
  double gamma_x_corr = 0, gamma_y_corr = 0, gamma_z_corr = 0, gamma_total_corr = 0;
  double dp_x = 0, dp_y = 0, dp_z = 0;  // fitted offsets (zero unless fitted)
  bool offsets_fitted = false;
  bool low_statistics = false;  // fewer than 10 events in some category
};

// Rates from outcome counts at one or more operation durations.  With two or
// more distinct durations the offsets are separated by a least-squares line
// per category; otherwise the offsets are reported as zero.
RateEstimate estimate_rates(const std::vector<std::pair<double, OutcomeCounts>>& by_t_op);

// Convenience overload for a single duration.
RateEstimate estimate_rates(const OutcomeCounts& counts, double t_op);

}  // namespace bsqec

#endif  // BSQEC_DECODER_HPP_
