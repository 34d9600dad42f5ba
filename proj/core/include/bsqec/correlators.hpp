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

#ifndef BSQEC_CORRELATORS_HPP_
#define BSQEC_CORRELATORS_HPP_

#include <array>
#include <stdexcept>

namespace bsqec {

struct FilterParams {
  double tau_c = 0.25;  // signal smoothing time constant
  double t_c = 30.0;    // correlator integration time
};

// Magnitude of the stationary mean of the normalized triple correlators for
// symmetric detectors; depends only on gamma_m * tau_c.
inline double mean_correlator(double gamma_m, double tau_c) {
  if (gamma_m < 0 || tau_c < 0) throw std::invalid_argument("mean_correlator: negative argument");
  const double g = gamma_m * tau_c;
  return (1.0 / 3.0) * (1.0 / ((1.0 + g) * (1.0 + 2.0 * g)) + 1.0 / ((1.0 + 2.0 * g) * (1.0 + 2.0 * g)) +
                        1.0 / ((1.0 + g) * (1.0 + 4.0 * g)));
}

// Twelve exponentially smoothed signals and the four filtered triple
// products that track the stabilizer generators.  Correlator slots are
// ordered (Sx1, Sz1, Sx2, Sz2) to match the syndrome table.
class CorrelatorBank {
 public:
  // Channel triples per correlator slot: x-type first block uses channels
  // 7,8,9, z-type first block 1,2,3, x-type second 10,11,12, z-type second
  // 4,5,6 (1-based detector numbering).
  static constexpr int kTriples[4][3] = {{6, 7, 8}, {0, 1, 2}, {9, 10, 11}, {3, 4, 5}};

  CorrelatorBank() = default;

  // Settled-bank initialization: smoothed signals take the given noiseless
  // expectations, correlators start at the stationary mean.
  void init_settled(const std::array<double, 12>& signal_means, double norm) {
    smoothed_ = signal_means;
    corr_.fill(norm);
    norm_ = norm;
  }

  // Zero-state initialization (everything relaxes from zero).
  void init_zero(double norm) {
    smoothed_.fill(0.0);
    corr_.fill(0.0);
    norm_ = norm;
  }

  void update(const std::array<double, 12>& raw, double dt, const FilterParams& f) {
    const double a = dt / f.tau_c;
    for (int k = 0; k < 12; ++k) smoothed_[k] += (raw[k] - smoothed_[k]) * a;
    const double b = dt / f.t_c;
    for (int c = 0; c < 4; ++c) {
      const double prod =
          smoothed_[kTriples[c][0]] * smoothed_[kTriples[c][1]] * smoothed_[kTriples[c][2]];
      corr_[c] += (prod - corr_[c]) * b;
    }
  }

  const std::array<double, 12>& smoothed() const { return smoothed_; }
  const std::array<double, 4>& correlators() const { return corr_; }
  double norm() const { return norm_; }

  // Correlators scaled by the stationary mean, in (Sx1, Sz1, Sx2, Sz2) order.
  std::array<double, 4> normalized() const {
    return {corr_[0] / norm_, corr_[1] / norm_, corr_[2] / norm_, corr_[3] / norm_};
  }

 private:
  std::array<double, 12> smoothed_{};
  std::array<double, 4> corr_{};
  double norm_ = 1.0;
};

}  // namespace bsqec

#endif  // BSQEC_CORRELATORS_HPP_
