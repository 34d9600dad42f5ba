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

#include "bsqec/sde.hpp"

#include <cmath>
#include <stdexcept>

namespace bsqec {
namespace {

// Precomputed action of the 12 gauge-qubit operators: basis permutation
// (XOR mask) and sign mask (Z part).
struct ChannelOp {
  int flip;       // X mask
  uint16_t zmask; // Z mask
};

std::array<ChannelOp, 12> channel_ops() {
  std::array<ChannelOp, 12> ops;
  for (int k = 0; k < 12; ++k) {
    const Pauli& g = code().gauge_rep(k + 1);
    ops[k] = {g.x, g.z};
  }
  return ops;
}

inline double sign_of(int index, uint16_t zmask) {
  return (std::popcount(static_cast<unsigned>(index) & zmask) & 1) ? -1.0 : 1.0;
}

}  // namespace

SdeStepper::SdeStepper(const MeasurementParams& params) : params_(params) {
  if (params.eta <= 0.0 || params.eta > 1.0) throw std::invalid_argument("eta out of (0, 1]");
  if (params.gamma_m <= 0.0 || params.dt <= 0.0) throw std::invalid_argument("nonpositive rate or step");
  gamma_.fill(params.gamma_m);
  const double tau = params.tau_m();
  sqrt_inv_tau_.fill(1.0 / std::sqrt(tau));
  sqrt_tau_m_ = std::sqrt(tau);
}

void SdeStepper::set_channel_gammas(const std::array<double, 12>& gammas) {
  gamma_ = gammas;
  for (int k = 0; k < 12; ++k) {
    // tau_k = 1 / (2 eta gamma_k); a disabled channel has no innovation.
    sqrt_inv_tau_[k] = gamma_[k] > 0 ? std::sqrt(2.0 * params_.eta * gamma_[k]) : 0.0;
  }
}

void SdeStepper::step(PureGauge& psi, const std::array<double, 12>& noise,
                      std::array<double, 12>& expectations) const {
  static const auto ops = channel_ops();
  const double dt = params_.dt;

  std::array<double, kGaugeDim> d{};
  for (int k = 0; k < 12; ++k) {
    // g = G_k psi
    std::array<double, kGaugeDim> g;
    double m = 0;
    for (int i = 0; i < kGaugeDim; ++i) {
      const int j = i ^ ops[k].flip;
      g[i] = sign_of(j, ops[k].zmask) * psi.a[j];
      m += psi.a[i] * g[i];
    }
    expectations[k] = m;
    if (gamma_[k] == 0.0) continue;
    // d psi = -gamma/4 ((1 + m^2) psi - 2 m g) dt + sqrt(gamma/2) (g - m psi) dW
    const double drift = -0.25 * gamma_[k] * dt;
    const double diff = std::sqrt(0.5 * gamma_[k]) * noise[k];
    for (int i = 0; i < kGaugeDim; ++i) {
      d[i] += drift * ((1.0 + m * m) * psi.a[i] - 2.0 * m * g[i]) + diff * (g[i] - m * psi.a[i]);
    }
  }
  for (int i = 0; i < kGaugeDim; ++i) psi.a[i] += d[i];
  psi.normalize();
}

void SdeStepper::step(GaugeDensity& rho, const std::array<double, 12>& noise,
                      std::array<double, 12>& expectations, StepDiagnostics* diag) const {
  static const auto ops = channel_ops();
  const double dt = params_.dt;

  GaugeDensity delta;
  for (int k = 0; k < 12; ++k) {
    const int f = ops[k].flip;
    const uint16_t zm = ops[k].zmask;

    double m = 0;
    for (int i = 0; i < kGaugeDim; ++i) m += sign_of(i, zm) * rho.at(i ^ f, i);
    expectations[k] = m;
    if (gamma_[k] == 0.0) continue;

    const double lind = 0.5 * gamma_[k] * dt;
    const double inno = sqrt_inv_tau_[k] * noise[k];
    for (int i = 0; i < kGaugeDim; ++i) {
      const int pi = i ^ f;
      const double si = sign_of(pi, zm);
      for (int j = 0; j < kGaugeDim; ++j) {
        const int pj = j ^ f;
        const double sj = sign_of(pj, zm);
        const double grg = si * sj * rho.at(pi, pj);
        const double anti = 0.5 * (si * rho.at(pi, j) + sj * rho.at(i, pj));
        delta.at(i, j) += lind * (grg - rho.at(i, j)) + inno * (anti - m * rho.at(i, j));
      }
    }
  }
  for (int i = 0; i < kGaugeDim * kGaugeDim; ++i) rho.m[i] += delta.m[i];
  rho.symmetrize();

  const double tr = rho.trace();
  if (diag) {
    diag->steps++;
    if (tr < diag->min_trace) diag->min_trace = tr;
  }
  if (tr < 1e-6) throw std::runtime_error("gauge density trace collapse; step too large");
  for (double& v : rho.m) v /= tr;

  // PSD guard: attempt a Cholesky factorization of rho + 1e-9 I; only on
  // failure pay for the full eigendecomposition and clip.
  {
    std::array<double, kGaugeDim * kGaugeDim> chol{};
    bool ok = true;
    for (int i = 0; i < kGaugeDim && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = rho.at(i, j) + (i == j ? 1e-9 : 0.0);
        for (int k2 = 0; k2 < j; ++k2) s -= chol[i * kGaugeDim + k2] * chol[j * kGaugeDim + k2];
        if (i == j) {
          if (s <= 0.0) {
            ok = false;
            break;
          }
          chol[i * kGaugeDim + i] = std::sqrt(s);
        } else {
          chol[i * kGaugeDim + j] = s / chol[j * kGaugeDim + j];
        }
      }
    }
    if (!ok) {
      // Jacobi eigendecomposition, clip negatives at zero, rebuild.
      std::array<double, kGaugeDim * kGaugeDim> a = rho.m;
      std::array<double, kGaugeDim * kGaugeDim> v{};
      for (int i = 0; i < kGaugeDim; ++i) v[i * kGaugeDim + i] = 1.0;
      for (int sweep = 0; sweep < 32; ++sweep) {
        double off = 0;
        for (int p = 0; p < kGaugeDim; ++p)
          for (int q = p + 1; q < kGaugeDim; ++q) off += a[p * kGaugeDim + q] * a[p * kGaugeDim + q];
        if (off < 1e-24) break;
        for (int p = 0; p < kGaugeDim; ++p) {
          for (int q = p + 1; q < kGaugeDim; ++q) {
            const double apq = a[p * kGaugeDim + q];
            if (std::abs(apq) < 1e-18) continue;
            const double app = a[p * kGaugeDim + p], aqq = a[q * kGaugeDim + q];
            const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
            const double c = std::cos(theta), s = std::sin(theta);
            for (int i = 0; i < kGaugeDim; ++i) {
              const double aip = a[i * kGaugeDim + p], aiq = a[i * kGaugeDim + q];
              a[i * kGaugeDim + p] = c * aip - s * aiq;
              a[i * kGaugeDim + q] = s * aip + c * aiq;
            }
            for (int i = 0; i < kGaugeDim; ++i) {
              const double api = a[p * kGaugeDim + i], aqi = a[q * kGaugeDim + i];
              a[p * kGaugeDim + i] = c * api - s * aqi;
              a[q * kGaugeDim + i] = s * api + c * aqi;
            }
            for (int i = 0; i < kGaugeDim; ++i) {
              const double vip = v[i * kGaugeDim + p], viq = v[i * kGaugeDim + q];
              v[i * kGaugeDim + p] = c * vip - s * viq;
              v[i * kGaugeDim + q] = s * vip + c * viq;
            }
          }
        }
      }
      bool clipped = false;
      std::array<double, kGaugeDim> eval;
      for (int i = 0; i < kGaugeDim; ++i) {
        eval[i] = a[i * kGaugeDim + i];
        if (eval[i] < 0.0) {
          if (eval[i] < -1e-9) clipped = true;
          eval[i] = 0.0;
        }
      }
      if (clipped) {
        if (diag) diag->clip_events++;
        double tsum = 0;
        for (double e : eval) tsum += e;
        for (int i = 0; i < kGaugeDim; ++i) {
          for (int j = 0; j < kGaugeDim; ++j) {
            double s = 0;
            for (int k2 = 0; k2 < kGaugeDim; ++k2)
              s += v[i * kGaugeDim + k2] * eval[k2] * v[j * kGaugeDim + k2];
            rho.at(i, j) = s / tsum;
          }
        }
      }
    }
  }
}

double min_eigenvalue(const GaugeDensity& rho) {
  std::array<double, kGaugeDim * kGaugeDim> a = rho.m;
  for (int sweep = 0; sweep < 48; ++sweep) {
    double off = 0;
    for (int p = 0; p < kGaugeDim; ++p)
      for (int q = p + 1; q < kGaugeDim; ++q) off += a[p * kGaugeDim + q] * a[p * kGaugeDim + q];
    if (off < 1e-28) break;
    for (int p = 0; p < kGaugeDim; ++p) {
      for (int q = p + 1; q < kGaugeDim; ++q) {
        const double apq = a[p * kGaugeDim + q];
        if (std::abs(apq) < 1e-20) continue;
        const double app = a[p * kGaugeDim + p], aqq = a[q * kGaugeDim + q];
        const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < kGaugeDim; ++i) {
          const double aip = a[i * kGaugeDim + p], aiq = a[i * kGaugeDim + q];
          a[i * kGaugeDim + p] = c * aip - s * aiq;
          a[i * kGaugeDim + q] = s * aip + c * aiq;
        }
        for (int i = 0; i < kGaugeDim; ++i) {
          const double api = a[p * kGaugeDim + i], aqi = a[q * kGaugeDim + i];
          a[p * kGaugeDim + i] = c * api - s * aqi;
          a[q * kGaugeDim + i] = s * api + c * aqi;
        }
      }
    }
  }
  double mn = a[0];
  for (int i = 1; i < kGaugeDim; ++i) mn = std::min(mn, a[i * kGaugeDim + i]);
  return mn;
}

}  // namespace bsqec
