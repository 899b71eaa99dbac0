// Copyright 2026 The weakgeom Authors
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

#pragma once

// Noise on the pre-selected state and its inversion from observed
// generalized weak values.
//
// Both channels move |phi><phi| along a straight segment,
//   rho(p) = |phi><phi| + p (T - |phi><phi|),
// with T = |phi_perp><phi_perp| (depolarizing) or T = |0><0| (amplitude
// damping). The generalized weak value is therefore a ratio of two affine
// functions of p, (n0 + p n1) / (d0 + p d1), which inverts in closed form.
// For mutually unbiased (phi, psi) under depolarizing noise d1 = 0 and the
// response is affine.

#include <optional>
#include <string_view>

#include "weakgeom/weak.hpp"

namespace weakgeom {

enum class NoiseKind { Depolarizing, AmplitudeDamping };

std::string_view to_string(NoiseKind kind) noexcept;
/// "depolarizing" | "amplitude_damping"; throws InvalidArgument otherwise.
NoiseKind parse_noise_kind(std::string_view name);

/// Channel with parameter p in [0, 1).
///
/// Depolarizing uses the Bloch-shrink parametrization
/// |phi><phi| -> (1 - p)|phi><phi| + p|phi_perp><phi_perp| (shrink factor
/// 1 - 2p), which is the textbook (1 - q) rho + q I/2 with q = 2p. Values
/// p >= 1/2 are accepted by the algebra but are not physical for this kind.
class NoiseChannel {
 public:
  /// Throws InvalidParameter when p is outside [0, 1).
  static NoiseChannel make(NoiseKind kind, double p);
  /// Amplitude damping toward an arbitrary fixed state (default |0>).
  static NoiseChannel amplitude_damping(double p, const Ket& fixed_state);

  NoiseKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  const Ket& fixed_state() const noexcept { return fixed_; }
  bool is_physical() const noexcept;

 private:
  NoiseChannel(NoiseKind kind, double p, Ket fixed) : kind_(kind), p_(p), fixed_(std::move(fixed)) {}

  NoiseKind kind_;
  double p_;
  Ket fixed_;
};

/// Largest p the estimator reports for this kind: 1/2 for depolarizing, 1
/// for amplitude damping.
double legal_upper_bound(NoiseKind kind) noexcept;

DensityOp apply_channel(const NoiseChannel& ch, const Ket& phi);

Complex expected_noisy_weak(const NoiseChannel& ch, const Ket& phi, const Ket& psi, const HermitianOp& m);

/// W_rho(p)(M) = (n0 + p n1) / (d0 + p d1).
struct NoiseResponse {
  Complex n0;
  Complex n1;
  double d0 = 0.0;
  double d1 = 0.0;

  Complex value(double p) const { return (n0 + p * n1) / (d0 + p * d1); }
  /// d/dp of value(p).
  Complex slope(double p) const {
    const double d = d0 + p * d1;
    return (n1 * d0 - n0 * d1) / (d * d);
  }
};

/// Validates the noiseless generalized ensemble (throws
/// DegenerateGeneralizedEnsemble).
NoiseResponse noise_response(NoiseKind kind, const Ket& phi, const Ket& psi, const HermitianOp& m,
                             const std::optional<Ket>& fixed_state = std::nullopt);

enum class WeakComponent { Real, Imag, Full };

std::string_view to_string(WeakComponent c) noexcept;

struct NoiseEstimate {
  double p_hat = 0.0;
  double residual = 0.0;
  HermitianOp observable_used;
  WeakComponent component = WeakComponent::Full;
};

inline constexpr double kMinSensitivity = 1e-10;

/// Solves component(W_rho(p)(M)) = component(observed) for p and clamps to
/// [0, legal_upper_bound(kind)]. Full uses the least-squares solution of the
/// linearized complex equation. Throws InsensitiveObservable when
/// |d component / dp| at p = 0 is below kMinSensitivity.
NoiseEstimate infer_p(NoiseKind kind, const Ket& phi, const Ket& psi, const HermitianOp& m, Complex observed,
                      WeakComponent component, const std::optional<Ket>& fixed_state = std::nullopt);

struct ProbeRationale {
  double re_slope = 0.0;    // max over H+/H- of |d Re W_rho(H)/dp| at p = 0
  double im_slope = 0.0;    // |d Im W_rho(|gamma><gamma|)/dp| at p = 0
  bool re_probe_is_plus = true;
};

struct NoiseProbe {
  HermitianOp probe;
  std::string_view name;  // "gamma", "h_plus" or "h_minus"
  ProbeRationale rationale;
};

/// Observable whose weak value moves fastest under depolarizing noise.
/// Throws DegenerateEnsemble for invalid (phi, psi).
NoiseProbe optimal_noise_probe(const Ket& phi, const Ket& psi);

/// |Im W_phi(gamma) - Im W_rho(gamma)| and |Re W_phi(H) - Re W_rho(H)| under
/// depolarizing noise of strength p.
struct NoiseDeltas {
  double im_gamma = 0.0;
  double re_h_plus = 0.0;
  double re_h_minus = 0.0;
};

NoiseDeltas depolarizing_deltas(const PPSEnsemble& e, double p);

}  // namespace weakgeom
