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

#include "weakgeom/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weakgeom/extremal.hpp"

namespace weakgeom {
namespace {

Ket zero_state() {
  const std::array<Complex, 2> amps{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  return Ket::make(amps);
}

double component_of(Complex w, WeakComponent c) {
  switch (c) {
    case WeakComponent::Real: return w.real();
    case WeakComponent::Imag: return w.imag();
    case WeakComponent::Full: break;
  }
  return std::abs(w);
}

double residual_at(const NoiseResponse& r, double p, Complex observed, WeakComponent c) {
  const double d = r.d0 + p * r.d1;
  if (d <= 0.0) return std::numeric_limits<double>::infinity();
  const Complex w = r.value(p);
  if (c == WeakComponent::Full) return std::abs(w - observed);
  return std::abs(component_of(w, c) - component_of(observed, c));
}

}  // namespace

std::string_view to_string(NoiseKind kind) noexcept {
  return kind == NoiseKind::Depolarizing ? "depolarizing" : "amplitude_damping";
}

NoiseKind parse_noise_kind(std::string_view name) {
  if (name == "depolarizing") return NoiseKind::Depolarizing;
  if (name == "amplitude_damping") return NoiseKind::AmplitudeDamping;
  throw Error(ErrorCode::InvalidArgument, "unknown channel kind '" + std::string(name) + "'");
}

std::string_view to_string(WeakComponent c) noexcept {
  switch (c) {
    case WeakComponent::Real: return "real";
    case WeakComponent::Imag: return "imag";
    case WeakComponent::Full: return "full";
  }
  return "full";
}

NoiseChannel NoiseChannel::make(NoiseKind kind, double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "channel parameter p must lie in [0, 1) (got " + std::to_string(p) + ")");
  }
  return NoiseChannel(kind, p, zero_state());
}

NoiseChannel NoiseChannel::amplitude_damping(double p, const Ket& fixed_state) {
  if (fixed_state.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "fixed state must be a qubit");
  NoiseChannel ch = make(NoiseKind::AmplitudeDamping, p);
  ch.fixed_ = fixed_state;
  return ch;
}

bool NoiseChannel::is_physical() const noexcept {
  return kind_ != NoiseKind::Depolarizing || p_ < 0.5;
}

double legal_upper_bound(NoiseKind kind) noexcept { return kind == NoiseKind::Depolarizing ? 0.5 : 1.0; }

DensityOp apply_channel(const NoiseChannel& ch, const Ket& phi) {
  if (phi.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "channels act on qubit states");
  if (ch.kind() == NoiseKind::Depolarizing) return DensityOp::from_mixture(ch.p(), phi);
  const HermitianOp rho = (1.0 - ch.p()) * projector(phi) + ch.p() * projector(ch.fixed_state());
  return DensityOp::from_op(rho);
}

Complex expected_noisy_weak(const NoiseChannel& ch, const Ket& phi, const Ket& psi, const HermitianOp& m) {
  return generalized_weak_value(apply_channel(ch, phi), psi, m);
}

NoiseResponse noise_response(NoiseKind kind, const Ket& phi, const Ket& psi, const HermitianOp& m,
                             const std::optional<Ket>& fixed_state) {
  (void)generalized_weak_value(DensityOp::pure(phi), psi, m);  // validates the noiseless pair
  const HermitianOp start = projector(phi);
  const HermitianOp target = kind == NoiseKind::Depolarizing ? projector(orthogonal_complement(phi))
                                                             : projector(fixed_state.value_or(zero_state()));
  const HermitianOp step = target - start;
  const CVector& v = psi.amplitudes();
  NoiseResponse r;
  r.n0 = v.dot(m.matrix() * start.matrix() * v);
  r.n1 = v.dot(m.matrix() * step.matrix() * v);
  r.d0 = v.dot(start.matrix() * v).real();
  r.d1 = v.dot(step.matrix() * v).real();
  return r;
}

NoiseEstimate infer_p(NoiseKind kind, const Ket& phi, const Ket& psi, const HermitianOp& m, Complex observed,
                      WeakComponent component, const std::optional<Ket>& fixed_state) {
  const NoiseResponse r = noise_response(kind, phi, psi, m, fixed_state);
  const Complex slope0 = r.slope(0.0);
  const double sensitivity = component == WeakComponent::Real   ? std::abs(slope0.real())
                             : component == WeakComponent::Imag ? std::abs(slope0.imag())
                                                                : std::abs(slope0);
  if (!(sensitivity >= kMinSensitivity)) {
    throw Error(ErrorCode::InsensitiveObservable,
                "the " + std::string(to_string(component)) + " component does not depend on p for this observable");
  }

  // observed * (d0 + p d1) = n0 + p n1, restricted to the chosen component.
  std::optional<double> p_hat;
  if (component == WeakComponent::Full) {
    const Complex u = observed * r.d0 - r.n0;
    const Complex v = observed * r.d1 - r.n1;
    if (std::norm(v) > 0.0) p_hat = -(std::conj(v) * u).real() / std::norm(v);
  } else {
    const double c = component_of(observed, component);
    const double n0 = component_of(r.n0, component);
    const double n1 = component_of(r.n1, component);
    const double den = c * r.d1 - n1;
    if (den != 0.0) p_hat = (n0 - c * r.d0) / den;
  }

  const double hi = legal_upper_bound(kind);
  double p;
  if (p_hat && std::isfinite(*p_hat)) {
    p = std::clamp(*p_hat, 0.0, hi);
  } else {
    // Observed value sits on the asymptote of the response; take the better end.
    p = residual_at(r, 0.0, observed, component) <= residual_at(r, hi, observed, component) ? 0.0 : hi;
  }
  return NoiseEstimate{p, residual_at(r, p, observed, component), m, component};
}

NoiseProbe optimal_noise_probe(const Ket& phi, const Ket& psi) {
  const PPSEnsemble e = PPSEnsemble::make(phi, psi);
  const ExtremalReport ext = extremal_real_projectors(e);
  const HermitianOp gamma = projector(e.gamma());

  const auto slope0 = [&](const HermitianOp& m) {
    return noise_response(NoiseKind::Depolarizing, phi, psi, m).slope(0.0);
  };
  const double re_plus = std::abs(slope0(ext.h_plus).real());
  const double re_minus = std::abs(slope0(ext.h_minus).real());

  ProbeRationale why;
  why.im_slope = std::abs(slope0(gamma).imag());
  why.re_probe_is_plus = re_plus >= re_minus;
  why.re_slope = std::max(re_plus, re_minus);

  if (why.im_slope >= why.re_slope) return NoiseProbe{gamma, "gamma", why};
  if (why.re_probe_is_plus) return NoiseProbe{ext.h_plus, "h_plus", why};
  return NoiseProbe{ext.h_minus, "h_minus", why};
}

NoiseDeltas depolarizing_deltas(const PPSEnsemble& e, double p) {
  const ExtremalReport ext = extremal_real_projectors(e);
  const HermitianOp gamma = projector(e.gamma());
  const NoiseChannel ch = NoiseChannel::make(NoiseKind::Depolarizing, p);
  const auto noisy = [&](const HermitianOp& m) { return expected_noisy_weak(ch, e.pre(), e.post(), m); };
  NoiseDeltas d;
  d.im_gamma = std::abs(weak_value(e, gamma).imag() - noisy(gamma).imag());
  d.re_h_plus = std::abs(ext.w_plus.real() - noisy(ext.h_plus).real());
  d.re_h_minus = std::abs(ext.w_minus.real() - noisy(ext.h_minus).real());
  return d;
}

}  // namespace weakgeom
