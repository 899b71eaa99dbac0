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

#include "weakgeom/weak.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weakgeom {
namespace {

void require_qubit_op(const HermitianOp& m) {
  if (m.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a 2x2 operator, got " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
  }
}

bool distinct_nonorthogonal(double abs_overlap) {
  return abs_overlap > tol::kDist && abs_overlap < 1.0 - tol::kDist;
}

// <psi|M|phi> without normalization.
Complex sandwich(const Ket& post, const HermitianOp& m, const Ket& pre) {
  return post.amplitudes().dot(m.matrix() * pre.amplitudes());
}

}  // namespace

PPSEnsemble PPSEnsemble::make(const Ket& pre, const Ket& post) {
  if (pre.dim() != 2 || post.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "PPS ensembles are defined for qubit states");
  }
  const Complex ov = inner(post, pre);
  const double mod = std::abs(ov);
  if (!distinct_nonorthogonal(mod)) {
    throw Error(ErrorCode::DegenerateEnsemble,
                "pre and post states must be distinct and nonorthogonal (|<psi|phi>| = " +
                    std::to_string(mod) + ")");
  }
  MubPair g = mub_partner(pre, post);

  // |omega|/2 = arccos|<psi|phi>|, written with atan2 for accuracy near 1.
  const double half = std::atan2(std::sqrt(std::max(0.0, 1.0 - mod * mod)), mod);
  const double im_gamma = (inner(post, g.gamma) * inner(g.gamma, pre) / ov).imag();
  const double omega = im_gamma >= 0.0 ? 2.0 * half : -2.0 * half;
  return PPSEnsemble(pre, post, ov, omega, std::move(g.gamma), std::move(g.gamma_perp));
}

Complex weak_value(const Ket& pre, const Ket& post, const HermitianOp& m) {
  if (pre.dim() != post.dim() || m.dim() != pre.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "weak value operands have mismatched dimensions");
  }
  const Complex ov = inner(post, pre);
  if (std::abs(ov) <= tol::kDist) {
    throw Error(ErrorCode::DegenerateEnsemble, "pre and post states are orthogonal");
  }
  return sandwich(post, m, pre) / ov;
}

Complex weak_value(const PPSEnsemble& e, const HermitianOp& m) {
  require_qubit_op(m);
  return sandwich(e.post(), m, e.pre()) / e.overlap();
}

PPSPlane pps_plane(const PPSEnsemble& e) {
  const Vec3 r_phi = e.pre().bloch();
  const Vec3 r_psi = e.post().bloch();
  const Vec3 r_gamma = e.gamma().bloch();
  // Gram-Schmidt inside the plane; equivalently the image of the state
  // unbiased to phi that shares the plane with psi.
  const Vec3 in_plane = (r_psi - r_phi.dot(r_psi) * r_phi).normalized();
  return PPSPlane{SPoint{r_phi}, SPoint{in_plane}, SPoint{r_gamma}, SPoint{0.5 * (r_phi + r_psi)}};
}

KLine k_line(const PPSEnsemble& e, double s, double a) {
  const PPSPlane plane = pps_plane(e);
  const Vec3 dir = (e.post().bloch() - e.pre().bloch()).normalized();
  return KLine{s, a, s * plane.p_point + a * plane.normal, SPoint{dir}};
}

Complex WeakDecomposition::weak_value() const {
  return 0.5 * Complex(trace + s, a * std::tan(0.5 * omega));
}

WeakDecomposition decompose_weak(const PPSEnsemble& e, const HermitianOp& n) {
  require_qubit_op(n);
  const PPSPlane plane = pps_plane(e);
  const SPoint m{n.bloch()};
  const double s = scalar_product(m, plane.p_point) / scalar_product(plane.p_point, plane.p_point);
  const double a = scalar_product(m, plane.normal) / scalar_product(plane.normal, plane.normal);
  return WeakDecomposition{n.trace(), s, a, e.omega()};
}

bool is_in_pps_plane(const PPSEnsemble& e, const HermitianOp& m, double tolerance) {
  require_qubit_op(m);
  if (!m.is_trace_zero()) {
    throw Error(ErrorCode::NotTraceZero, "is_in_pps_plane expects a trace-0 operator");
  }
  return std::abs(decompose_weak(e, m).a) <= tolerance;
}

DensityOp DensityOp::from_op(const HermitianOp& op) {
  require_qubit_op(op);
  if (std::abs(op.trace() - 1.0) > tol::kHerm) {
    throw Error(ErrorCode::InvalidDensity, "density operator must have unit trace");
  }
  const Vec3 r = op.bloch();
  const double len = r.norm();
  // Eigenvalues are (1 +/- |r|) / 2.
  if (len > 1.0 + 2.0 * tol::kNorm) {
    throw Error(ErrorCode::InvalidDensity, "density operator has a negative eigenvalue");
  }
  const double p = std::max(0.0, 0.5 * (1.0 - len));
  const std::array<Complex, 2> zero_ket{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  Ket phi = len > tol::kNorm ? Ket::from_bloch(r) : Ket::make(zero_ket);
  Ket perp = orthogonal_complement(phi);
  return DensityOp(op, p, std::move(phi), std::move(perp));
}

DensityOp DensityOp::from_mixture(double p, const Ket& phi) {
  if (phi.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "density operators are qubit-only");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "mixing weight must lie in [0, 1]");
  }
  Ket a = phi;
  Ket b = orthogonal_complement(phi);
  if (p > 0.5) {
    std::swap(a, b);
    p = 1.0 - p;
  }
  HermitianOp op = (1.0 - p) * projector(a) + p * projector(b);
  return DensityOp(std::move(op), p, std::move(a), std::move(b));
}

namespace {

// Returns Tr(|psi><psi| rho) after checking the generalized ensemble is valid.
double generalized_denominator(const DensityOp& rho, const Ket& post, const HermitianOp& m) {
  require_qubit_op(m);
  if (post.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "post-selection must be a qubit state");
  const double denom = (1.0 - rho.p()) * std::norm(inner(post, rho.phi())) + rho.p() * std::norm(inner(post, rho.phi_perp()));
  if (denom <= tol::kDist) {
    throw Error(ErrorCode::DegenerateGeneralizedEnsemble,
                "post-selection probability Tr(|psi><psi| rho) vanishes");
  }
  if (rho.p() < 0.5 - tol::kNorm && !distinct_nonorthogonal(std::abs(inner(post, rho.phi())))) {
    throw Error(ErrorCode::DegenerateGeneralizedEnsemble,
                "rho lies on the affine line through |psi><psi| and |psi_perp><psi_perp|");
  }
  return denom;
}

}  // namespace

Complex generalized_weak_value(const DensityOp& rho, const Ket& post, const HermitianOp& m) {
  // Evaluated on the eigen-decomposition so that the overlaps cancel consistently.
  const double denom = generalized_denominator(rho, post, m);
  const auto term = [&](const Ket& k) {
    return post.amplitudes().dot(m.matrix() * k.amplitudes()) * std::conj(inner(post, k));
  };
  return ((1.0 - rho.p()) * term(rho.phi()) + rho.p() * term(rho.phi_perp())) / denom;
}

MixtureDecomposition mixture_decomposition(const DensityOp& rho, const Ket& post, const HermitianOp& m) {
  const double denom = generalized_denominator(rho, post, m);
  if (!distinct_nonorthogonal(std::abs(inner(post, rho.phi())))) {
    throw Error(ErrorCode::EigenbasisContainsPost, "rho's eigenbasis contains the post-selected state");
  }
  const double p = rho.p();
  MixtureDecomposition out;
  out.w1 = (1.0 - p) * std::norm(inner(post, rho.phi())) / denom;
  out.v1 = weak_value(rho.phi(), post, m);
  out.w2 = p * std::norm(inner(post, rho.phi_perp())) / denom;
  out.v2 = weak_value(rho.phi_perp(), post, m);
  return out;
}

}  // namespace weakgeom
