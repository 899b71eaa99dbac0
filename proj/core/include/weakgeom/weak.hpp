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

// Weak functions of pre/post-selected (PPS) qubit ensembles.
//
// For an ensemble (phi, psi) with gamma unbiased to both, every qubit
// observable N has
//
//   W(N) = <psi|N|phi> / <psi|phi> = (Tr N + s + i a tan(omega/2)) / 2,
//
// where s indexes the invariant line through s P (P the midpoint of the two
// state images) and a is the lift of N's image off the PPS plane along the
// gamma image.

#include <complex>
#include <optional>

#include "weakgeom/hermitian.hpp"

namespace weakgeom {

/// Validated qubit ensemble: distinct, nonorthogonal pre/post states.
class PPSEnsemble {
 public:
  /// Throws DegenerateEnsemble unless tol::kDist < |<psi|phi>| < 1 - tol::kDist.
  static PPSEnsemble make(const Ket& pre, const Ket& post);

  const Ket& pre() const noexcept { return pre_; }
  const Ket& post() const noexcept { return post_; }
  /// <psi|phi> of the canonical representatives.
  Complex overlap() const noexcept { return overlap_; }
  /// Signed phase in (-pi, pi) \ {0} with W(|gamma><gamma|) = (1 + i tan(omega/2)) / 2.
  double omega() const noexcept { return omega_; }
  const Ket& gamma() const noexcept { return gamma_; }
  const Ket& gamma_perp() const noexcept { return gamma_perp_; }

 private:
  PPSEnsemble(Ket pre, Ket post, Complex overlap, double omega, Ket gamma, Ket gamma_perp)
      : pre_(std::move(pre)), post_(std::move(post)), overlap_(overlap), omega_(omega),
        gamma_(std::move(gamma)), gamma_perp_(std::move(gamma_perp)) {}

  Ket pre_;
  Ket post_;
  Complex overlap_;
  double omega_;
  Ket gamma_;
  Ket gamma_perp_;
};

inline PPSEnsemble make_ensemble(const Ket& pre, const Ket& post) { return PPSEnsemble::make(pre, post); }

/// <psi|M|phi> / <psi|phi> with no ensemble validation beyond a nonzero
/// denominator; works in any dimension. Throws DegenerateEnsemble when
/// |<psi|phi>| <= tol::kDist.
Complex weak_value(const Ket& pre, const Ket& post, const HermitianOp& m);

Complex weak_value(const PPSEnsemble& e, const HermitianOp& m);

/// Pure-state Bloch-sphere images spanning the real-weak-value plane.
struct PPSPlane {
  SPoint e1;      // image of phi
  SPoint e2;      // in-plane image orthogonal to e1
  SPoint normal;  // image of gamma
  SPoint p_point; // (|phi><phi| + |psi><psi| - I) / 2
};

PPSPlane pps_plane(const PPSEnsemble& e);

/// Affine line {base + t * direction} on which the trace-0 weak function is
/// constant, equal to (s + i a tan(omega/2)) / 2.
struct KLine {
  double s = 0.0;
  double a = 0.0;
  SPoint base;       // s P + a (gamma image)
  SPoint direction;  // unit Bloch vector along (psi image - phi image)

  SPoint point(double t) const { return base + t * direction; }
};

KLine k_line(const PPSEnsemble& e, double s, double a);

struct WeakDecomposition {
  double trace = 0.0;
  double s = 0.0;
  double a = 0.0;
  double omega = 0.0;

  Complex weak_value() const;
};

/// Throws DimensionMismatch for non-qubit operators.
WeakDecomposition decompose_weak(const PPSEnsemble& e, const HermitianOp& n);

/// |a| <= tolerance for the trace-0 operator m.
bool is_in_pps_plane(const PPSEnsemble& e, const HermitianOp& m, double tolerance);

/// Qubit density operator (1 - p)|phi><phi| + p|phi_perp><phi_perp|, p <= 1/2.
class DensityOp {
 public:
  /// Validates trace 1 and eigenvalues in [-kNorm, 1 + kNorm]. When the
  /// spectrum is degenerate (rho = I/2) the eigenbasis is {|0>, |1>}.
  static DensityOp from_op(const HermitianOp& op);
  /// Keeps the given eigenbasis; p in [0, 1]. A p above 1/2 is folded to
  /// 1 - p with the basis swapped.
  static DensityOp from_mixture(double p, const Ket& phi);
  static DensityOp pure(const Ket& phi) { return from_mixture(0.0, phi); }

  const HermitianOp& op() const noexcept { return op_; }
  double p() const noexcept { return p_; }
  const Ket& phi() const noexcept { return phi_; }
  const Ket& phi_perp() const noexcept { return phi_perp_; }

 private:
  DensityOp(HermitianOp op, double p, Ket phi, Ket phi_perp)
      : op_(std::move(op)), p_(p), phi_(std::move(phi)), phi_perp_(std::move(phi_perp)) {}

  HermitianOp op_;
  double p_;
  Ket phi_;
  Ket phi_perp_;
};

/// Tr(|psi><psi| M rho) / Tr(|psi><psi| rho). Throws
/// DegenerateGeneralizedEnsemble when Tr(|psi><psi| rho) <= tol::kDist or
/// when rho is a non-maximally-mixed operator diagonal in {psi, psi_perp}.
Complex generalized_weak_value(const DensityOp& rho, const Ket& post, const HermitianOp& m);

struct MixtureDecomposition {
  double w1 = 0.0;
  Complex v1;  // W_{phi,psi}(M)
  double w2 = 0.0;
  Complex v2;  // W_{phi_perp,psi}(M)

  Complex recombined() const { return w1 * v1 + w2 * v2; }
};

/// Splits the generalized weak value into the pure-state weak values of
/// rho's eigenstates. Throws EigenbasisContainsPost when phi is psi or
/// psi_perp up to tolerance.
MixtureDecomposition mixture_decomposition(const DensityOp& rho, const Ket& post, const HermitianOp& m);

}  // namespace weakgeom
