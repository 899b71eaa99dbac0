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

#include "weakgeom/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weakgeom {
namespace {

constexpr double kPhaseTieTolerance = 1e-12;

void require_qubit(std::size_t dim, const char* what) {
  if (dim != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " is defined for qubits only (got dimension " +
                    std::to_string(dim) + ")");
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_trace_zero(const HermitianOp& op) {
  if (!op.is_trace_zero()) {
    throw Error(ErrorCode::NotTraceZero,
                "operator must be trace-0 (trace = " + std::to_string(op.trace()) + ")");
  }
}

}  // namespace

Ket Ket::make(std::span<const Complex> amplitudes) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = amplitudes[i];
  return make(v);
}

Ket Ket::make(const CVector& amplitudes) {
  if (amplitudes.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "a ket needs at least two amplitudes");
  }
  double max_mod = amplitudes.cwiseAbs().maxCoeff();
  if (!(max_mod >= tol::kNorm) || !std::isfinite(max_mod)) {
    throw Error(ErrorCode::ZeroVector, "cannot normalize a zero (or non-finite) vector");
  }
  CVector v = amplitudes / amplitudes.norm();

  max_mod = v.cwiseAbs().maxCoeff();
  Eigen::Index lead = 0;
  while (std::abs(v[lead]) < max_mod - kPhaseTieTolerance) ++lead;
  const Complex phase = std::conj(v[lead]) / std::abs(v[lead]);
  v *= phase;
  v[lead] = Complex(std::abs(v[lead]), 0.0);
  return Ket(std::move(v));
}

Ket Ket::from_bloch(const Vec3& direction) {
  const double len = direction.norm();
  if (!(len >= tol::kNorm)) throw Error(ErrorCode::ZeroVector, "Bloch direction has zero length");
  const Vec3 r = direction / len;
  std::array<Complex, 2> amps;
  if (r.z() >= 0.0) {
    amps = {Complex(1.0 + r.z(), 0.0), Complex(r.x(), r.y())};
  } else {
    amps = {Complex(r.x(), -r.y()), Complex(1.0 - r.z(), 0.0)};
  }
  return make(amps);
}

Vec3 Ket::bloch() const {
  require_qubit(dim(), "Ket::bloch");
  const Complex a = amps_[0];
  const Complex b = amps_[1];
  const Complex ab = std::conj(a) * b;
  return Vec3(2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b));
}

Complex inner(const Ket& bra, const Ket& ket) {
  require_same_dim(bra.dim(), ket.dim());
  return bra.amplitudes().dot(ket.amplitudes());  // Eigen dot conjugates the left operand
}

HermitianOp HermitianOp::from_matrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "Hermitian operator must be a square matrix, n >= 2");
  }
  if (!m.allFinite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHerm * scale) {
    throw Error(ErrorCode::NotHermitian,
                "matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(asym) + ")");
  }
  return HermitianOp(0.5 * (m + m.adjoint()));
}

HermitianOp HermitianOp::from_bloch(double trace, const Vec3& b) {
  CMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (trace + b.z()), 0.0);
  m(1, 1) = Complex(0.5 * (trace - b.z()), 0.0);
  m(0, 1) = Complex(0.5 * b.x(), -0.5 * b.y());
  m(1, 0) = Complex(0.5 * b.x(), 0.5 * b.y());
  return HermitianOp(std::move(m));
}

HermitianOp HermitianOp::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return HermitianOp(CMatrix::Identity(k, k));
}

HermitianOp HermitianOp::zero(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return HermitianOp(CMatrix::Zero(k, k));
}

HermitianOp HermitianOp::pauli_x() { return from_bloch(0.0, Vec3(2.0, 0.0, 0.0)); }
HermitianOp HermitianOp::pauli_y() { return from_bloch(0.0, Vec3(0.0, 2.0, 0.0)); }
HermitianOp HermitianOp::pauli_z() { return from_bloch(0.0, Vec3(0.0, 0.0, 2.0)); }

Vec3 HermitianOp::bloch() const {
  require_qubit(dim(), "HermitianOp::bloch");
  const Complex off = m_(0, 1);
  return Vec3(2.0 * off.real(), -2.0 * off.imag(), (m_(0, 0) - m_(1, 1)).real());
}

bool HermitianOp::is_trace_zero(double tolerance) const noexcept {
  return std::abs(trace()) <= tolerance * std::max(1.0, m_.cwiseAbs().maxCoeff());
}

HermitianOp HermitianOp::traceless_part() const {
  return *this - (trace() / static_cast<double>(dim())) * identity(dim());
}

HermitianOp& HermitianOp::operator+=(const HermitianOp& rhs) {
  require_same_dim(dim(), rhs.dim());
  m_ += rhs.m_;
  return *this;
}

HermitianOp& HermitianOp::operator-=(const HermitianOp& rhs) {
  require_same_dim(dim(), rhs.dim());
  m_ -= rhs.m_;
  return *this;
}

HermitianOp& HermitianOp::operator*=(double s) {
  m_ *= s;
  return *this;
}

SPoint SPoint::from_op(const HermitianOp& op) {
  require_qubit(op.dim(), "SPoint");
  require_trace_zero(op);
  return SPoint{op.bloch()};
}

HermitianOp projector(const Ket& k) {
  const CVector& v = k.amplitudes();
  return HermitianOp::from_matrix(v * v.adjoint());
}

SPoint state_image(const Ket& k) { return SPoint{k.bloch()}; }

double scalar_product(const HermitianOp& a, const HermitianOp& b) {
  require_same_dim(a.dim(), b.dim());
  require_trace_zero(a);
  require_trace_zero(b);
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return 0.5 * a.matrix().cwiseProduct(b.matrix().conjugate()).sum().real();
}

double scalar_product(const SPoint& a, const SPoint& b) noexcept { return 0.25 * a.bloch.dot(b.bloch); }

double distance(const HermitianOp& a, const HermitianOp& b) {
  require_same_dim(a.dim(), b.dim());
  require_trace_zero(a);
  require_trace_zero(b);
  const HermitianOp d = a - b;
  return std::sqrt(std::max(0.0, scalar_product(d, d)));
}

double distance(const SPoint& a, const SPoint& b) noexcept {
  return std::sqrt(scalar_product(a - b, a - b));
}

bool is_mutually_unbiased(const Ket& phi, const Ket& psi, double tolerance) {
  const double ov2 = std::norm(inner(phi, psi));
  return std::abs(ov2 - 1.0 / static_cast<double>(phi.dim())) <= tolerance;
}

MubPair mub_partner(const Ket& phi, const Ket& psi) {
  require_qubit(phi.dim(), "mub_partner");
  require_same_dim(phi.dim(), psi.dim());
  const double ov = std::abs(inner(psi, phi));
  if (ov <= tol::kDist || ov >= 1.0 - tol::kDist) {
    throw Error(ErrorCode::DegenerateEnsemble,
                "states are identical or orthogonal up to phase (|<psi|phi>| = " + std::to_string(ov) + ")");
  }
  const Vec3 n = phi.bloch().cross(psi.bloch());
  return MubPair{Ket::from_bloch(n), Ket::from_bloch(-n)};
}

MubCoefficients decompose_in_mub_basis(const HermitianOp& m, const std::array<Ket, 3>& triple) {
  require_qubit(m.dim(), "decompose_in_mub_basis");
  for (const Ket& k : triple) require_qubit(k.dim(), "decompose_in_mub_basis");
  require_trace_zero(m);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!is_mutually_unbiased(triple[i], triple[j], tol::kMub)) {
        throw Error(ErrorCode::NotMUBTriple, "triple is not pairwise mutually unbiased within tolerance");
      }
    }
  }
  // Images of a MUB triple are orthogonal with squared norm 1/4.
  const SPoint x = SPoint::from_op(m);
  return MubCoefficients{4.0 * scalar_product(x, state_image(triple[0])),
                         4.0 * scalar_product(x, state_image(triple[1])),
                         4.0 * scalar_product(x, state_image(triple[2]))};
}

HermitianOp reconstruct_from_mub_basis(const MubCoefficients& c, const std::array<Ket, 3>& triple) {
  return c.a * projector(triple[0]) + c.b * projector(triple[1]) + c.c * projector(triple[2]) -
         (0.5 * (c.a + c.b + c.c)) * HermitianOp::identity(2);
}

Ket orthogonal_complement(const Ket& k) {
  require_qubit(k.dim(), "orthogonal_complement");
  const std::array<Complex, 2> amps{-std::conj(k[1]), std::conj(k[0])};
  return Ket::make(amps);
}

}  // namespace weakgeom
