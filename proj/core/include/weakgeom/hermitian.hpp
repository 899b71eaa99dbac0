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

// Small-dimension Hermitian linear algebra and the Euclidean geometry of the
// trace-0 operator space.
//
// For qubits (n = 2) every Hermitian operator is carried equivalently as a
// (trace, Bloch vector) pair with
//
//   M = (t/2) I + (1/2) (x X + y Y + z Z).
//
// The trace-0 subspace is Euclidean under (A, B) = Tr(AB) / 2. In Bloch
// coordinates that product is (a . b) / 4, so pure-state images
// |k><k| - I/2 sit on the sphere of radius 1/2.

#include <array>
#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "weakgeom/errors.hpp"

namespace weakgeom {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

namespace tol {
inline constexpr double kNorm = 1e-10;
inline constexpr double kHerm = 1e-10;
inline constexpr double kMub = 1e-8;
// Distinct/nonorthogonal window on |<psi|phi>|: (kDist, 1 - kDist).
inline constexpr double kDist = 1e-8;
}  // namespace tol

/// Normalized pure state with a canonical global phase: the first
/// amplitude of largest modulus is real and non-negative.
class Ket {
 public:
  /// Normalizes and canonicalizes. Throws ZeroVector when every amplitude is
  /// below tol::kNorm and DimensionMismatch for fewer than two amplitudes.
  static Ket make(std::span<const Complex> amplitudes);
  static Ket make(const CVector& amplitudes);

  /// Qubit state whose Bloch vector points along `direction` (any length).
  static Ket from_bloch(const Vec3& direction);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  /// Unit Bloch vector; qubits only.
  Vec3 bloch() const;

  /// Exact amplitude equality (both are canonical representatives).
  friend bool operator==(const Ket& a, const Ket& b) {
    return a.amps_.size() == b.amps_.size() && a.amps_ == b.amps_;
  }

 private:
  explicit Ket(CVector amps) : amps_(std::move(amps)) {}
  CVector amps_;
};

/// <bra|ket>
Complex inner(const Ket& bra, const Ket& ket);

class HermitianOp {
 public:
  /// Validates conjugate symmetry to tol::kHerm (relative to the largest
  /// entry) and stores the exactly symmetrized matrix.
  static HermitianOp from_matrix(const CMatrix& m);
  static HermitianOp from_bloch(double trace, const Vec3& bloch);
  static HermitianOp identity(std::size_t n);
  static HermitianOp zero(std::size_t n);
  static HermitianOp pauli_x();
  static HermitianOp pauli_y();
  static HermitianOp pauli_z();

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double trace() const noexcept { return m_.trace().real(); }
  /// Bloch coefficients (x, y, z); qubits only.
  Vec3 bloch() const;
  bool is_trace_zero(double tolerance = tol::kHerm) const noexcept;
  /// N - (Tr N / n) I
  HermitianOp traceless_part() const;

  HermitianOp& operator+=(const HermitianOp& rhs);
  HermitianOp& operator-=(const HermitianOp& rhs);
  HermitianOp& operator*=(double s);

  friend HermitianOp operator+(HermitianOp a, const HermitianOp& b) { return a += b; }
  friend HermitianOp operator-(HermitianOp a, const HermitianOp& b) { return a -= b; }
  friend HermitianOp operator*(double s, HermitianOp a) { return a *= s; }
  friend HermitianOp operator*(HermitianOp a, double s) { return a *= s; }
  friend HermitianOp operator-(HermitianOp a) { return a *= -1.0; }

 private:
  explicit HermitianOp(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Element of the qubit trace-0 space, stored by its Bloch coefficients.
struct SPoint {
  Vec3 bloch = Vec3::Zero();

  /// Throws NotTraceZero / DimensionMismatch.
  static SPoint from_op(const HermitianOp& op);
  HermitianOp to_op() const { return HermitianOp::from_bloch(0.0, bloch); }

  SPoint& operator+=(const SPoint& o) { bloch += o.bloch; return *this; }
  SPoint& operator-=(const SPoint& o) { bloch -= o.bloch; return *this; }
  friend SPoint operator+(SPoint a, const SPoint& b) { return a += b; }
  friend SPoint operator-(SPoint a, const SPoint& b) { return a -= b; }
  friend SPoint operator*(double s, SPoint a) { a.bloch *= s; return a; }
};

HermitianOp projector(const Ket& k);

/// Image of a pure state in the trace-0 space: |k><k| - I/n (qubits only).
SPoint state_image(const Ket& k);

/// (A, B) = Tr(AB) / 2 on trace-0 operators of any dimension.
double scalar_product(const HermitianOp& a, const HermitianOp& b);
double scalar_product(const SPoint& a, const SPoint& b) noexcept;

/// sqrt(Tr((A - B)^2) / 2)
double distance(const HermitianOp& a, const HermitianOp& b);
double distance(const SPoint& a, const SPoint& b) noexcept;

/// | |<phi|psi>|^2 - 1/n | <= tolerance
bool is_mutually_unbiased(const Ket& phi, const Ket& psi, double tolerance = tol::kMub);

struct MubPair {
  Ket gamma;
  Ket gamma_perp;
};

/// The antipodal pair of qubit states unbiased to both inputs. gamma's Bloch
/// vector is normalize(r_phi x r_psi). Throws DegenerateEnsemble when the
/// inputs are equal or orthogonal up to phase.
MubPair mub_partner(const Ket& phi, const Ket& psi);

struct MubCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Coefficients with M = a P1 + b P2 + c P3 - ((a + b + c) / 2) I for a
/// pairwise mutually unbiased qubit triple.
MubCoefficients decompose_in_mub_basis(const HermitianOp& m, const std::array<Ket, 3>& triple);

HermitianOp reconstruct_from_mub_basis(const MubCoefficients& coeffs, const std::array<Ket, 3>& triple);

/// Qubit state orthogonal to k, canonical phase.
Ket orthogonal_complement(const Ket& k);

}  // namespace weakgeom
