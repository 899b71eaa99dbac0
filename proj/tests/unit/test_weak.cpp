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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "test_util.hpp"
#include "weakgeom/hermitian.hpp"
#include "weakgeom/sampling.hpp"
#include "weakgeom/weak.hpp"

using namespace weakgeom;
using weakgeom::testing::check_close;
using weakgeom::testing::ket2;
using weakgeom::testing::max_entry_diff;
using weakgeom::testing::random_ensemble;
using weakgeom::testing::same_ket;

namespace {

const double kH = std::numbers::sqrt2 / 2.0;
const Complex kI(0.0, 1.0);

Ket zero() { return ket2(1.0, 0.0); }
Ket one() { return ket2(0.0, 1.0); }
Ket plus() { return ket2(1.0, 1.0); }
Ket minus() { return ket2(1.0, -1.0); }
Ket minus_i() { return ket2(1.0, -kI); }

PPSEnsemble plus_zero() { return PPSEnsemble::make(plus(), zero()); }

HermitianOp half_identity() { return 0.5 * HermitianOp::identity(2); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("weak-engine") {

TEST_CASE("make_ensemble examples") {
  const PPSEnsemble e = plus_zero();
  CHECK(std::abs(e.overlap()) == doctest::Approx(kH).epsilon(1e-15));
  CHECK(e.omega() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(same_ket(e.gamma(), minus_i()));
  CHECK(code_of([] { PPSEnsemble::make(zero(), one()); }) == ErrorCode::DegenerateEnsemble);
  CHECK(code_of([] { PPSEnsemble::make(zero(), zero()); }) == ErrorCode::DegenerateEnsemble);
  CHECK(code_of([] { PPSEnsemble::make(zero(), Ket::make(CVector::Ones(3))); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("ensemble invariants hold for random ensembles") {
  Rng rng = make_rng(21);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    CHECK(std::abs(std::abs(e.overlap()) - std::abs(std::cos(e.omega() / 2))) < 1e-9);
    CHECK(e.omega() > 0.0);
    CHECK(e.omega() < std::numbers::pi);
    // W(|gamma><gamma|) = (1 + i tan(omega/2)) / 2, checked against the dense oracle.
    const Complex w = oracle::weak_value(e.pre(), e.post(), projector(e.gamma()));
    check_close(w, 0.5 * (1.0 + kI * std::tan(e.omega() / 2)), 1e-9);
  }
}

TEST_CASE("weak_value examples") {
  const PPSEnsemble e = plus_zero();
  check_close(weak_value(e, HermitianOp::identity(2)), 1.0, 1e-15);
  check_close(weak_value(e, HermitianOp::pauli_z()), 1.0, 1e-15);
  check_close(weak_value(e, HermitianOp::pauli_y()), -kI, 1e-15);
  check_close(weak_value(e, projector(e.gamma())), Complex(0.5, 0.5), 1e-15);
  CHECK(code_of([&] { weak_value(e, HermitianOp::identity(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("weak_value matches the dense oracle in several dimensions") {
  Rng rng = make_rng(22);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t) {
      const Ket phi = random_ket(rng, n);
      const Ket psi = random_ket(rng, n);
      const HermitianOp m = random_hermitian(rng, n);
      if (std::abs(inner(psi, phi)) < 0.05) continue;
      check_close(weak_value(phi, psi, m), oracle::weak_value(phi, psi, m), 1e-10);
    }
  }
}

TEST_CASE("weak_value is linear") {
  Rng rng = make_rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp m = random_hermitian(rng);
    const HermitianOp n = random_hermitian(rng);
    const double alpha = u(rng);
    const double beta = u(rng);
    check_close(weak_value(e, alpha * m + beta * n), alpha * weak_value(e, m) + beta * weak_value(e, n), 1e-10);
  }
}

TEST_CASE("weak_value is invariant under global phases of the inputs") {
  Rng rng = make_rng(24);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp m = random_hermitian(rng);
    const Ket phi = Ket::make(CVector(std::polar(1.0, u(rng)) * e.pre().amplitudes()));
    const Ket psi = Ket::make(CVector(std::polar(1.0, u(rng)) * e.post().amplitudes()));
    check_close(weak_value(PPSEnsemble::make(phi, psi), m), weak_value(e, m), 1e-12);
    // Without canonicalization the raw formula is phase-invariant too.
    check_close(oracle::weak_value(phi, psi, m), weak_value(e, m), 1e-12);
  }
}

TEST_CASE("trace split") {
  Rng rng = make_rng(25);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp n = random_hermitian(rng);
    const double tr = n.trace();
    check_close(weak_value(e, n), tr / 2 + weak_value(e, n - (tr / 2) * HermitianOp::identity(2)), 1e-12);
  }
}

TEST_CASE("generalized_weak_value examples") {
  const DensityOp pure = DensityOp::pure(plus());
  check_close(generalized_weak_value(pure, zero(), HermitianOp::pauli_y()), -kI, 1e-15);

  const DensityOp mixed = DensityOp::from_mixture(0.2, plus());
  check_close(generalized_weak_value(mixed, zero(), projector(minus_i())), Complex(0.5, 0.3), 1e-12);
  CHECK(max_entry_diff(mixed.op(), 0.8 * projector(plus()) + 0.2 * projector(minus())) < 1e-15);

  const DensityOp maximal = DensityOp::from_op(half_identity());
  const Complex got = generalized_weak_value(maximal, zero(), projector(zero()));
  check_close(got, oracle::generalized_weak_value(half_identity(), zero(), projector(zero())), 1e-15);
  check_close(got, 1.0, 1e-15);
}

TEST_CASE("generalized_weak_value rejects degenerate ensembles") {
  // Pre-selection orthogonal to the post-selection.
  CHECK(code_of([] { generalized_weak_value(DensityOp::pure(one()), zero(), HermitianOp::pauli_x()); }) ==
        ErrorCode::DegenerateGeneralizedEnsemble);
  // Mixture diagonal in the post-selection basis.
  CHECK(code_of([] {
          generalized_weak_value(DensityOp::from_mixture(0.3, zero()), zero(), HermitianOp::pauli_x());
        }) == ErrorCode::DegenerateGeneralizedEnsemble);
  CHECK(code_of([] { DensityOp::from_mixture(1.5, zero()); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { DensityOp::from_op(HermitianOp::identity(2)); }) == ErrorCode::InvalidDensity);
  CHECK(code_of([] { DensityOp::from_op(HermitianOp::from_bloch(1.0, Vec3(0, 0, 1.5))); }) ==
        ErrorCode::InvalidDensity);
}

TEST_CASE("generalized_weak_value matches the dense oracle and reduces to the pure case") {
  Rng rng = make_rng(26);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp m = random_hermitian(rng);
    check_close(generalized_weak_value(DensityOp::pure(e.pre()), e.post(), m), weak_value(e, m), 1e-12);
    const DensityOp rho = DensityOp::from_mixture(u(rng), e.pre());
    check_close(generalized_weak_value(rho, e.post(), m), oracle::generalized_weak_value(rho.op(), e.post(), m),
                1e-10);
  }
}

TEST_CASE("DensityOp eigen data reconstructs the operator") {
  Rng rng = make_rng(27);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const Vec3 r = random_unit_vector(rng) * u(rng);
    const HermitianOp op = HermitianOp::from_bloch(1.0, r);
    const DensityOp rho = DensityOp::from_op(op);
    CHECK(rho.p() >= 0.0);
    CHECK(rho.p() <= 0.5 + 1e-12);
    const HermitianOp back = (1.0 - rho.p()) * projector(rho.phi()) + rho.p() * projector(rho.phi_perp());
    CHECK(max_entry_diff(back, op) < 1e-10);
  }
  const DensityOp folded = DensityOp::from_mixture(0.9, zero());
  CHECK(folded.p() == doctest::Approx(0.1));
  CHECK(same_ket(folded.phi(), one()));
}

TEST_CASE("mixture_decomposition examples") {
  const DensityOp pure = DensityOp::pure(plus());
  const HermitianOp m = HermitianOp::pauli_y();
  const MixtureDecomposition d0 = mixture_decomposition(pure, zero(), m);
  CHECK(d0.w1 == doctest::Approx(1.0));
  CHECK(std::abs(d0.w2) < 1e-15);
  check_close(d0.v1, weak_value(plus(), zero(), m), 1e-15);
  check_close(d0.v2, weak_value(minus(), zero(), m), 1e-15);

  const MixtureDecomposition d = mixture_decomposition(DensityOp::from_mixture(0.2, plus()), zero(), m);
  CHECK(d.w1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(d.w2 == doctest::Approx(0.2).epsilon(1e-12));

  CHECK(code_of([] {
          mixture_decomposition(DensityOp::from_op(0.5 * HermitianOp::identity(2)), zero(), HermitianOp::pauli_x());
        }) == ErrorCode::EigenbasisContainsPost);
}

TEST_CASE("mixture_decomposition recombines to the generalized value") {
  Rng rng = make_rng(28);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp m = random_hermitian(rng);
    const DensityOp rho = DensityOp::from_mixture(u(rng), e.pre());
    const MixtureDecomposition d = mixture_decomposition(rho, e.post(), m);
    CHECK(std::abs(d.w1 + d.w2 - 1.0) < 1e-10);
    check_close(d.recombined(), oracle::generalized_weak_value(rho.op(), e.post(), m), 1e-10);
  }
}

TEST_CASE("pps_plane examples") {
  const PPSPlane pl = pps_plane(plus_zero());
  CHECK((pl.p_point.bloch - Vec3(0.5, 0.0, 0.5)).norm() < 1e-15);
  CHECK((pl.normal.bloch - Vec3(0.0, -1.0, 0.0)).norm() < 1e-15);
  CHECK(max_entry_diff(pl.p_point.to_op(),
                       0.5 * (projector(plus()) + projector(zero()) - HermitianOp::identity(2))) < 1e-15);
}

TEST_CASE("pps_plane geometry for random ensembles") {
  Rng rng = make_rng(29);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const PPSPlane pl = pps_plane(e);
    CHECK(std::abs(scalar_product(pl.e1, pl.e2)) < 1e-10);
    CHECK(std::abs(scalar_product(pl.e1, pl.normal)) < 1e-10);
    CHECK(std::abs(scalar_product(pl.e2, pl.normal)) < 1e-10);
    const SPoint dir = state_image(e.post()) - state_image(e.pre());
    CHECK(std::abs(scalar_product(pl.p_point, dir)) < 1e-10);
    for (const SPoint& img : {state_image(e.pre()), state_image(e.post())}) {
      const Vec3 b = img.bloch;
      const Vec3 in_plane = b.dot(pl.e1.bloch) * pl.e1.bloch + b.dot(pl.e2.bloch) * pl.e2.bloch;
      CHECK((b - in_plane).norm() < 1e-10);
    }
  }
}

TEST_CASE("k_line examples") {
  const PPSEnsemble e = plus_zero();
  const KLine k1 = k_line(e, 1.0, 0.0);
  // K(1) passes through both state images.
  const Vec3 phi_img = state_image(e.pre()).bloch;
  const Vec3 psi_img = state_image(e.post()).bloch;
  for (const Vec3& v : {phi_img, psi_img}) {
    const Vec3 rel = v - k1.base.bloch;
    CHECK((rel - rel.dot(k1.direction.bloch) * k1.direction.bloch).norm() < 1e-12);
  }
  const KLine k0 = k_line(e, 0.0, 0.0);
  CHECK(k0.point(0.0).bloch.norm() == 0.0);

  const KLine k2 = k_line(e, 2.0, 0.0);
  for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    check_close(weak_value(e, k2.point(t).to_op()), 1.0, 1e-12);
  }
}

TEST_CASE("k_line points share a weak value") {
  Rng rng = make_rng(30);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const double s = u(rng);
    const double a = u(rng);
    const KLine pre = k_line(e, s, 0.0);
    const KLine lifted = k_line(e, s, a);
    CHECK(std::abs(scalar_product(lifted.direction, pps_plane(e).p_point)) < 1e-10);
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      check_close(oracle::weak_value(e.pre(), e.post(), pre.point(x).to_op()), s / 2, 1e-10);
      check_close(oracle::weak_value(e.pre(), e.post(), lifted.point(x).to_op()),
                  0.5 * (s + kI * a * std::tan(e.omega() / 2)), 1e-9);
    }
  }
}

TEST_CASE("decompose_weak examples") {
  const PPSEnsemble e = plus_zero();
  const double w = std::numbers::pi / 2;

  const WeakDecomposition id = decompose_weak(e, HermitianOp::identity(2));
  CHECK(id.trace == doctest::Approx(2.0));
  CHECK(std::abs(id.s) < 1e-15);
  CHECK(std::abs(id.a) < 1e-15);
  check_close(id.weak_value(), 1.0, 1e-15);

  const WeakDecomposition z = decompose_weak(e, HermitianOp::pauli_z());
  CHECK(std::abs(z.trace) < 1e-15);
  CHECK(z.s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(z.a) < 1e-15);
  CHECK(z.omega == doctest::Approx(w));
  check_close(z.weak_value(), 1.0, 1e-14);

  const WeakDecomposition y = decompose_weak(e, HermitianOp::pauli_y());
  CHECK(std::abs(y.s) < 1e-15);
  CHECK(y.a == doctest::Approx(-2.0).epsilon(1e-14));
  check_close(y.weak_value(), -kI, 1e-14);

  CHECK(code_of([&] { decompose_weak(e, HermitianOp::identity(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("decompose_weak round-trips for random operators") {
  Rng rng = make_rng(31);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp n = random_hermitian(rng);
    const WeakDecomposition d = decompose_weak(e, n);
    CHECK(d.trace == doctest::Approx(n.trace()));
    check_close(d.weak_value(), oracle::weak_value(e.pre(), e.post(), n), 1e-9);
  }
}

TEST_CASE("is_in_pps_plane examples") {
  const PPSEnsemble e = plus_zero();
  CHECK(is_in_pps_plane(e, projector(e.pre()) - half_identity(), 1e-10));
  CHECK_FALSE(is_in_pps_plane(e, projector(e.gamma()) - half_identity(), 1e-10));
  const HermitianOp mix = 0.3 * (projector(e.pre()) - half_identity()) - 1.7 * (projector(e.post()) - half_identity());
  CHECK(is_in_pps_plane(e, mix, 1e-10));
  CHECK(std::abs(weak_value(e, mix).imag()) < 1e-10);
  CHECK(code_of([&] { is_in_pps_plane(e, HermitianOp::identity(2), 1e-10); }) == ErrorCode::NotTraceZero);
}

TEST_CASE("real weak values characterize the PPS plane") {
  Rng rng = make_rng(32);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 1000; ++t) {
    const PPSEnsemble e = random_ensemble(rng);
    const HermitianOp in_plane = u(rng) * (projector(e.pre()) - half_identity()) +
                                 u(rng) * (projector(e.post()) - half_identity());
    CHECK(is_in_pps_plane(e, in_plane, 1e-10));
    CHECK(std::abs(oracle::weak_value(e.pre(), e.post(), in_plane).imag()) < 1e-9);

    const HermitianOp m = random_traceless_hermitian(rng);
    const WeakDecomposition d = decompose_weak(e, m);
    const double im = oracle::weak_value(e.pre(), e.post(), m).imag();
    if (std::abs(d.a) > 1e-3) {
      CHECK_FALSE(is_in_pps_plane(e, m, 1e-10));
      CHECK(std::abs(im) > 1e-12);
      CHECK(std::abs(std::abs(im) - 0.5 * std::abs(d.a) * std::abs(std::tan(e.omega() / 2))) < 1e-9);
    }
  }
}

}  // TEST_SUITE
