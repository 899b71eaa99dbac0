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

#include "weakgeom/sampling.hpp"

#include <cmath>
#include <numbers>

namespace weakgeom {
namespace {

// The standard distributions are implementation-defined; these draw straight
// from the engine's (standardized) output so samples match across toolchains.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(Rng& rng) {
  double u = uniform01(rng);
  while (u <= 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::vector<Vec3> fibonacci_sphere(std::size_t n) {
  std::vector<Vec3> out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = golden * static_cast<double>(i);
    out.emplace_back(r * std::cos(theta), r * std::sin(theta), z);
  }
  return out;
}

Vec3 random_unit_vector(Rng& rng) {
  Vec3 v;
  do {
    v = Vec3(standard_normal(rng), standard_normal(rng), standard_normal(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Ket random_ket(Rng& rng, std::size_t n) {
  CVector v(static_cast<Eigen::Index>(n));
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(standard_normal(rng), standard_normal(rng));
  } while (v.norm() < 1e-6);
  return Ket::make(v);
}

HermitianOp random_hermitian(Rng& rng, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  CMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    m(i, i) = Complex(standard_normal(rng), 0.0);
    for (Eigen::Index j = i + 1; j < k; ++j) {
      m(i, j) = Complex(standard_normal(rng), standard_normal(rng)) / std::sqrt(2.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianOp::from_matrix(m);
}

HermitianOp random_traceless_hermitian(Rng& rng, std::size_t n) {
  return random_hermitian(rng, n).traceless_part();
}

}  // namespace weakgeom
