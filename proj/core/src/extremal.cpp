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

#include "weakgeom/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weakgeom/sampling.hpp"

namespace weakgeom {
namespace {

HermitianOp tangent_projector(const PPSEnsemble& e, double s) {
  return (0.5 * (1.0 - s)) * HermitianOp::identity(2) +
         (0.5 * s) * (projector(e.pre()) + projector(e.post()));
}

}  // namespace

ExtremalReport extremal_real_projectors(const PPSEnsemble& e) {
  const double s = 1.0 / std::abs(e.overlap());
  HermitianOp plus = tangent_projector(e, s);
  HermitianOp minus = tangent_projector(e, -s);
  const Complex w_plus = weak_value(e, plus);
  const Complex w_minus = weak_value(e, minus);
  return ExtremalReport{std::move(plus), std::move(minus), w_plus, w_minus, real_bound(e)};
}

ImagExtremes extremal_imag_projectors(const PPSEnsemble& e) {
  HermitianOp g = projector(e.gamma());
  HermitianOp gp = projector(e.gamma_perp());
  const Complex wg = weak_value(e, g);
  const Complex wgp = weak_value(e, gp);
  return ImagExtremes{std::move(g), std::move(gp), wg, wgp};
}

double real_bound(const PPSEnsemble& e) { return 0.5 / std::abs(e.overlap()); }

ProjectorSweep sweep_projectors(const PPSEnsemble& e, std::size_t grid_points, std::size_t random_points,
                                std::uint64_t seed) {
  ProjectorSweep out;
  out.max_re = -std::numeric_limits<double>::infinity();
  out.min_re = std::numeric_limits<double>::infinity();

  const Complex a0 = e.pre()[0], a1 = e.pre()[1];
  const Complex b0 = e.post()[0], b1 = e.post()[1];
  const Complex denom = e.overlap();
  auto visit = [&](const Vec3& dir) {
    const Ket k = Ket::from_bloch(dir);
    const Complex post_k = std::conj(b0) * k[0] + std::conj(b1) * k[1];
    const Complex k_pre = std::conj(k[0]) * a0 + std::conj(k[1]) * a1;
    const Complex w = post_k * k_pre / denom;
    out.max_re = std::max(out.max_re, w.real());
    out.min_re = std::min(out.min_re, w.real());
    out.max_abs_im = std::max(out.max_abs_im, std::abs(w.imag()));
    ++out.samples;
  };
  for (const Vec3& v : fibonacci_sphere(grid_points)) visit(v);
  Rng rng = make_rng(seed);
  for (std::size_t i = 0; i < random_points; ++i) visit(random_unit_vector(rng));
  return out;
}

}  // namespace weakgeom
