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

#include <cstdint>

#include "weakgeom/weak.hpp"

namespace weakgeom {

/// Projectors attaining the extreme real parts of the weak value over all
/// state projectors.
struct ExtremalReport {
  HermitianOp h_plus;
  HermitianOp h_minus;
  Complex w_plus;
  Complex w_minus;
  double bound = 0.0;  // 1 / (2 |<phi|psi>|)
};

/// H(s) = ((1 - s)/2) I + (s/2)(|phi><phi| + |psi><psi|), s = +/- 1/|<phi|psi>|.
ExtremalReport extremal_real_projectors(const PPSEnsemble& e);

struct ImagExtremes {
  HermitianOp gamma_proj;
  HermitianOp gamma_perp_proj;
  Complex w_gamma;
  Complex w_gamma_perp;

  /// Largest attainable |Im W| over state projectors, tan(omega/2) / 2.
  double imag_extreme() const { return std::abs(w_gamma.imag()); }
};

/// The imaginary part is extremal at the two states unbiased to both
/// ensemble members. The attained value is +/- tan(omega/2) / 2; the
/// unhalved tan(omega/2) is sometimes quoted for this bound but is not
/// reached by any projector.
ImagExtremes extremal_imag_projectors(const PPSEnsemble& e);

/// 1 / (2 |<phi|psi>|)
double real_bound(const PPSEnsemble& e);

/// Extremes of W over a finite set of state projectors, evaluated directly
/// from <psi|k><k|phi> / <psi|phi>.
struct ProjectorSweep {
  double max_re = 0.0;
  double min_re = 0.0;
  double max_abs_im = 0.0;
  std::size_t samples = 0;
};

/// Fibonacci-sphere grid of `grid_points` directions plus `random_points`
/// seeded uniform directions. Order-independent (pure max/min reduction).
ProjectorSweep sweep_projectors(const PPSEnsemble& e, std::size_t grid_points, std::size_t random_points,
                                std::uint64_t seed);

}  // namespace weakgeom
