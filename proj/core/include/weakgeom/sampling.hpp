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

// Deterministic samplers shared by the sweeps, scans and tests.

#include <cstdint>
#include <random>
#include <vector>

#include "weakgeom/hermitian.hpp"

namespace weakgeom {

using Rng = std::mt19937_64;

/// Engine seeded from (seed, stream) so that per-trial streams do not depend
/// on evaluation order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// n nearly uniform unit vectors on the Fibonacci spiral.
std::vector<Vec3> fibonacci_sphere(std::size_t n);

Vec3 random_unit_vector(Rng& rng);

/// Haar-random pure state of dimension n.
Ket random_ket(Rng& rng, std::size_t n = 2);

/// Hermitian matrix with independent standard-normal entries (GUE-like).
HermitianOp random_hermitian(Rng& rng, std::size_t n = 2);

/// As random_hermitian with the trace removed.
HermitianOp random_traceless_hermitian(Rng& rng, std::size_t n = 2);

}  // namespace weakgeom
