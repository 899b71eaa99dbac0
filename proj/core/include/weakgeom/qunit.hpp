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

// Numerical exploration of real weak values for qunits (n >= 2).
//
// Given distinct, nonorthogonal |phi_0>, |psi_0>, complete each to an
// orthonormal basis and let R be the span of the centered projectors
// |phi_i><phi_i| - I/n and |psi_j><psi_j| - I/n. Every M in R has a real weak
// value for every pair (phi_i, psi_j); whether R is exactly the set of such M
// is open, and conjecture_scan looks for trace-0 operators off R that are
// nonetheless real on every pair.

#include <cstdint>
#include <optional>
#include <vector>

#include "weakgeom/hermitian.hpp"

namespace weakgeom {

/// Relative projection residual below which an operator counts as in R.
inline constexpr double kInRThreshold = 1e-8;

struct QunitFrame {
  std::size_t dim = 0;
  std::vector<Ket> basis_phi;       // basis_phi[0] == phi_0
  std::vector<Ket> basis_psi;       // basis_psi[0] == psi_0
  std::vector<HermitianOp> r_basis; // orthonormal under (A, B) = Tr(AB)/2

  std::size_t r_rank() const noexcept { return r_basis.size(); }
  /// Orthogonal projection of a trace-0 operator onto R.
  HermitianOp project_onto_r(const HermitianOp& m) const;
  /// |M - proj(M)| / |M| in the trace-0 norm; 0 for M = 0.
  double relative_residual(const HermitianOp& m) const;
};

/// Completes both states to orthonormal bases by greedy Gram-Schmidt over the
/// computational basis, or over seeded random vectors when `completion_seed`
/// is set. Throws DimensionMismatch and DegenerateEnsemble.
QunitFrame build_frame(const Ket& phi0, const Ket& psi0, std::size_t n,
                       std::optional<std::uint64_t> completion_seed = std::nullopt);

struct PropositionResult {
  double max_imag = 0.0;
  std::size_t valid_pairs = 0;
  std::size_t skipped_pairs = 0;  // orthogonal (phi_i, psi_j), weak value undefined
  bool holds = false;             // max_imag < tol
};

/// Max |Im W_{phi_i,psi_j}(M)| over all nonorthogonal pairs. Throws
/// NotTraceZero, DimensionMismatch, or NotInR when M is off R.
PropositionResult proposition_check(const QunitFrame& f, const HermitianOp& m, double tol);

struct ScanOptions {
  bool all_pairs = true;             // false: only the (0, 0) pair is required real
  double real_threshold = 1e-9;      // max |Im| below this marks a candidate
  double off_r_threshold = 1e-6;     // minimum relative distance from R
};

struct Counterexample {
  std::size_t trial = 0;
  HermitianOp op;
  double max_imag = 0.0;
  double off_r_residual = 0.0;
};

struct ScanReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool all_pairs = true;
  std::size_t r_rank = 0;
  std::size_t skipped_pairs = 0;
  /// Dimension of {M trace-0 : every required weak value is real}; the
  /// conjecture asserts it equals r_rank.
  std::size_t real_locus_dim = 0;
  /// Largest |Im| seen on projections of the samples onto R (should be ~0).
  double max_imag_in_R = 0.0;
  /// Smallest per-sample max |Im| over samples off R.
  double min_max_imag_off_R = 0.0;
  std::vector<Counterexample> candidate_counterexamples;
};

/// Samples `trials` trace-0 operators with a nonzero component off R, one
/// independent random stream per trial index. Candidates are re-evaluated in
/// extended precision against real_threshold / 10 before being reported.
/// Throws InvalidArgument when trials == 0.
ScanReport conjecture_scan(const QunitFrame& f, std::size_t trials, std::uint64_t seed,
                           const ScanOptions& options = {});

/// Max |Im W_{phi_i,psi_j}(M)| over nonorthogonal pairs without the R
/// membership check.
double max_imag_weak(const QunitFrame& f, const HermitianOp& m, bool all_pairs = true);

}  // namespace weakgeom
