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

#include "weakgeom/errors.hpp"

namespace weakgeom {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "zero_vector";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotHermitian: return "not_hermitian";
    case ErrorCode::NotTraceZero: return "not_trace_zero";
    case ErrorCode::NotMUBTriple: return "not_mub_triple";
    case ErrorCode::DegenerateEnsemble: return "degenerate_ensemble";
    case ErrorCode::DegenerateGeneralizedEnsemble: return "degenerate_generalized_ensemble";
    case ErrorCode::EigenbasisContainsPost: return "eigenbasis_contains_post";
    case ErrorCode::InvalidDensity: return "invalid_density";
    case ErrorCode::InvalidParameter: return "invalid_parameter";
    case ErrorCode::InsensitiveObservable: return "insensitive_observable";
    case ErrorCode::NotInR: return "not_in_r";
    case ErrorCode::EmptyRange: return "empty_range";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace weakgeom
