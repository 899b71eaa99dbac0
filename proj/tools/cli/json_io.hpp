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

// JSON encoding of the library types.
//
//   complex      [re, im]
//   ket          [complex, ...]            or a shorthand: "0" "1" "+" "-" "+i" "-i"
//   operator     [[complex, ...], ...]     row-major; {"trace": t, "bloch": [x, y, z]}
//                                          is also accepted for qubits
//
// Numbers are emitted with 15 significant digits and without negative zero
// so that output is stable across runs and platforms.

#include <string>
#include <string_view>

#include "json.hpp"

#include "weakgeom/extremal.hpp"
#include "weakgeom/noise.hpp"
#include "weakgeom/qunit.hpp"
#include "weakgeom/weak.hpp"

namespace weakgeom::io {

using Json = nlohmann::json;

/// Rounds to 15 significant digits and maps -0 to 0.
double stable(double x);
/// printf-style "%.15g" after stable(); used for CSV cells.
std::string format_number(double x);

Json to_json(Complex z);
Json to_json(const Ket& k);
Json to_json(const HermitianOp& op);
Json to_json(const Vec3& v);
Json to_json(const WeakDecomposition& d);
Json to_json(const ExtremalReport& r, const ImagExtremes& imag, double omega);
Json to_json(const NoiseChannel& ch);
Json to_json(const NoiseEstimate& e);
Json to_json(const ScanReport& r);

/// Expands a state shorthand; throws InvalidArgument for unknown names.
Ket named_state(std::string_view name);

Complex complex_from_json(const Json& j);
/// Accepts an array of complex or a shorthand string.
Ket ket_from_json(const Json& j);
/// Accepts a row-major complex matrix or {"trace", "bloch"}.
HermitianOp op_from_json(const Json& j);

/// Indented output with numeric vectors, complex numbers and matrix rows
/// kept on one line.
std::string dump(const Json& j);

/// Parses text as JSON, mapping syntax errors to ErrorCode::ParseError.
Json parse(std::string_view text);

}  // namespace weakgeom::io
