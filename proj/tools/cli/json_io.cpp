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

#include "cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <numbers>

namespace weakgeom::io {

double stable(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double y = std::strtod(buf, nullptr);
  return y == 0.0 ? 0.0 : y;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", stable(x));
  return buf;
}

Json to_json(Complex z) { return Json::array({stable(z.real()), stable(z.imag())}); }

Json to_json(const Ket& k) {
  Json out = Json::array();
  for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(to_json(k[i]));
  return out;
}

Json to_json(const HermitianOp& op) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < op.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < op.dim(); ++j) row.push_back(to_json(op(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Vec3& v) { return Json::array({stable(v.x()), stable(v.y()), stable(v.z())}); }

Json to_json(const WeakDecomposition& d) {
  return Json{{"trace", stable(d.trace)},
              {"s", stable(d.s)},
              {"a", stable(d.a)},
              {"omega", stable(d.omega)},
              {"weak_value", to_json(d.weak_value())}};
}

Json to_json(const ExtremalReport& r, const ImagExtremes& imag, double omega) {
  return Json{
      {"h_plus", to_json(r.h_plus)},
      {"h_minus", to_json(r.h_minus)},
      {"w_plus", to_json(r.w_plus)},
      {"w_minus", to_json(r.w_minus)},
      {"bound", stable(r.bound)},
      {"gamma_proj", to_json(imag.gamma_proj)},
      {"gamma_perp_proj", to_json(imag.gamma_perp_proj)},
      {"w_gamma", to_json(imag.w_gamma)},
      {"w_gamma_perp", to_json(imag.w_gamma_perp)},
      {"omega", stable(omega)},
      {"imag_extreme", stable(imag.imag_extreme())},
      {"imag_extreme_unhalved", stable(std::abs(std::tan(0.5 * omega)))},
      {"imag_extreme_note",
       "attained extreme is tan(omega/2)/2; the unhalved tan(omega/2) reading of this bound is not "
       "reached by any state projector"},
  };
}

Json to_json(const NoiseChannel& ch) {
  return Json{{"kind", std::string(to_string(ch.kind()))}, {"p", stable(ch.p())}};
}

Json to_json(const NoiseEstimate& e) {
  return Json{{"p_hat", stable(e.p_hat)},
              {"residual", stable(e.residual)},
              {"component", std::string(to_string(e.component))},
              {"observable", to_json(e.observable_used)}};
}

Json to_json(const ScanReport& r) {
  Json candidates = Json::array();
  for (const Counterexample& c : r.candidate_counterexamples) {
    candidates.push_back(Json{{"trial", c.trial},
                              {"op", to_json(c.op)},
                              {"max_imag", stable(c.max_imag)},
                              {"off_r_residual", stable(c.off_r_residual)}});
  }
  return Json{{"dim", r.dim},
              {"trials", r.trials},
              {"seed", r.seed},
              {"all_pairs", r.all_pairs},
              {"r_rank", r.r_rank},
              {"skipped_pairs", r.skipped_pairs},
              {"real_locus_dim", r.real_locus_dim},
              {"max_imag_in_R", stable(r.max_imag_in_R)},
              {"min_max_imag_off_R", std::isfinite(r.min_max_imag_off_R) ? Json(stable(r.min_max_imag_off_R))
                                                                          : Json(nullptr)},
              {"candidate_count", r.candidate_counterexamples.size()},
              {"candidate_counterexamples", std::move(candidates)}};
}

Ket named_state(std::string_view name) {
  const double h = std::numbers::sqrt2 / 2.0;
  const auto make = [](Complex a, Complex b) {
    const std::array<Complex, 2> amps{a, b};
    return Ket::make(amps);
  };
  if (name == "0") return make(1.0, 0.0);
  if (name == "1") return make(0.0, 1.0);
  if (name == "+") return make(h, h);
  if (name == "-" || name == "−") return make(h, -h);
  if (name == "+i") return make(h, Complex(0.0, h));
  if (name == "-i" || name == "−i") return make(h, Complex(0.0, -h));
  throw Error(ErrorCode::InvalidArgument, "unknown state shorthand '" + std::string(name) +
                                              "' (expected 0, 1, +, -, +i or -i)");
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw Error(ErrorCode::ParseError, "complex numbers are encoded as [re, im]");
}

Ket ket_from_json(const Json& j) {
  if (j.is_string()) return named_state(j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a ket is an array of complex amplitudes");
  std::vector<Complex> amps;
  for (const Json& a : j) amps.push_back(complex_from_json(a));
  return Ket::make(amps);
}

HermitianOp op_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("trace") || !j.contains("bloch") || !j["bloch"].is_array() || j["bloch"].size() != 3) {
      throw Error(ErrorCode::ParseError, "operator object needs \"trace\" and a 3-element \"bloch\"");
    }
    const Json& b = j["bloch"];
    return HermitianOp::from_bloch(j["trace"].get<double>(),
                                   Vec3(b[0].get<double>(), b[1].get<double>(), b[2].get<double>()));
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "operator must be a matrix or {trace, bloch}");
  const auto n = static_cast<Eigen::Index>(j.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "operator matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return HermitianOp::from_matrix(m);
}

namespace {

// Depth of nested arrays; scalars are 0, objects count as deep.
int array_depth(const Json& j) {
  if (j.is_object()) return 1 << 10;
  if (!j.is_array()) return 0;
  int d = 0;
  for (const Json& e : j) d = std::max(d, array_depth(e));
  return d + 1;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && array_depth(j) > 2) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace weakgeom::io
