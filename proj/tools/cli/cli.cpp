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

#include "cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cli/json_io.hpp"
#include "weakgeom/extremal.hpp"
#include "weakgeom/noise.hpp"
#include "weakgeom/qunit.hpp"
#include "weakgeom/sampling.hpp"
#include "weakgeom/weak.hpp"

namespace weakgeom::cli {
namespace {

using io::Json;

// Inputs shared by the ensemble-based subcommands.
struct StateArgs {
  std::string pre;
  std::string post;
  std::string pre_json;
  std::string post_json;
  std::string op;
  std::string op_json;
  std::string input;
};

void add_state_options(CLI::App* cmd, StateArgs& a, bool with_post = true, bool with_op = false) {
  cmd->add_option("--pre", a.pre, "Pre-selected state shorthand (0, 1, +, -, +i, -i)");
  cmd->add_option("--pre-json", a.pre_json, "Pre-selected ket as JSON");
  if (with_post) {
    cmd->add_option("--post", a.post, "Post-selected state shorthand");
    cmd->add_option("--post-json", a.post_json, "Post-selected ket as JSON");
  }
  if (with_op) {
    cmd->add_option("--op", a.op,
                    "Observable: I, sigma_x, sigma_y, sigma_z, gamma, gamma_perp, h_plus, h_minus or proj:<state>");
    cmd->add_option("--op-json", a.op_json, "Observable as a JSON matrix or {trace, bloch}");
  }
  cmd->add_option("--input", a.input, "JSON document with pre/post/op/rho keys; '-' reads standard input");
}

class Context {
 public:
  Context(const StateArgs& a, std::istream& in) : args_(a) {
    if (a.input.empty()) return;
    std::string text;
    if (a.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(a.input);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open input file '" + a.input + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    doc_ = io::parse(text);
    if (!doc_.is_object()) throw Error(ErrorCode::ParseError, "input document must be a JSON object");
  }

  std::optional<Ket> ket(const std::string& shorthand, const std::string& json, const char* key) const {
    if (!json.empty()) return io::ket_from_json(io::parse(json));
    if (!shorthand.empty()) return io::named_state(shorthand);
    if (doc_.contains(key)) return io::ket_from_json(doc_[key]);
    return std::nullopt;
  }

  Ket require_ket(const std::string& shorthand, const std::string& json, const char* key) const {
    auto k = ket(shorthand, json, key);
    if (!k) throw Error(ErrorCode::InvalidArgument, std::string("missing --") + key + " state");
    return *k;
  }

  Ket pre() const { return require_ket(args_.pre, args_.pre_json, "pre"); }
  std::optional<Ket> maybe_pre() const { return ket(args_.pre, args_.pre_json, "pre"); }
  Ket post() const { return require_ket(args_.post, args_.post_json, "post"); }

  std::optional<HermitianOp> doc_op(const char* key) const {
    if (doc_.contains(key)) return io::op_from_json(doc_[key]);
    return std::nullopt;
  }

  /// Observable from --op-json, --op or the input document.
  HermitianOp op(const std::optional<PPSEnsemble>& e) const {
    if (!args_.op_json.empty()) return io::op_from_json(io::parse(args_.op_json));
    if (!args_.op.empty()) return named_op(args_.op, e);
    if (doc_.contains("op")) {
      if (doc_["op"].is_string()) return named_op(doc_["op"].get<std::string>(), e);
      return io::op_from_json(doc_["op"]);
    }
    throw Error(ErrorCode::InvalidArgument, "missing --op observable");
  }

  static HermitianOp named_op(const std::string& name, const std::optional<PPSEnsemble>& e) {
    if (name == "I" || name == "identity") return HermitianOp::identity(2);
    if (name == "X" || name == "sigma_x") return HermitianOp::pauli_x();
    if (name == "Y" || name == "sigma_y") return HermitianOp::pauli_y();
    if (name == "Z" || name == "sigma_z") return HermitianOp::pauli_z();
    if (name.rfind("proj:", 0) == 0) return projector(io::named_state(name.substr(5)));
    if (!e) throw Error(ErrorCode::InvalidArgument, "observable '" + name + "' needs a pre/post ensemble");
    if (name == "gamma") return projector(e->gamma());
    if (name == "gamma_perp") return projector(e->gamma_perp());
    if (name == "h_plus") return extremal_real_projectors(*e).h_plus;
    if (name == "h_minus") return extremal_real_projectors(*e).h_minus;
    throw Error(ErrorCode::InvalidArgument, "unknown observable '" + name + "'");
  }

 private:
  const StateArgs& args_;
  Json doc_ = Json::object();
};

void emit(std::ostream& out, const Json& j) { out << io::dump(j) << '\n'; }

void emit_error(std::ostream& out, std::string_view code, const std::string& message) {
  emit(out, Json{{"error", Json{{"code", std::string(code)}, {"message", message}}}});
}

// Grid from..to inclusive of both endpoints.
std::vector<double> grid(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !(step > 0.0) || to < from) {
    throw Error(ErrorCode::EmptyRange, "sweep range is empty (need from <= to and step > 0)");
  }
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> xs;
  xs.reserve(count + 1);
  for (std::size_t i = 0; i < count; ++i) xs.push_back(from + static_cast<double>(i) * step);
  if (std::abs(xs.back() - to) <= 1e-9 * step) {
    xs.back() = to;
  } else {
    xs.push_back(to);
  }
  return xs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"weakgeom: geometry of qubit weak values"};
  app.name("weakgeom");
  app.require_subcommand(1);

  StateArgs st;

  auto* weak = app.add_subcommand("weak", "Weak value of an observable (pure or mixed pre-selection)");
  add_state_options(weak, st, true, true);
  std::string rho_json;
  weak->add_option("--rho-json", rho_json, "Mixed pre-selection as a JSON density operator");

  auto* decompose = app.add_subcommand("decompose", "Decompose a weak value into (trace, s, a, omega)");
  add_state_options(decompose, st, true, true);

  auto* extremal = app.add_subcommand("extremal", "Projectors extremizing Re and Im of the weak value");
  add_state_options(extremal, st);

  std::string kind_name = "depolarizing";
  double p = 0.0;
  std::string fixed = "0";
  std::string fixed_json;
  auto* noise_apply = app.add_subcommand("noise-apply", "Apply a noise channel to the pre-selected state");
  add_state_options(noise_apply, st, false);
  noise_apply->add_option("--kind", kind_name, "depolarizing | amplitude_damping")->capture_default_str();
  noise_apply->add_option("--p", p, "Channel parameter in [0, 1)")->required();
  noise_apply->add_option("--fixed", fixed, "Amplitude-damping fixed state shorthand")->capture_default_str();
  noise_apply->add_option("--fixed-json", fixed_json, "Amplitude-damping fixed state as JSON");

  std::optional<double> observed_re;
  std::optional<double> observed_im;
  std::string probe_name;
  auto* noise_infer = app.add_subcommand("noise-infer", "Estimate the channel parameter from an observed weak value");
  add_state_options(noise_infer, st, true, true);
  noise_infer->add_option("--kind", kind_name, "depolarizing | amplitude_damping")->capture_default_str();
  noise_infer->add_option("--probe", probe_name, "Observable name (alias of --op)");
  noise_infer->add_option("--observed-re", observed_re, "Observed real part");
  noise_infer->add_option("--observed-im", observed_im, "Observed imaginary part");
  noise_infer->add_option("--fixed", fixed, "Amplitude-damping fixed state shorthand")->capture_default_str();
  noise_infer->add_option("--fixed-json", fixed_json, "Amplitude-damping fixed state as JSON");

  auto* probe = app.add_subcommand("probe", "Observable most sensitive to depolarizing noise");
  add_state_options(probe, st);

  std::size_t dim = 3;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> completion_seed;
  std::string pairs = "all";
  auto* scan = app.add_subcommand("scan", "Seeded search for real-weak-value operators off R (qunits)");
  add_state_options(scan, st);
  scan->add_option("--dim", dim, "Qunit dimension n >= 2")->capture_default_str();
  scan->add_option("--trials", trials, "Number of sampled operators")->capture_default_str();
  scan->add_option("--seed", seed, "Random seed")->capture_default_str();
  scan->add_option("--completion-seed", completion_seed, "Seed for the basis completion (default: computational)");
  scan->add_option("--pairs", pairs, "all: every (i, j) weak value must be real; single: only (0, 0)")
      ->check(CLI::IsMember({"all", "single"}))
      ->capture_default_str();

  std::string param;
  std::string quantity;
  std::string format = "csv";
  double from = 0.0, to = 0.0, step = 0.0;
  double fixed_s = 0.0, fixed_a = 0.0, line_t = 0.0;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a weak value over a parameter grid");
  add_state_options(sweep, st, true, true);
  sweep->add_option("--param", param, "p | angle | s | a")->required()->check(CLI::IsMember({"p", "angle", "s", "a"}));
  sweep->add_option("--from", from, "Grid start")->required();
  sweep->add_option("--to", to, "Grid end (inclusive)")->required();
  sweep->add_option("--step", step, "Grid step")->required();
  sweep->add_option("--quantity", quantity,
                    "Observable name for p/angle sweeps (default gamma / h_plus); k_line for s/a sweeps");
  sweep->add_option("--kind", kind_name, "Channel kind for p sweeps")->capture_default_str();
  sweep->add_option("--s", fixed_s, "Fixed s for a sweeps")->capture_default_str();
  sweep->add_option("--a", fixed_a, "Fixed a for s sweeps")->capture_default_str();
  sweep->add_option("--t", line_t, "Position along the K-line")->capture_default_str();
  sweep->add_option("--format", format, "csv | json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "weakgeom: " << e.what() << '\n' << app.help();
    emit_error(out, "usage", e.what());
    return kExitUsage;
  }

  try {
    const Context ctx(st, in);
    const auto fixed_state = [&]() -> std::optional<Ket> {
      if (!fixed_json.empty()) return io::ket_from_json(io::parse(fixed_json));
      return io::named_state(fixed);
    };

    if (*weak) {
      const Ket post = ctx.post();
      if (!rho_json.empty() || ctx.doc_op("rho")) {
        const HermitianOp rho_op = !rho_json.empty() ? io::op_from_json(io::parse(rho_json)) : *ctx.doc_op("rho");
        const DensityOp rho = DensityOp::from_op(rho_op);
        // A pure pre-selection, when given, names the ensemble-dependent observables.
        const std::optional<Ket> pre = ctx.maybe_pre();
        const HermitianOp m = ctx.op(pre ? std::optional<PPSEnsemble>(make_ensemble(*pre, post)) : std::nullopt);
        Json j{{"weak_value", io::to_json(generalized_weak_value(rho, post, m))}};
        try {
          const MixtureDecomposition mix = mixture_decomposition(rho, post, m);
          j["mixture"] = Json{{"w1", io::stable(mix.w1)},
                              {"v1", io::to_json(mix.v1)},
                              {"w2", io::stable(mix.w2)},
                              {"v2", io::to_json(mix.v2)}};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::EigenbasisContainsPost) throw;
          j["mixture"] = nullptr;
        }
        emit(out, j);
        return kExitOk;
      }
      const PPSEnsemble e = make_ensemble(ctx.pre(), post);
      const HermitianOp m = ctx.op(e);
      emit(out, Json{{"overlap", io::to_json(e.overlap())},
                     {"omega", io::stable(e.omega())},
                     {"weak_value", io::to_json(weak_value(e, m))}});
      return kExitOk;
    }

    if (*decompose) {
      const PPSEnsemble e = make_ensemble(ctx.pre(), ctx.post());
      const HermitianOp n = ctx.op(e);
      Json j = io::to_json(decompose_weak(e, n));
      j["in_pps_plane"] = is_in_pps_plane(e, n.traceless_part(), 1e-9);
      emit(out, j);
      return kExitOk;
    }

    if (*extremal) {
      const PPSEnsemble e = make_ensemble(ctx.pre(), ctx.post());
      emit(out, io::to_json(extremal_real_projectors(e), extremal_imag_projectors(e), e.omega()));
      return kExitOk;
    }

    if (*noise_apply) {
      const NoiseKind kind = parse_noise_kind(kind_name);
      const NoiseChannel ch = kind == NoiseKind::AmplitudeDamping ? NoiseChannel::amplitude_damping(p, *fixed_state())
                                                                  : NoiseChannel::make(kind, p);
      const DensityOp rho = apply_channel(ch, ctx.pre());
      emit(out, Json{{"channel", io::to_json(ch)},
                     {"physical", ch.is_physical()},
                     {"rho", io::to_json(rho.op())},
                     {"eigen", Json{{"p", io::stable(rho.p())},
                                    {"phi", io::to_json(rho.phi())},
                                    {"phi_perp", io::to_json(rho.phi_perp())}}}});
      return kExitOk;
    }

    if (*noise_infer) {
      const NoiseKind kind = parse_noise_kind(kind_name);
      const Ket pre = ctx.pre();
      const Ket post = ctx.post();
      const PPSEnsemble e = make_ensemble(pre, post);
      const HermitianOp m = probe_name.empty() ? ctx.op(e) : Context::named_op(probe_name, e);
      if (!observed_re && !observed_im) {
        throw Error(ErrorCode::InvalidArgument, "give --observed-re, --observed-im, or both");
      }
      const WeakComponent component = observed_re && observed_im ? WeakComponent::Full
                                      : observed_re              ? WeakComponent::Real
                                                                 : WeakComponent::Imag;
      const Complex observed(observed_re.value_or(0.0), observed_im.value_or(0.0));
      const std::optional<Ket> fx = kind == NoiseKind::AmplitudeDamping ? fixed_state() : std::nullopt;
      emit(out, io::to_json(infer_p(kind, pre, post, m, observed, component, fx)));
      return kExitOk;
    }

    if (*probe) {
      const NoiseProbe pr = optimal_noise_probe(ctx.pre(), ctx.post());
      emit(out, Json{{"probe", std::string(pr.name)},
                     {"observable", io::to_json(pr.probe)},
                     {"re_slope", io::stable(pr.rationale.re_slope)},
                     {"im_slope", io::stable(pr.rationale.im_slope)},
                     {"re_probe", pr.rationale.re_probe_is_plus ? "h_plus" : "h_minus"}});
      return kExitOk;
    }

    if (*scan) {
      // Without explicit states, draw the pair from a stream disjoint from the trial streams.
      Rng rng = make_rng(seed, ~std::uint64_t{0});
      const auto pre = ctx.ket(st.pre, st.pre_json, "pre");
      const auto post = ctx.ket(st.post, st.post_json, "post");
      const Ket phi0 = pre ? *pre : random_ket(rng, dim);
      const Ket psi0 = post ? *post : random_ket(rng, dim);
      const QunitFrame f = build_frame(phi0, psi0, dim, completion_seed);
      ScanOptions opts;
      opts.all_pairs = pairs == "all";
      Json j = io::to_json(conjecture_scan(f, trials, seed, opts));
      j["pre"] = io::to_json(phi0);
      j["post"] = io::to_json(psi0);
      emit(out, j);
      return kExitOk;
    }

    if (*sweep) {
      const std::vector<double> xs = grid(from, to, step);
      std::function<Complex(double)> eval;
      if (param == "p") {
        const NoiseKind kind = parse_noise_kind(kind_name);
        const PPSEnsemble e = make_ensemble(ctx.pre(), ctx.post());
        const HermitianOp m = quantity.empty() ? projector(e.gamma()) : Context::named_op(quantity, e);
        const std::optional<Ket> fx = kind == NoiseKind::AmplitudeDamping ? fixed_state() : std::nullopt;
        eval = [=](double x) {
          const NoiseChannel ch = fx ? NoiseChannel::amplitude_damping(x, *fx) : NoiseChannel::make(kind, x);
          return expected_noisy_weak(ch, e.pre(), e.post(), m);
        };
      } else if (param == "angle") {
        const std::string name = quantity.empty() ? "h_plus" : quantity;
        eval = [=](double theta) {
          const PPSEnsemble e = make_ensemble(Ket::from_bloch(Vec3(std::sin(theta), 0.0, std::cos(theta))),
                                              io::named_state("0"));
          return weak_value(e, Context::named_op(name, e));
        };
      } else {
        if (!quantity.empty() && quantity != "k_line") {
          throw Error(ErrorCode::InvalidArgument, "s and a sweeps tabulate the k_line quantity only");
        }
        const PPSEnsemble e = make_ensemble(ctx.pre(), ctx.post());
        const bool over_s = param == "s";
        eval = [=](double x) {
          const KLine line = over_s ? k_line(e, x, fixed_a) : k_line(e, fixed_s, x);
          return weak_value(e, line.point(line_t).to_op());
        };
      }

      std::vector<std::array<double, 3>> rows;
      rows.reserve(xs.size());
      for (double x : xs) {
        const Complex w = eval(x);
        rows.push_back({x, w.real(), w.imag()});
      }
      if (format == "json") {
        Json table = Json::array();
        for (const auto& r : rows) table.push_back(Json::array({io::stable(r[0]), io::stable(r[1]), io::stable(r[2])}));
        emit(out, Json{{"param", param}, {"columns", Json::array({param, "re", "im"})}, {"rows", table}});
      } else {
        out << param << ",re,im\n";
        for (const auto& r : rows) {
          out << io::format_number(r[0]) << ',' << io::format_number(r[1]) << ',' << io::format_number(r[2]) << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "weakgeom: " << e.what() << '\n';
    emit_error(out, to_string(e.code()), e.what());
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "weakgeom: " << e.what() << '\n';
    emit_error(out, to_string(ErrorCode::ParseError), e.what());
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace weakgeom::cli
