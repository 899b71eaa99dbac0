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

#include "weakgeom/qunit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weakgeom/sampling.hpp"
#include "weakgeom/weak.hpp"

namespace weakgeom {
namespace {

constexpr double kGramSchmidtDrop = 1e-8;
constexpr std::size_t kMaxResamples = 64;

// Real coordinates in which the Euclidean dot equals Tr(AB)/2.
Eigen::VectorXd vectorize(const HermitianOp& m) {
  const auto n2 = static_cast<Eigen::Index>(m.dim() * m.dim());
  Eigen::VectorXd v(2 * n2);
  const CMatrix& a = m.matrix();
  const double scale = std::sqrt(0.5);
  for (Eigen::Index k = 0; k < n2; ++k) {
    const Complex z = a.data()[k];
    v[k] = scale * z.real();
    v[n2 + k] = scale * z.imag();
  }
  return v;
}

HermitianOp devectorize(const Eigen::VectorXd& v, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  const Eigen::Index n2 = k * k;
  CMatrix a(k, k);
  const double scale = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n2; ++i) a.data()[i] = scale * Complex(v[i], v[n2 + i]);
  return HermitianOp::from_matrix(a);
}

std::vector<Ket> complete_basis(const Ket& first, std::size_t n, std::optional<std::uint64_t> seed,
                                std::uint64_t stream) {
  const auto k = static_cast<Eigen::Index>(n);
  std::vector<CVector> candidates;
  if (seed) {
    Rng rng = make_rng(*seed, stream);
    for (std::size_t i = 0; i < 2 * n; ++i) candidates.push_back(random_ket(rng, n).amplitudes());
  } else {
    for (Eigen::Index i = 0; i < k; ++i) candidates.push_back(CVector::Unit(k, i));
  }

  std::vector<CVector> basis{first.amplitudes()};
  const auto residual = [&](CVector c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& b : basis) c -= b.dot(c) * b;
    }
    return c;
  };
  while (basis.size() < n) {
    std::size_t best = 0;
    double best_norm = -1.0;
    CVector best_vec;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      CVector r = residual(candidates[i]);
      if (r.norm() > best_norm) {
        best_norm = r.norm();
        best = i;
        best_vec = std::move(r);
      }
    }
    basis.push_back(best_vec / best_norm);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }

  std::vector<Ket> out;
  out.reserve(n);
  out.push_back(first);
  for (std::size_t i = 1; i < n; ++i) out.push_back(Ket::make(basis[i]));
  return out;
}

double trace_zero_norm(const HermitianOp& m) { return std::sqrt(std::max(0.0, scalar_product(m, m))); }

template <typename Visit>
void for_each_valid_pair(const QunitFrame& f, bool all_pairs, Visit&& visit) {
  const std::size_t n = all_pairs ? f.dim : 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex ov = inner(f.basis_psi[j], f.basis_phi[i]);
      visit(i, j, ov, std::abs(ov) > tol::kDist);
    }
  }
}

// Basis of the trace-0 Hermitian space, used only for rank computations.
std::vector<HermitianOp> traceless_basis(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  std::vector<HermitianOp> out;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      CMatrix sym = CMatrix::Zero(k, k);
      sym(i, j) = sym(j, i) = 1.0;
      out.push_back(HermitianOp::from_matrix(sym));
      CMatrix asym = CMatrix::Zero(k, k);
      asym(i, j) = Complex(0.0, -1.0);
      asym(j, i) = Complex(0.0, 1.0);
      out.push_back(HermitianOp::from_matrix(asym));
    }
  }
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    CMatrix d = CMatrix::Zero(k, k);
    d(i, i) = 1.0;
    d(i + 1, i + 1) = -1.0;
    out.push_back(HermitianOp::from_matrix(d));
  }
  return out;
}

std::size_t real_locus_dimension(const QunitFrame& f, bool all_pairs) {
  const std::vector<HermitianOp> basis = traceless_basis(f.dim);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for_each_valid_pair(f, all_pairs, [&](std::size_t i, std::size_t j, Complex, bool ok) {
    if (ok) pairs.emplace_back(i, j);
  });
  Eigen::MatrixXd a(static_cast<Eigen::Index>(pairs.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          weak_value(f.basis_phi[pairs[r].first], f.basis_psi[pairs[r].second], basis[c]).imag();
    }
  }
  if (a.rows() == 0) return basis.size();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = 1e-9 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  const auto rank = static_cast<std::size_t>((sv.array() > cut).count());
  return basis.size() - rank;
}

// Re-evaluation of max |Im W| in extended precision.
long double max_imag_extended(const QunitFrame& f, const HermitianOp& m, bool all_pairs) {
  using LComplex = std::complex<long double>;
  const auto n = static_cast<Eigen::Index>(f.dim);
  long double worst = 0.0L;
  for_each_valid_pair(f, all_pairs, [&](std::size_t i, std::size_t j, Complex, bool ok) {
    if (!ok) return;
    const CVector& phi = f.basis_phi[i].amplitudes();
    const CVector& psi = f.basis_psi[j].amplitudes();
    LComplex num = 0.0L, den = 0.0L;
    for (Eigen::Index r = 0; r < n; ++r) {
      const LComplex bra = std::conj(LComplex(psi[r].real(), psi[r].imag()));
      den += bra * LComplex(phi[r].real(), phi[r].imag());
      LComplex row = 0.0L;
      for (Eigen::Index c = 0; c < n; ++c) {
        const Complex mc = m.matrix()(r, c);
        row += LComplex(mc.real(), mc.imag()) * LComplex(phi[c].real(), phi[c].imag());
      }
      num += bra * row;
    }
    worst = std::max(worst, std::abs((num / den).imag()));
  });
  return worst;
}

}  // namespace

HermitianOp QunitFrame::project_onto_r(const HermitianOp& m) const {
  HermitianOp out = HermitianOp::zero(dim);
  for (const HermitianOp& b : r_basis) out += scalar_product(m, b) * b;
  return out;
}

double QunitFrame::relative_residual(const HermitianOp& m) const {
  const double norm = trace_zero_norm(m);
  if (norm == 0.0) return 0.0;
  return trace_zero_norm(m - project_onto_r(m)) / norm;
}

QunitFrame build_frame(const Ket& phi0, const Ket& psi0, std::size_t n,
                       std::optional<std::uint64_t> completion_seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "qunit dimension must be at least 2");
  if (phi0.dim() != n || psi0.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "states must have dimension " + std::to_string(n));
  }
  const double ov = std::abs(inner(psi0, phi0));
  if (ov <= tol::kDist || ov >= 1.0 - tol::kDist) {
    throw Error(ErrorCode::DegenerateEnsemble, "phi_0 and psi_0 must be distinct and nonorthogonal");
  }

  QunitFrame f;
  f.dim = n;
  f.basis_phi = complete_basis(phi0, n, completion_seed, 0);
  f.basis_psi = complete_basis(psi0, n, completion_seed, 1);

  const HermitianOp centre = (1.0 / static_cast<double>(n)) * HermitianOp::identity(n);
  std::vector<Eigen::VectorXd> ortho;
  const auto add_generator = [&](const Ket& k) {
    Eigen::VectorXd v = vectorize(projector(k) - centre);
    const double scale = v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (const Eigen::VectorXd& b : ortho) v -= b.dot(v) * b;
    }
    if (v.norm() > kGramSchmidtDrop * scale) ortho.push_back(v.normalized());
  };
  for (const Ket& k : f.basis_phi) add_generator(k);
  for (const Ket& k : f.basis_psi) add_generator(k);
  for (const Eigen::VectorXd& v : ortho) f.r_basis.push_back(devectorize(v, n));
  return f;
}

double max_imag_weak(const QunitFrame& f, const HermitianOp& m, bool all_pairs) {
  double worst = 0.0;
  for_each_valid_pair(f, all_pairs, [&](std::size_t i, std::size_t j, Complex ov, bool ok) {
    if (!ok) return;
    const Complex num = f.basis_psi[j].amplitudes().dot(m.matrix() * f.basis_phi[i].amplitudes());
    worst = std::max(worst, std::abs((num / ov).imag()));
  });
  return worst;
}

PropositionResult proposition_check(const QunitFrame& f, const HermitianOp& m, double tol) {
  if (m.dim() != f.dim) throw Error(ErrorCode::DimensionMismatch, "operator dimension does not match frame");
  if (!m.is_trace_zero()) throw Error(ErrorCode::NotTraceZero, "proposition_check expects a trace-0 operator");
  const double residual = f.relative_residual(m);
  if (residual > kInRThreshold) {
    throw Error(ErrorCode::NotInR, "operator is not in R (relative residual " + std::to_string(residual) + ")");
  }
  PropositionResult out;
  for_each_valid_pair(f, true, [&](std::size_t, std::size_t, Complex, bool ok) {
    ok ? ++out.valid_pairs : ++out.skipped_pairs;
  });
  out.max_imag = max_imag_weak(f, m, true);
  out.holds = out.max_imag < tol;
  return out;
}

ScanReport conjecture_scan(const QunitFrame& f, std::size_t trials, std::uint64_t seed, const ScanOptions& options) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "conjecture_scan needs at least one trial");

  ScanReport report;
  report.dim = f.dim;
  report.trials = trials;
  report.seed = seed;
  report.all_pairs = options.all_pairs;
  report.r_rank = f.r_rank();
  for_each_valid_pair(f, options.all_pairs, [&](std::size_t, std::size_t, Complex, bool ok) {
    if (!ok) ++report.skipped_pairs;
  });
  report.real_locus_dim = real_locus_dimension(f, options.all_pairs);
  report.min_max_imag_off_R = std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, t);
    HermitianOp m = random_traceless_hermitian(rng, f.dim);
    double off = f.relative_residual(m);
    for (std::size_t k = 0; off <= options.off_r_threshold && k < kMaxResamples; ++k) {
      m = random_traceless_hermitian(rng, f.dim);
      off = f.relative_residual(m);
    }
    if (off <= options.off_r_threshold) continue;
    m *= 1.0 / trace_zero_norm(m);

    report.max_imag_in_R = std::max(report.max_imag_in_R, max_imag_weak(f, f.project_onto_r(m), options.all_pairs));
    const double worst = max_imag_weak(f, m, options.all_pairs);
    report.min_max_imag_off_R = std::min(report.min_max_imag_off_R, worst);
    if (worst < options.real_threshold &&
        max_imag_extended(f, m, options.all_pairs) < static_cast<long double>(options.real_threshold / 10.0)) {
      report.candidate_counterexamples.push_back(Counterexample{t, m, worst, off});
    }
  }
  return report;
}

}  // namespace weakgeom
