// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tsop {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) {
    word = splitmix64(s);
  }
}

std::uint64_t RandomStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RandomStream::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

int RandomStream::index(int n) {
  return static_cast<int>(uniform() * n) % n;
}

SeededGenerator::SeededGenerator(std::uint64_t master_seed)
    : state_(master_seed) {}

SeededGenerator SeededGenerator::derive(long case_index) const {
  std::uint64_t s = state_ ^ (0x5851f42d4c957f2dULL +
                              static_cast<std::uint64_t>(case_index));
  SeededGenerator child(splitmix64(s));
  return child;
}

SeededGenerator SeededGenerator::derive(std::string_view purpose_tag) const {
  std::uint64_t s = state_ ^ fnv1a(purpose_tag);
  SeededGenerator child(splitmix64(s));
  return child;
}

RandomStream SeededGenerator::stream() const { return RandomStream(state_); }

UnitalPositiveMap UnitalPositiveMap::pinching(std::vector<int> block_sizes) {
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw GenerationError("pinching block sizes must be positive");
    total += b;
  }
  UnitalPositiveMap phi;
  phi.variant_ = Pinching{std::move(block_sizes)};
  phi.dim_ = total;
  return phi;
}

UnitalPositiveMap UnitalPositiveMap::unitary_mixture(
    std::vector<double> weights, std::vector<ComplexMatrix> unitaries) {
  if (weights.empty() || weights.size() != unitaries.size()) {
    throw GenerationError("unitary mixture needs matching weights and unitaries");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw GenerationError("unitary mixture weights must sum to 1");
  }
  const int d = static_cast<int>(unitaries.front().rows());
  for (const ComplexMatrix& u : unitaries) {
    if (u.rows() != d || u.cols() != d) {
      throw GenerationError("unitary mixture dimension mismatch");
    }
    const double defect =
        (u.adjoint() * u - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
      throw GenerationError("unitary mixture member is not unitary");
    }
  }
  UnitalPositiveMap phi;
  phi.variant_ = UnitaryMixture{std::move(weights), std::move(unitaries)};
  phi.dim_ = d;
  return phi;
}

HermitianMatrix apply_map(const UnitalPositiveMap& phi,
                          const HermitianMatrix& m) {
  if (phi.dim() != m.dim()) {
    throw DimensionError("dimension mismatch in apply_map");
  }
  if (phi.is_pinching()) {
    ComplexMatrix out = ComplexMatrix::Zero(m.dim(), m.dim());
    int offset = 0;
    for (int b : phi.as_pinching().block_sizes) {
      out.block(offset, offset, b, b) = m.raw().block(offset, offset, b, b);
      offset += b;
    }
    return HermitianMatrix(out);
  }
  const auto& mix = phi.as_mixture();
  ComplexMatrix out = ComplexMatrix::Zero(m.dim(), m.dim());
  for (std::size_t i = 0; i < mix.weights.size(); ++i) {
    out += mix.weights[i] * (mix.unitaries[i] * m.raw() * mix.unitaries[i].adjoint());
  }
  return HermitianMatrix::symmetrized(out);
}

namespace {

ComplexMatrix haar_unitary(RandomStream& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    const Complex phase = mag > 0 ? rii / mag : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

void check_dim(int dim) {
  if (dim < 1 || dim > 16) {
    std::ostringstream msg;
    msg << "ensemble dimension " << dim << " outside [1, 16]";
    throw GenerationError(msg.str());
  }
}

HermitianMatrix assemble(const ComplexMatrix& basis, const RealVector& spectrum) {
  return HermitianMatrix::symmetrized(basis * spectrum.asDiagonal() *
                                      basis.adjoint());
}

}  // namespace

HermitianMatrix random_pd(const SeededGenerator& gen, int dim,
                          double cond_target) {
  check_dim(dim);
  if (cond_target < 1.0) {
    throw GenerationError("cond_target must be >= 1");
  }
  RandomStream rng = gen.stream();
  ComplexMatrix basis = haar_unitary(rng, dim);
  RealVector spectrum(dim);
  // Pin the spectrum ends so the condition number lands on target; the
  // interior is log-uniform in between.
  spectrum(0) = 1.0;
  if (dim > 1) {
    spectrum(dim - 1) = cond_target;
    for (int i = 1; i < dim - 1; ++i) {
      spectrum(i) = rng.log_uniform(1.0, cond_target);
    }
  }
  const double scale = rng.log_uniform(0.25, 4.0);
  spectrum *= scale;
  HermitianMatrix out = assemble(basis, spectrum);
  PositivityClass cls = classify(out);
  if (!cls.positive_definite()) {
    throw GenerationError("random_pd post-check failed: not positive definite");
  }
  return out;
}

HermitianMatrix random_psd(const SeededGenerator& gen, int dim,
                           double norm_scale) {
  check_dim(dim);
  RandomStream rng = gen.stream();
  if (norm_scale == 0.0) {
    return HermitianMatrix::zero(dim);
  }
  ComplexMatrix basis = haar_unitary(rng, dim);
  RealVector spectrum(dim);
  spectrum(0) = norm_scale;  // pin the norm
  for (int i = 1; i < dim; ++i) {
    spectrum(i) = norm_scale * rng.uniform();
  }
  HermitianMatrix out = assemble(basis, spectrum);
  if (classify(out).min_eig < -1e-12 * norm_scale) {
    throw GenerationError("random_psd post-check failed");
  }
  return out;
}

std::pair<HermitianMatrix, HermitianMatrix> random_ordered_pair(
    const SeededGenerator& gen, int dim, double gap) {
  if (gap < 0.0) throw GenerationError("ordered pair gap must be >= 0");
  SeededGenerator ga = gen.derive("ordered.base");
  SeededGenerator gp = gen.derive("ordered.bump");
  HermitianMatrix a = random_pd(ga, dim, gen.stream().uniform() < 0.5 ? 10.0 : 1e3);
  const double bump_scale =
      gen.derive("ordered.scale").stream().uniform(0.0, operator_norm(a));
  HermitianMatrix p = random_psd(gp, dim, bump_scale);
  HermitianMatrix b = HermitianMatrix(
      a.raw() + gap * ComplexMatrix::Identity(dim, dim) + p.raw());
  LoewnerVerdict check = loewner_leq(a, b);
  if (!check.holds || check.witness_min_eig < gap - 1e-9 * operator_norm(b)) {
    throw GenerationError("random_ordered_pair post-check failed");
  }
  return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> random_commuting_pair(
    const SeededGenerator& gen, int dim) {
  check_dim(dim);
  RandomStream rng = gen.stream();
  ComplexMatrix basis = haar_unitary(rng, dim);
  RealVector wa(dim), wb(dim);
  for (int i = 0; i < dim; ++i) {
    wa(i) = rng.log_uniform(0.1, 10.0);
    wb(i) = rng.log_uniform(0.1, 10.0);
  }
  HermitianMatrix a = assemble(basis, wa);
  HermitianMatrix b = assemble(basis, wb);
  const double comm =
      (a.raw() * b.raw() - b.raw() * a.raw()).cwiseAbs().maxCoeff();
  if (comm > 1e-10 * operator_norm(a) * operator_norm(b)) {
    throw GenerationError("random_commuting_pair post-check failed");
  }
  return {a, b};
}

DensityMatrix random_density(const SeededGenerator& gen, int dim,
                             double min_eig) {
  check_dim(dim);
  if (!(min_eig > 0.0) || !(min_eig < 1.0 / dim)) {
    throw GenerationError("random_density requires min_eig in (0, 1/dim)");
  }
  RandomStream rng = gen.stream();
  ComplexMatrix basis = haar_unitary(rng, dim);
  // Uniform simplex point via normalized exponentials, then pushed off the
  // boundary so the spectrum stays >= min_eig.
  RealVector spectrum(dim);
  double total = 0.0;
  for (int i = 0; i < dim; ++i) {
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    spectrum(i) = -std::log(u);
    total += spectrum(i);
  }
  const double slack = 1.0 - dim * min_eig;
  for (int i = 0; i < dim; ++i) {
    spectrum(i) = min_eig + slack * spectrum(i) / total;
  }
  // Exact unit trace, fixing up round-off on the largest entry.
  Eigen::Index argmax = 0;
  spectrum.maxCoeff(&argmax);
  spectrum(argmax) += 1.0 - spectrum.sum();
  DensityMatrix rho{assemble(basis, spectrum)};
  if (classify(rho.matrix()).min_eig < min_eig * (1.0 - 1e-9)) {
    throw GenerationError("random_density post-check failed: spectrum too small");
  }
  return rho;
}

ComplexMatrix random_unitary(const SeededGenerator& gen, int dim) {
  check_dim(dim);
  RandomStream rng = gen.stream();
  ComplexMatrix u = haar_unitary(rng, dim);
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw GenerationError("random_unitary post-check failed");
  }
  return u;
}

UnitalPositiveMap random_unital_map(const SeededGenerator& gen, int dim) {
  check_dim(dim);
  RandomStream rng = gen.stream();
  if (dim >= 2 && rng.uniform() < 0.5) {
    const int first = 1 + rng.index(dim - 1);
    return UnitalPositiveMap::pinching({first, dim - first});
  }
  const double w = rng.uniform(0.1, 0.9);
  std::vector<ComplexMatrix> unitaries;
  unitaries.push_back(haar_unitary(rng, dim));
  unitaries.push_back(haar_unitary(rng, dim));
  return UnitalPositiveMap::unitary_mixture({w, 1.0 - w}, std::move(unitaries));
}

}  // namespace tsop
