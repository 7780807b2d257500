// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tsop/entropy.hpp"
#include "tsop/matrix.hpp"

namespace tsop {

/// Deterministic random stream (xoshiro256++ seeded via splitmix64). The
/// standard-library distributions are implementation-defined, so everything
/// down to the normal variates is produced here to keep reports reproducible
/// bit for bit.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform();
  double uniform(double lo, double hi);
  /// exp(uniform(log lo, log hi)).
  double log_uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Standard complex normal (independent N(0,1/sqrt 2) parts scaled to unit
  /// variance overall is not needed here; both parts are N(0,1)).
  Complex complex_normal();
  /// Uniform index in [0, n).
  int index(int n);

private:
  std::uint64_t state_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Value-semantic seed tree. Identical (master seed, derivation path) yields
/// an identical stream regardless of evaluation order, so any failing case
/// can be replayed in isolation.
class SeededGenerator {
public:
  explicit SeededGenerator(std::uint64_t master_seed);

  SeededGenerator derive(long case_index) const;
  SeededGenerator derive(std::string_view purpose_tag) const;
  RandomStream stream() const;
  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

/// Unital positive linear map: either a pinching onto diagonal blocks or a
/// convex mixture of unitary conjugations.
class UnitalPositiveMap {
public:
  struct Pinching {
    std::vector<int> block_sizes;
  };
  struct UnitaryMixture {
    std::vector<double> weights;
    std::vector<ComplexMatrix> unitaries;
  };

  static UnitalPositiveMap pinching(std::vector<int> block_sizes);
  static UnitalPositiveMap unitary_mixture(std::vector<double> weights,
                                           std::vector<ComplexMatrix> unitaries);

  int dim() const { return dim_; }
  bool is_pinching() const {
    return std::holds_alternative<Pinching>(variant_);
  }
  const Pinching& as_pinching() const { return std::get<Pinching>(variant_); }
  const UnitaryMixture& as_mixture() const {
    return std::get<UnitaryMixture>(variant_);
  }

private:
  UnitalPositiveMap() = default;
  std::variant<Pinching, UnitaryMixture> variant_;
  int dim_ = 0;
};

HermitianMatrix apply_map(const UnitalPositiveMap& phi,
                          const HermitianMatrix& m);

/// Positive-definite matrix with condition number within a factor 2 of
/// cond_target: Haar eigenbasis, log-uniform spectrum pinned at the ends,
/// and a random overall scale.
HermitianMatrix random_pd(const SeededGenerator& gen, int dim,
                          double cond_target);

/// Random positive-semidefinite matrix with operator norm about norm_scale.
HermitianMatrix random_psd(const SeededGenerator& gen, int dim,
                           double norm_scale);

/// Pair (A, B) with A <= B guaranteed by construction: B = A + gap I + P
/// for a random PSD P.
std::pair<HermitianMatrix, HermitianMatrix> random_ordered_pair(
    const SeededGenerator& gen, int dim, double gap);

/// Commuting positive-definite pair sharing a Haar eigenbasis.
std::pair<HermitianMatrix, HermitianMatrix> random_commuting_pair(
    const SeededGenerator& gen, int dim);

/// Invertible density matrix with spectrum sampled from the simplex interior,
/// every eigenvalue at least min_eig.
DensityMatrix random_density(const SeededGenerator& gen, int dim,
                             double min_eig);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with phase
/// normalization. Not Hermitian in general.
ComplexMatrix random_unitary(const SeededGenerator& gen, int dim);

/// Random unital positive map: a pinching or a two-component unitary mixture.
UnitalPositiveMap random_unital_map(const SeededGenerator& gen, int dim);

}  // namespace tsop
