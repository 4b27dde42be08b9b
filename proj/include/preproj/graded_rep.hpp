#pragma once

#include "preproj/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace preproj {

/// A module over the type A_{n-1} preprojective algebra: vector spaces M_1..M_{n-1}
/// with rightward maps (j → j+1) and leftward maps (j → j−1).
///
/// Vertices are 1-based in the public API. The boundary arrows (1 → 0) and
/// (n−1 → n) are zero and not stored; `right(n-1)` and `left(1)` return the
/// corresponding 0-row matrices.
class GradedRep {
 public:
  GradedRep() = default;

  /// Shape-checks and verifies the preprojective relations; throws
  /// invalid-input naming the failing vertex. Use for anything read from
  /// outside the library.
  static GradedRep from_untrusted(std::size_t n, std::vector<std::size_t> dims,
                                  std::vector<RatMatrix> right, std::vector<RatMatrix> left);

  /// Trusted constructor for modules built by this library. Shapes are
  /// always checked; relations are asserted in debug builds.
  static GradedRep make(std::size_t n, std::vector<std::size_t> dims,
                        std::vector<RatMatrix> right, std::vector<RatMatrix> left);

  static GradedRep zero(std::size_t n);
  /// The simple module S_i.
  static GradedRep simple(std::size_t n, std::size_t i);

  std::size_t n() const { return n_; }
  std::size_t vertices() const { return n_ - 1; }
  std::size_t dim(std::size_t j) const { return dims_.at(j - 1); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  /// (j → j+1) : M_j → M_{j+1}; zero 0×dim(j) matrix for j = n−1.
  RatMatrix right(std::size_t j) const;
  /// (j → j−1) : M_j → M_{j−1}; zero 0×dim(1) matrix for j = 1.
  RatMatrix left(std::size_t j) const;

  /// Stored maps, 0-based: rights()[k] is (k+1 → k+2), lefts()[k] is (k+2 → k+1).
  const std::vector<RatMatrix>& rights() const { return right_; }
  const std::vector<RatMatrix>& lefts() const { return left_; }

  friend bool operator==(const GradedRep&, const GradedRep&) = default;

 private:
  GradedRep(std::size_t n, std::vector<std::size_t> dims, std::vector<RatMatrix> right,
            std::vector<RatMatrix> left);

  std::size_t n_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> right_;
  std::vector<RatMatrix> left_;
};

/// First vertex where left_{j+1}·right_j ≠ right_{j−1}·left_j, if any.
std::optional<std::size_t> first_relation_failure(const GradedRep& m);

/// True iff the preprojective relations hold at every vertex. Throws
/// invalid-input on inconsistent map shapes.
bool check_preprojective(const GradedRep& m);

/// Basis of soc_j(M) = ker(j → j+1) ∩ ker(j → j−1), as columns.
RatMatrix socle_basis(const GradedRep& m, std::size_t j);
std::vector<std::size_t> socle_dims(const GradedRep& m);

/// True iff dim soc_j(M) ≤ w_j for every vertex.
bool in_rep_w(const GradedRep& m, const std::vector<std::int64_t>& w);

GradedRep direct_sum(const GradedRep& a, const GradedRep& b);

/// Vertex-wise family φ_j : M_j → N_j.
class Intertwiner {
 public:
  Intertwiner(std::shared_ptr<const GradedRep> source, std::shared_ptr<const GradedRep> target,
              std::vector<RatMatrix> phis);

  const GradedRep& source() const { return *source_; }
  const GradedRep& target() const { return *target_; }
  const std::shared_ptr<const GradedRep>& source_ptr() const { return source_; }
  const std::shared_ptr<const GradedRep>& target_ptr() const { return target_; }
  const std::vector<RatMatrix>& phis() const { return phis_; }
  const RatMatrix& phi(std::size_t j) const { return phis_.at(j - 1); }

  /// Both commutation equations hold at every vertex.
  bool commutes() const;
  /// Every φ_j is invertible.
  bool is_isomorphism() const;
  /// Entries of all φ_j concatenated (vertex order, row-major).
  std::vector<Rational> flatten() const;

 private:
  std::shared_ptr<const GradedRep> source_;
  std::shared_ptr<const GradedRep> target_;
  std::vector<RatMatrix> phis_;
};

/// Linear combination Σ c_k φ^(k) of intertwiners sharing source and target.
Intertwiner combine(const std::vector<Intertwiner>& basis, const std::vector<Rational>& coeffs);

/// Matrix whose columns are the flattened intertwiners; its rank is the
/// dimension of their span.
RatMatrix span_matrix(const std::vector<Intertwiner>& maps);

/// Basis of Hom(M, N), read off the kernel of the stacked intertwiner equations.
std::vector<Intertwiner> hom_space_basis(const GradedRep& m, const GradedRep& n);
std::size_t hom_dim(const GradedRep& m, const GradedRep& n);

/// The module P·M with each M_j transported along the invertible P_j.
GradedRep conjugate(const GradedRep& m, const std::vector<RatMatrix>& conjugators);

/// Conjugators L_j·U_j, unit lower/upper triangular with entries in [−3, 3]
/// drawn from a generator seeded with `seed`.
std::vector<RatMatrix> random_conjugators(const GradedRep& m, std::uint64_t seed);

GradedRep random_basis_change(const GradedRep& m, std::uint64_t seed);

}  // namespace preproj
