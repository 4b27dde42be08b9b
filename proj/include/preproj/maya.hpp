#pragma once

#include "preproj/graded_rep.hpp"
#include "preproj/lattice.hpp"

#include <cstdint>
#include <vector>

namespace preproj {

/// A proper subset A = {a_1 < … < a_i} of {1..n} with A ≠ {1..i}; these
/// index the modules with one-dimensional socle.
class MayaSubset {
 public:
  /// Throws invalid-input for the empty set, the full set, or {1..i}.
  explicit MayaSubset(SubsetI a);
  MayaSubset(std::size_t n, std::vector<int> elements) : MayaSubset(SubsetI(n, std::move(elements))) {}

  static bool admissible(const SubsetI& a);

  const SubsetI& subset() const { return a_; }
  std::size_t n() const { return a_.n(); }
  std::size_t size() const { return a_.size(); }
  int at(std::size_t k) const { return a_.at(k); }

  friend bool operator==(const MayaSubset&, const MayaSubset&) = default;

 private:
  SubsetI a_;
};

std::vector<MayaSubset> all_maya_subsets(std::size_t n);

/// dim N(A)_j = #{ r ≤ i : r ≤ j < a_r }, for j = 1..n−1.
std::vector<std::int64_t> maya_dims(const MayaSubset& a);

/// Position of w_{j,k} inside N(A)_j (rows sorted by k), or -1 if absent.
long maya_basis_index(const MayaSubset& a, std::size_t j, std::size_t k);

/// N(A): row k spans columns k..a_k−1; left maps step along a row,
/// right maps step diagonally to the next row.
GradedRep maya_module(const MayaSubset& a);

/// Dimension conditions for a module with socle S_i, with v_0 = v_n = 0.
bool socle_dim_conditions(const std::vector<std::int64_t>& v, std::size_t i);

struct MayaIdentification {
  MayaSubset subset;
  Intertwiner iso;  ///< M → N(A), every component invertible
};

/// Recognises a module with one-dimensional socle as N(A) and certifies the
/// isomorphism. Errors: not-applicable (socle not 1-dimensional),
/// inconsistent-input (dimension conditions fail), theorem-violation (no
/// invertible homomorphism found by the bounded search).
MayaIdentification identify_maya(const GradedRep& m, std::uint64_t seed = 0);

/// Number of r ≤ i with r ≤ j < a_r and a_{r−l} ≤ b_{j−l} for l = 0..r−1.
std::size_t hom_formula(const MayaSubset& a, const MayaSubset& b);
/// The qualifying r values in increasing order.
std::vector<std::size_t> hom_formula_rows(const MayaSubset& a, const MayaSubset& b);

/// φ_r for each qualifying r: row r−l of N(A) goes to row j−l of N(B),
/// truncated to columns ≥ j−l.
std::vector<Intertwiner> hom_basis_maya(const MayaSubset& a, const MayaSubset& b);

/// The order used to truncate the permutahedron: c_k ≤ b_k for all k.
/// This is dominance_leq(b, c); with the opposite orientation the maximum of
/// ⟨1_A, ·⟩ over P(B) no longer equals dim Hom(N(A), N(B)), and P({1..j})
/// would be the whole permutahedron rather than a point.
bool below_in_polytope_order(const SubsetI& c, const SubsetI& b);

struct TruncPermutahedron {
  SubsetI b;
  std::vector<RootVector> points;  ///< 1_C − 1_{1..j} for each C below B
};

/// Generating points of P(B), one per C below B in lexicographic order of C.
TruncPermutahedron polytope_vertices(const SubsetI& b);

/// max of p ↦ ⟨1_A, p⟩ over P(B), evaluated on the generating points.
std::int64_t polytope_max(const SubsetI& a, const SubsetI& b);

/// max over C below B with |C| = |B| of |C ∩ A|.
std::size_t max_intersection(const SubsetI& a, const SubsetI& b);

}  // namespace preproj
