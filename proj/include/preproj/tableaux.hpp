#pragma once

#include "preproj/graded_rep.hpp"
#include "preproj/lattice.hpp"
#include "preproj/maya.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace preproj {

/// A box X of a tableau: its row r(X) and its entry c(X), both 1-based.
struct Box {
  std::size_t row;
  std::size_t content;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Semistandard Young tableau with entries in 1..n.
class Tableau {
 public:
  Tableau() = default;
  /// Throws invalid-input unless rows weakly increase, columns strictly
  /// increase, and entries lie in 1..n. Trailing zero rows of the shape are
  /// dropped.
  Tableau(std::size_t n, std::vector<std::vector<std::size_t>> rows);

  std::size_t n() const { return n_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return rows_; }
  std::vector<std::size_t> shape() const;
  /// Boxes in row-major order; box indices elsewhere refer to this order.
  const std::vector<Box>& boxes() const { return boxes_; }
  /// Multiplicity of each entry 1..n.
  std::vector<std::int64_t> content() const;
  std::string to_string() const;  ///< e.g. "[[1,2],[3]]"

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<Box> boxes_;
};

/// Scalars e(P, Q) keyed by box indices, one per admissible pair.
using BoxScalars = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Box-index pairs (P, Q) with r(P) < r(Q) ≤ c(P) < c(Q), sorted.
std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(const Tableau& t);

/// All SSYT of the given shape and content, ordered lexicographically by
/// row-reading word. Negative content or a size mismatch gives no tableaux.
std::vector<Tableau> ssyt_enumerate(const std::vector<std::size_t>& shape,
                                    const std::vector<std::int64_t>& content);

/// #{ boxes X : r(X) ≤ i < c(X) ≤ t } for the interval A = {t−i+1..t}.
std::size_t g_count(const Tableau& t, const SubsetI& a);

using Signature = std::vector<std::pair<SubsetI, std::size_t>>;

/// g_count over the admissible connected subsets, in connected_subsets order.
Signature signature(const Tableau& t);

/// Module of type T. Each box X contributes w^X_{r(X)}, …, w^X_{c(X)−1};
/// left maps step down inside a box, right maps send w^X_j to
/// Σ_Q e(X,Q) w^Q_{j+1} over the admissible pairs (X, Q).
GradedRep type_t_module(const Tableau& t, const BoxScalars& scalars);

BoxScalars generic_scalars(const Tableau& t, std::uint64_t seed);
BoxScalars constant_scalars(const Tableau& t, const Rational& value);

/// dim Hom(M, N(A)) for a connected admissible A.
std::size_t f_value(const GradedRep& m, const MayaSubset& a);

/// f_value over the admissible connected subsets.
Signature f_signature(const GradedRep& m);

struct Classification {
  Tableau tableau;
  Signature signature;
  /// dim End(M) and its value on a generic module of the matched type; a
  /// larger End(M) marks M as a degenerate point of the component.
  std::size_t end_dim = 0;
  std::size_t generic_end_dim = 0;
  bool degenerate() const { return end_dim > generic_end_dim; }
};

/// Finds the unique T in Tab(shape, content) whose g-signature equals the
/// f-signature of M. Throws unclassifiable when nothing matches (the message
/// carries the f-signature) and internal when several tableaux match.
Classification classify(const GradedRep& m, const std::vector<std::size_t>& shape,
                        const std::vector<std::int64_t>& content, std::uint64_t seed = 0);

/// Partitions of `size` with at most `max_parts` parts, padded to length `max_parts`.
std::vector<std::vector<std::size_t>> partitions(std::size_t size, std::size_t max_parts);

/// Nonnegative integer vectors of length `len` summing to `total`.
std::vector<std::vector<std::int64_t>> compositions(std::size_t total, std::size_t len);

}  // namespace preproj
