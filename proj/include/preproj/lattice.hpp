#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace preproj {

/// Element of the type A_{n-1} root lattice: an integer n-tuple summing to 0.
class RootVector {
 public:
  RootVector() = default;
  /// Throws invalid-input unless coords.size() >= 2 and the coordinates sum to 0.
  explicit RootVector(std::vector<std::int64_t> coords);

  static RootVector zero(std::size_t n) { return RootVector(std::vector<std::int64_t>(n, 0)); }
  /// α_i = e_i − e_{i+1}, 1 ≤ i ≤ n−1.
  static RootVector simple_root(std::size_t n, std::size_t i);
  /// Σ v_j α_j for a dimension vector v of length n−1.
  static RootVector from_dims(const std::vector<std::int64_t>& v);

  std::size_t n() const { return coords_.size(); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }

  /// Coefficients c_j with this = Σ c_j α_j (prefix sums); length n−1.
  std::vector<std::int64_t> simple_coefficients() const;
  /// Membership in Q_+: every prefix sum nonnegative.
  bool is_nonnegative() const;

  friend RootVector operator+(const RootVector& a, const RootVector& b);
  friend RootVector operator-(const RootVector& a, const RootVector& b);
  friend bool operator==(const RootVector&, const RootVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Strictly increasing subset of {1, …, n}.
class SubsetI {
 public:
  SubsetI() = default;
  /// Throws invalid-input unless elements are strictly increasing within 1..n.
  SubsetI(std::size_t n, std::vector<int> elements);

  static SubsetI initial(std::size_t n, std::size_t i);  ///< {1, …, i}
  /// Inverse of the indicator map; throws unless `indicator` is 0/1-valued.
  static SubsetI from_indicator(const std::vector<std::int64_t>& indicator);
  /// Parses "3,6,7"; the empty string is the empty set.
  static SubsetI parse(std::size_t n, const std::string& text);

  std::size_t n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<int>& elements() const { return elems_; }
  /// 1-based access a_k, 1 ≤ k ≤ size().
  int at(std::size_t k) const { return elems_.at(k - 1); }
  bool contains(int x) const;
  bool is_initial() const;  ///< equals {1, …, |A|}
  std::vector<std::int64_t> indicator() const;
  std::string to_string() const;

  friend bool operator==(const SubsetI&, const SubsetI&) = default;
  friend auto operator<=>(const SubsetI&, const SubsetI&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> elems_;
};

struct WeightData {
  std::size_t n = 0;
  std::vector<std::int64_t> w;       ///< length n−1
  std::vector<std::int64_t> lambda;  ///< length n, weakly decreasing
  std::vector<std::int64_t> mu;      ///< length n
};

/// A − B := 1_A − 1_B.
RootVector subset_diff(const SubsetI& a, const SubsetI& b);

/// c ≤ b in the dominance order, i.e. 1_B − 1_C ∈ Q_+.
bool dominance_leq(const SubsetI& c, const SubsetI& b);

/// The subset A with Σ v_j α_j = 1_{1..i} − 1_A. Throws invalid-input when
/// `v` violates the one-dimensional-socle dimension conditions at `i`.
SubsetI subset_from_dims(const std::vector<std::int64_t>& v, std::size_t i);

/// Intervals {t−i+1, …, t}, ordered by size then by right endpoint. With
/// `admissible_only`, keeps the ones with t > i and i < n.
std::vector<SubsetI> connected_subsets(std::size_t n, bool admissible_only);

bool is_connected(const SubsetI& a);

WeightData weights_from(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& v);

/// Number of multisets of positive roots summing to `alpha` (0 off Q_+).
std::uint64_t kostant_partition(const RootVector& alpha);

/// dim V(λ)_μ via the alternating Weyl-group sum of Kostant partition values.
std::uint64_t weight_multiplicity(const std::vector<std::int64_t>& lambda,
                                  const std::vector<std::int64_t>& mu);

/// All subsets of {1..n} of the given size, lexicographic.
std::vector<SubsetI> subsets_of_size(std::size_t n, std::size_t size);

/// Proper subsets A of size 1..n−1 with A ≠ {1, …, |A|}.
std::vector<SubsetI> admissible_subsets(std::size_t n);

/// Parses comma-separated integers ("1,-2,3"); empty text gives an empty list.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace preproj
