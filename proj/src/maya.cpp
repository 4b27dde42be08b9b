#include "preproj/maya.hpp"

#include "preproj/error.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace preproj {

MayaSubset::MayaSubset(SubsetI a) : a_(std::move(a)) {
  if (!admissible(a_))
    fail(ErrorKind::invalid_input,
         "{" + a_.to_string() + "} is not a proper subset other than {1..i}");
}

bool MayaSubset::admissible(const SubsetI& a) {
  return a.size() >= 1 && a.size() < a.n() && !a.is_initial();
}

std::vector<MayaSubset> all_maya_subsets(std::size_t n) {
  std::vector<MayaSubset> out;
  for (auto& s : admissible_subsets(n)) out.emplace_back(std::move(s));
  return out;
}

std::vector<std::int64_t> maya_dims(const MayaSubset& a) {
  std::vector<std::int64_t> v(a.n() - 1, 0);
  for (std::size_t r = 1; r <= a.size(); ++r)
    for (std::size_t j = r; j < static_cast<std::size_t>(a.at(r)); ++j) ++v[j - 1];
  return v;
}

long maya_basis_index(const MayaSubset& a, std::size_t j, std::size_t k) {
  if (k < 1 || k > a.size() || j < k || j >= static_cast<std::size_t>(a.at(k))) return -1;
  long idx = 0;
  for (std::size_t r = 1; r < k; ++r)
    if (r <= j && j < static_cast<std::size_t>(a.at(r))) ++idx;
  return idx;
}

GradedRep maya_module(const MayaSubset& a) {
  const std::size_t n = a.n();
  const std::size_t i = a.size();
  const auto v = maya_dims(a);
  std::vector<std::size_t> dims(v.begin(), v.end());

  std::vector<RatMatrix> right, left;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    RatMatrix r(dims[j], dims[j - 1]);  // (j → j+1)
    RatMatrix l(dims[j - 1], dims[j]);  // (j+1 → j)
    for (std::size_t k = 1; k <= i; ++k) {
      // w_{j,k} ↦ w_{j+1,k+1}
      long src = maya_basis_index(a, j, k);
      long dst = maya_basis_index(a, j + 1, k + 1);
      if (src >= 0 && dst >= 0) r(dst, src) = 1;
      // w_{j+1,k} ↦ w_{j,k}
      src = maya_basis_index(a, j + 1, k);
      dst = maya_basis_index(a, j, k);
      if (src >= 0 && dst >= 0) l(dst, src) = 1;
    }
    right.push_back(std::move(r));
    left.push_back(std::move(l));
  }
  return GradedRep::make(n, std::move(dims), std::move(right), std::move(left));
}

bool socle_dim_conditions(const std::vector<std::int64_t>& v, std::size_t i) {
  const std::size_t n = v.size() + 1;
  if (i < 1 || i >= n) return false;
  auto dim = [&](std::size_t j) -> std::int64_t { return (j == 0 || j == n) ? 0 : v[j - 1]; };
  for (std::size_t j = 0; j < i; ++j)
    if (dim(j) != dim(j + 1) && dim(j) + 1 != dim(j + 1)) return false;
  for (std::size_t j = i + 1; j <= n; ++j)
    if (dim(j - 1) != dim(j) && dim(j - 1) != dim(j) + 1) return false;
  return true;
}

MayaIdentification identify_maya(const GradedRep& m, std::uint64_t seed) {
  const auto soc = socle_dims(m);
  std::size_t total = 0, vertex = 0;
  for (std::size_t j = 1; j <= soc.size(); ++j) {
    total += soc[j - 1];
    if (soc[j - 1] > 0) vertex = j;
  }
  if (total != 1)
    fail(ErrorKind::not_applicable,
         "socle has dimension " + std::to_string(total) + ", expected exactly 1");

  std::vector<std::int64_t> v(m.dims().begin(), m.dims().end());
  if (!socle_dim_conditions(v, vertex))
    fail(ErrorKind::inconsistent_input,
         "dimension vector cannot carry a socle S_" + std::to_string(vertex));
  const MayaSubset a(subset_from_dims(v, vertex));
  const GradedRep target = maya_module(a);

  const auto basis = hom_space_basis(m, target);
  for (const auto& phi : basis)
    if (phi.is_isomorphism()) return {a, phi};

  if (!basis.empty()) {
    std::mt19937_64 gen(seed);
    constexpr int kAttempts = 20;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      std::vector<Rational> coeffs;
      for (std::size_t k = 0; k < basis.size(); ++k)
        coeffs.emplace_back(static_cast<long>(gen() % 1000000) + 1);
      Intertwiner phi = combine(basis, coeffs);
      if (phi.is_isomorphism()) return {a, std::move(phi)};
    }
  }
  fail(ErrorKind::theorem_violation,
       "module with socle S_" + std::to_string(vertex) + " and dimension vector of N({" +
           a.subset().to_string() + "}) admits no isomorphism to it in " +
           std::to_string(basis.size()) + "-dimensional Hom space");
}

namespace {

void require_same_n(const SubsetI& a, const SubsetI& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "subsets live in different {1..n}");
}

}  // namespace

std::vector<std::size_t> hom_formula_rows(const MayaSubset& a, const MayaSubset& b) {
  require_same_n(a.subset(), b.subset());
  const std::size_t i = a.size();
  const std::size_t j = b.size();
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r <= i; ++r) {
    if (r > j || static_cast<int>(j) >= a.at(r)) continue;
    bool ok = true;
    for (std::size_t l = 0; l < r && ok; ++l) ok = a.at(r - l) <= b.at(j - l);
    if (ok) rows.push_back(r);
  }
  return rows;
}

std::size_t hom_formula(const MayaSubset& a, const MayaSubset& b) {
  return hom_formula_rows(a, b).size();
}

std::vector<Intertwiner> hom_basis_maya(const MayaSubset& a, const MayaSubset& b) {
  const auto rows = hom_formula_rows(a, b);
  auto src = std::make_shared<const GradedRep>(maya_module(a));
  auto dst = std::make_shared<const GradedRep>(maya_module(b));
  const std::size_t j = b.size();

  std::vector<Intertwiner> out;
  for (std::size_t r : rows) {
    std::vector<RatMatrix> phis;
    for (std::size_t k = 1; k <= src->vertices(); ++k) {
      RatMatrix p(dst->dim(k), src->dim(k));
      for (std::size_t l = 0; l < r; ++l) {
        // w_{k, r−l} ↦ w'_{k, j−l} when k ≥ j−l
        if (k < j - l) continue;
        const long from = maya_basis_index(a, k, r - l);
        const long to = maya_basis_index(b, k, j - l);
        if (from >= 0 && to >= 0) p(to, from) = 1;
      }
      phis.push_back(std::move(p));
    }
    out.emplace_back(src, dst, std::move(phis));
  }
  return out;
}

bool below_in_polytope_order(const SubsetI& c, const SubsetI& b) {
  // c_k ≤ b_k for every k, i.e. B ≤ C in the dominance order
  return dominance_leq(b, c);
}

TruncPermutahedron polytope_vertices(const SubsetI& b) {
  const auto base = SubsetI::initial(b.n(), b.size()).indicator();
  TruncPermutahedron poly{b, {}};
  for (const auto& c : subsets_of_size(b.n(), b.size())) {
    if (!below_in_polytope_order(c, b)) continue;
    auto p = c.indicator();
    for (std::size_t k = 0; k < p.size(); ++k) p[k] -= base[k];
    poly.points.emplace_back(std::move(p));
  }
  return poly;
}

std::int64_t polytope_max(const SubsetI& a, const SubsetI& b) {
  require_same_n(a, b);
  const auto ind = a.indicator();
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& p : polytope_vertices(b).points) {
    std::int64_t dot = 0;
    for (std::size_t k = 0; k < ind.size(); ++k) dot += ind[k] * p[k];
    best = std::max(best, dot);
  }
  return best;
}

std::size_t max_intersection(const SubsetI& a, const SubsetI& b) {
  require_same_n(a, b);
  std::size_t best = 0;
  for (const auto& c : subsets_of_size(b.n(), b.size())) {
    if (!below_in_polytope_order(c, b)) continue;
    std::size_t common = 0;
    for (int x : c.elements()) common += a.contains(x) ? 1 : 0;
    best = std::max(best, common);
  }
  return best;
}

}  // namespace preproj
