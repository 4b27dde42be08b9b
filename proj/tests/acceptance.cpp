// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is nonzero if any criterion fails.

#include "oracles.hpp"

#include "preproj/error.hpp"
#include "preproj/lattice.hpp"
#include "preproj/maya.hpp"
#include "preproj/tableaux.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace preproj;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.first_failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d (%s): %zu checks, %.4f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", id, name,
              out.checked, secs, limit_seconds, out.ok ? "" : " -- ", out.ok ? "" : out.first_failure.c_str());
  if (out.ok && !in_time) std::printf("     over the time limit\n");
  std::fflush(stdout);
}

std::string show(const SubsetI& s) { return "{" + s.to_string() + "}"; }

// Bitmask form of a subset of {1..n}: bit k-1 for element k.
unsigned mask_of(const SubsetI& s) {
  unsigned m = 0;
  for (int x : s.elements()) m |= 1u << (x - 1);
  return m;
}

// max over C with |C| = |B| and c_k <= b_k of |A ∩ C| − |A ∩ {1..|B|}|,
// straight from bitmasks.
std::int64_t polytope_oracle(const SubsetI& a, const SubsetI& b) {
  const std::size_t n = b.n(), j = b.size();
  const unsigned am = mask_of(a), init = (1u << j) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (unsigned c = 0; c < (1u << n); ++c) {
    if (static_cast<std::size_t>(std::popcount(c)) != j) continue;
    bool below = true;
    std::size_t k = 0;
    for (int x = 1; x <= static_cast<int>(n); ++x)
      if (c & (1u << (x - 1))) {
        if (x > b.elements()[k]) below = false;
        ++k;
      }
    if (!below) continue;
    best = std::max<std::int64_t>(best, std::popcount(am & c) - std::popcount(am & init));
  }
  return best;
}

template <class F>
void for_each_ssyt(std::size_t max_n, std::size_t max_size, F&& f) {
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t size = 1; size <= max_size; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n)) f(n, shape, content, ssyt_enumerate(shape, content));
}

}  // namespace

int main() {
  criterion(1, "maya construction", 0.001, [](Outcome& out) {
    const MayaSubset a(7, {3, 6, 7});
    out.expect(maya_dims(a) == std::vector<std::int64_t>{1, 2, 2, 2, 2, 1}, "maya_dims");
    out.expect(socle_dims(maya_module(a)) == std::vector<std::size_t>{0, 0, 1, 0, 0, 0}, "socle_dims");
  });

  criterion(2, "hom formula vs oracle", 60, [](Outcome& out) {
    for (std::size_t n = 3; n <= 6; ++n) {
      const auto subsets = all_maya_subsets(n);
      std::vector<GradedRep> modules;
      for (const auto& a : subsets) modules.push_back(maya_module(a));
      for (std::size_t x = 0; x < subsets.size(); ++x)
        for (std::size_t y = 0; y < subsets.size(); ++y) {
          const auto& a = subsets[x];
          const auto& b = subsets[y];
          const std::string tag = "n=" + std::to_string(n) + " A=" + show(a.subset()) + " B=" + show(b.subset());
          const auto oracle = hom_space_basis(modules[x], modules[y]);
          out.expect(hom_formula(a, b) == oracle.size(), tag + " dim");
          const auto basis = hom_basis_maya(a, b);
          out.expect(basis.size() == oracle.size(), tag + " basis size");
          if (oracle.empty() || basis.size() != oracle.size()) continue;
          bool maps_ok = true;
          for (const auto& phi : basis) maps_ok = maps_ok && phi.commutes();
          out.expect(maps_ok, tag + " basis commutes");
          const auto mine = span_matrix(basis);
          out.expect(rank(mine) == oracle.size() && rank(hconcat(mine, span_matrix(oracle))) == oracle.size(),
                     tag + " span");
        }
    }
  });

  criterion(3, "polytope identity", 30, [](Outcome& out) {
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto subsets = all_maya_subsets(n);
      for (const auto& a : subsets)
        for (const auto& b : subsets) {
          const std::string tag = "n=" + std::to_string(n) + " A=" + show(a.subset()) + " B=" + show(b.subset());
          const auto h = static_cast<std::int64_t>(hom_formula(a, b));
          out.expect(polytope_max(a.subset(), b.subset()) == h, tag + " polytope_max");
          out.expect(polytope_oracle(a.subset(), b.subset()) == h, tag + " bitmask oracle");
          std::int64_t head = 0;
          for (int x : a.subset().elements()) head += x <= static_cast<int>(b.size()) ? 1 : 0;
          out.expect(static_cast<std::int64_t>(max_intersection(a.subset(), b.subset())) - head == h,
                     tag + " intersection form");
        }
    }
  });

  criterion(4, "uniqueness", 60, [](Outcome& out) {
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& a : all_maya_subsets(n))
        for (std::uint64_t seed : {11u, 22u, 33u}) {
          const std::string tag = "n=" + std::to_string(n) + " A=" + show(a.subset()) + " seed=" + std::to_string(seed);
          const auto target = maya_module(a);
          const auto scrambled = random_basis_change(target, seed);
          try {
            const auto found = identify_maya(scrambled, seed);
            out.expect(found.subset.subset() == a.subset(), tag + " subset");
            const auto& phi = found.iso;
            const bool ends = (phi.source() == scrambled && phi.target() == target) ||
                              (phi.source() == target && phi.target() == scrambled);
            out.expect(ends && phi.commutes() && phi.is_isomorphism(), tag + " certificate");
          } catch (const Error& e) {
            out.expect(false, tag + " " + std::string(to_string(e.kind())) + ": " + e.what());
          }
        }
  });

  criterion(5, "type-T relations", 30, [](Outcome& out) {
    for_each_ssyt(4, 6, [&](std::size_t, const auto&, const auto&, const std::vector<Tableau>& tabs) {
      for (const auto& t : tabs) {
        BoxScalars signed_mix = generic_scalars(t, 77);
        std::int64_t k = 0;
        for (auto& [pq, e] : signed_mix) e = (k++ % 2 ? Rational(-1) : Rational(1)) / e;
        for (const auto& sc : {constant_scalars(t, 0), constant_scalars(t, 1), generic_scalars(t, 5), signed_mix})
          out.expect(check_preprojective(type_t_module(t, sc)), t.to_string());
      }
    });
  });

  criterion(6, "hom into connected maya modules", 120, [](Outcome& out) {
    for_each_ssyt(4, 6, [&](std::size_t, const auto&, const auto&, const std::vector<Tableau>& tabs) {
      for (const auto& t : tabs) {
        const Signature g = signature(t);
        bool matched = false;
        for (std::uint64_t attempt = 0; attempt <= 5 && !matched; ++attempt)
          matched = f_signature(type_t_module(t, generic_scalars(t, 1000 + attempt))) == g;
        out.expect(matched, t.to_string() + " generic");
        const Signature zero = f_signature(type_t_module(t, constant_scalars(t, 0)));
        bool dominates = zero.size() == g.size();
        for (std::size_t k = 0; dominates && k < g.size(); ++k)
          dominates = zero[k].first == g[k].first && zero[k].second >= g[k].second;
        out.expect(dominates, t.to_string() + " zero scalars");
      }
    });
  });

  criterion(7, "component bijection", 60, [](Outcome& out) {
    for_each_ssyt(4, 7, [&](std::size_t, const auto& shape, const auto& content, const std::vector<Tableau>& tabs) {
      std::set<Signature> seen;
      for (const auto& t : tabs) seen.insert(signature(t));
      out.expect(seen.size() == tabs.size(), "signature collision in shape/content");
      for (const auto& t : tabs) {
        const auto m = type_t_module(t, generic_scalars(t, 4242));
        out.expect(classify(m, shape, content, 1).tableau == t, t.to_string() + " round trip");
      }
    });
  });

  criterion(8, "counting cross-checks", 30, [](Outcome& out) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto table = oracle::kostant_table(n - 1, 6);
      for (std::int64_t total = 0; total <= 6; ++total)
        for (const auto& v : compositions(static_cast<std::size_t>(total), n - 1)) {
          const auto it = table.find(v);
          const std::uint64_t expected = it == table.end() ? 0 : it->second;
          out.expect(kostant_partition(RootVector::from_dims(v)) == expected, "kostant n=" + std::to_string(n));
        }
    }
    for_each_ssyt(4, 6, [&](std::size_t, const auto& shape, const auto& content, const std::vector<Tableau>& tabs) {
      std::vector<std::int64_t> lambda(shape.begin(), shape.end());
      out.expect(weight_multiplicity(lambda, content) == tabs.size(), "weight multiplicity");
    });
    out.expect(weight_multiplicity({2, 1, 0}, {1, 1, 1}) == 2, "lambda=(2,1,0) mu=(1,1,1)");
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
  return failures == 0 ? 0 : 1;
}
