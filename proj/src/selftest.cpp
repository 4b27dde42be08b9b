#include "preproj/selftest.hpp"

#include "preproj/error.hpp"
#include "preproj/graded_rep.hpp"
#include "preproj/lattice.hpp"
#include "preproj/maya.hpp"
#include "preproj/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace preproj {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.samples.size() < 5) result_.samples.push_back(describe());
  }

  SuiteResult finish(std::chrono::steady_clock::time_point start) {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  SuiteResult result_;
};

template <typename Body>
SuiteResult run_suite(const std::string& name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  Suite s(name);
  try {
    body(s);
  } catch (const std::exception& e) {
    s.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  return s.finish(start);
}

std::string pair_name(const MayaSubset& a, const MayaSubset& b) {
  return "A={" + a.subset().to_string() + "} B={" + b.subset().to_string() + "} n=" +
         std::to_string(a.n());
}

// Counts root multisets by walking roots in order and choosing a multiplicity
// for each, without memoization.
std::uint64_t brute_force_kostant(std::vector<std::int64_t> coeffs, std::size_t root) {
  const std::size_t rank = coeffs.size();
  std::size_t idx = 0;
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = a + 1; b <= rank; ++b, ++idx) {
      if (idx != root) continue;
      std::uint64_t total = brute_force_kostant(coeffs, root + 1);
      while (true) {
        for (std::size_t k = a; k < b; ++k) --coeffs[k];
        if (std::any_of(coeffs.begin(), coeffs.end(), [](auto x) { return x < 0; })) return total;
        total += brute_force_kostant(coeffs, root + 1);
      }
    }
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x == 0; }) ? 1 : 0;
}

std::vector<std::vector<std::int64_t>> bounded_dims(std::size_t len, std::int64_t max_total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, max_total);
  return out;
}

/// Every (shape, content, tableau) with entries in 1..n and at most `max_size` boxes.
template <typename Visit>
void for_each_tableau(std::size_t n, std::size_t max_size, Visit visit) {
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const auto& shape : partitions(size, n))
      for (const auto& content : compositions(size, n))
        for (const auto& t : ssyt_enumerate(shape, content)) visit(shape, content, t);
}

}  // namespace

std::vector<SuiteResult> selftest(std::size_t max_n, std::uint64_t seed) {
  if (max_n < 3) fail(ErrorKind::invalid_input, "selftest needs max_n >= 3");
  std::vector<SuiteResult> out;
  auto upto = [&](std::size_t cap) { return std::min(max_n, cap); };

  out.push_back(run_suite("exact-linalg kernel", [&](Suite& s) {
    std::mt19937_64 gen(seed);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = gen() % 5, cols = gen() % 5;
      RatMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          m(r, c) = Rational(static_cast<long>(gen() % 5) - 2, static_cast<long>(gen() % 3) + 1);
      const RatMatrix k = kernel_basis(m);
      s.check((m * k).is_zero() && rank(m) + k.cols() == cols && rank(k) == k.cols(),
              [&] { return "kernel check failed on a " + std::to_string(rows) + "x" + std::to_string(cols); });
    }
  }));

  out.push_back(run_suite("dominance order", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(8); ++n)
      for (std::size_t size = 0; size <= n; ++size) {
        const auto all = subsets_of_size(n, size);
        for (const auto& c : all)
          for (const auto& b : all) {
            bool elementwise = true;
            for (std::size_t k = 1; k <= size; ++k) elementwise &= b.at(k) <= c.at(k);
            s.check(dominance_leq(c, b) == elementwise,
                    [&] { return "C={" + c.to_string() + "} B={" + b.to_string() + "}"; });
          }
      }
  }));

  out.push_back(run_suite("maya construction", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(7); ++n)
      for (const auto& a : all_maya_subsets(n)) {
        const auto m = maya_module(a);
        const auto dims = maya_dims(a);
        std::vector<std::size_t> expected_socle(n - 1, 0);
        expected_socle[a.size() - 1] = 1;
        const auto alpha = RootVector::from_dims(dims);
        s.check(check_preprojective(m) && socle_dims(m) == expected_socle &&
                    alpha == subset_diff(SubsetI::initial(n, a.size()), a.subset()) &&
                    socle_dim_conditions(dims, a.size()) &&
                    subset_from_dims(dims, a.size()) == a.subset(),
                [&] { return "N({" + a.subset().to_string() + "}) n=" + std::to_string(n); });
      }
  }));

  out.push_back(run_suite("kostant partition function", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(5); ++n)
      for (const auto& v : bounded_dims(n - 1, 6)) {
        const auto alpha = RootVector::from_dims(v);
        s.check(kostant_partition(alpha) == brute_force_kostant(alpha.simple_coefficients(), 0),
                [&] { return "alpha_v for n=" + std::to_string(n); });
      }
  }));

  out.push_back(run_suite("weight multiplicity = #SSYT", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(4); ++n)
      for (std::size_t size = 0; size <= 6; ++size)
        for (const auto& shape : partitions(size, n))
          for (const auto& content : compositions(size, n)) {
            std::vector<std::int64_t> lambda(shape.begin(), shape.end());
            s.check(weight_multiplicity(lambda, content) == ssyt_enumerate(shape, content).size(),
                    [&] { return "lambda/mu mismatch at n=" + std::to_string(n); });
          }
  }));

  out.push_back(run_suite("hom formula vs oracle", [&](Suite& s) {
    for (std::size_t n = 3; n <= upto(6); ++n) {
      const auto subsets = all_maya_subsets(n);
      std::vector<GradedRep> modules;
      for (const auto& a : subsets) modules.push_back(maya_module(a));
      for (std::size_t x = 0; x < subsets.size(); ++x)
        for (std::size_t y = 0; y < subsets.size(); ++y) {
          const auto oracle = hom_space_basis(modules[x], modules[y]);
          const auto formula = hom_basis_maya(subsets[x], subsets[y]);
          bool ok = oracle.size() == hom_formula(subsets[x], subsets[y]) && formula.size() == oracle.size();
          for (const auto& phi : formula) ok = ok && phi.commutes();
          if (ok && !formula.empty()) {
            auto both = formula;
            both.insert(both.end(), oracle.begin(), oracle.end());
            ok = rank(span_matrix(formula)) == formula.size() && rank(span_matrix(both)) == formula.size();
          }
          s.check(ok, [&] { return pair_name(subsets[x], subsets[y]); });
        }
    }
  }));

  out.push_back(run_suite("polytope identity", [&](Suite& s) {
    for (std::size_t n = 3; n <= upto(6); ++n) {
      const auto subsets = all_maya_subsets(n);
      for (const auto& a : subsets)
        for (const auto& b : subsets) {
          const auto h = static_cast<std::int64_t>(hom_formula(a, b));
          bool ok = polytope_max(a.subset(), b.subset()) == h;
          if (a.size() <= b.size()) {
            std::int64_t low = 0;
            for (int x : a.subset().elements()) low += x <= static_cast<int>(b.size()) ? 1 : 0;
            ok = ok && static_cast<std::int64_t>(max_intersection(a.subset(), b.subset())) - low == h;
          }
          s.check(ok, [&] { return pair_name(a, b); });
        }
    }
  }));

  out.push_back(run_suite("uniqueness of one-dimensional socle modules", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(6); ++n)
      for (const auto& a : all_maya_subsets(n))
        for (std::uint64_t k = 0; k < 3; ++k) {
          const auto scrambled = random_basis_change(maya_module(a), seed + k);
          bool ok = false;
          try {
            const auto id = identify_maya(scrambled, seed + k);
            ok = id.subset == a && id.iso.commutes() && id.iso.is_isomorphism();
          } catch (const Error&) {
            ok = false;
          }
          s.check(ok, [&] { return "N({" + a.subset().to_string() + "}) n=" + std::to_string(n); });
        }
  }));

  out.push_back(run_suite("type-T relations", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(4); ++n)
      for_each_tableau(n, 6, [&](const auto&, const auto&, const Tableau& t) {
        for (const auto& sc : {constant_scalars(t, 0), constant_scalars(t, 1), generic_scalars(t, seed)})
          s.check(check_preprojective(type_t_module(t, sc)), [&] { return t.to_string(); });
      });
  }));

  out.push_back(run_suite("maya modules as single-column tableaux", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(7); ++n)
      for (const auto& a : all_maya_subsets(n)) {
        std::vector<std::vector<std::size_t>> rows;
        for (int x : a.subset().elements()) rows.push_back({static_cast<std::size_t>(x)});
        const Tableau t(n, rows);
        BoxScalars sc = constant_scalars(t, 0);
        for (auto& [pq, e] : sc)
          if (t.boxes()[pq.second].row == t.boxes()[pq.first].row + 1) e = 1;
        s.check(type_t_module(t, sc) == maya_module(a), [&] { return t.to_string(); });
      }
  }));

  out.push_back(run_suite("hom into connected maya modules", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(4); ++n)
      for_each_tableau(n, 6, [&](const auto& shape, const auto&, const Tableau& t) {
        const Signature g = signature(t);
        bool ok = false;
        for (std::uint64_t attempt = 0; attempt <= 5 && !ok; ++attempt) {
          const auto m = type_t_module(t, generic_scalars(t, seed + attempt));
          ok = f_signature(m) == g;
          if (ok) {
            std::vector<std::int64_t> w(n - 1);
            for (std::size_t i = 1; i < n; ++i)
              w[i - 1] = static_cast<std::int64_t>(shape[i - 1]) - static_cast<std::int64_t>(shape[i]);
            ok = in_rep_w(m, w);
          }
        }
        s.check(ok, [&] { return "generic " + t.to_string(); });
        const Signature degenerate = f_signature(type_t_module(t, constant_scalars(t, 0)));
        bool above = true;
        for (std::size_t k = 0; k < g.size(); ++k) above = above && degenerate[k].second >= g[k].second;
        s.check(above, [&] { return "zero scalars " + t.to_string(); });
      });
  }));

  out.push_back(run_suite("signature injectivity", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(4); ++n)
      for (std::size_t size = 1; size <= 7; ++size)
        for (const auto& shape : partitions(size, n))
          for (const auto& content : compositions(size, n)) {
            const auto tabs = ssyt_enumerate(shape, content);
            std::vector<Signature> sigs;
            for (const auto& t : tabs) sigs.push_back(signature(t));
            std::sort(sigs.begin(), sigs.end());
            s.check(std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end(),
                    [&] { return "repeated signature at n=" + std::to_string(n); });
          }
  }));

  out.push_back(run_suite("classification round trip", [&](Suite& s) {
    for (std::size_t n = 2; n <= upto(4); ++n)
      for_each_tableau(n, 6, [&](const auto& shape, const auto& content, const Tableau& t) {
        bool ok = false;
        for (std::uint64_t attempt = 0; attempt <= 5 && !ok; ++attempt) {
          try {
            const auto c = classify(type_t_module(t, generic_scalars(t, seed + attempt)), shape, content, seed);
            ok = c.tableau == t && !c.degenerate();
          } catch (const Error&) {
            ok = false;
          }
        }
        s.check(ok, [&] { return t.to_string(); });
      });
  }));

  return out;
}

}  // namespace preproj
