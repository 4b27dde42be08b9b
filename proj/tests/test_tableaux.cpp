#include "preproj/error.hpp"
#include "preproj/tableaux.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace preproj;

namespace {

using Rows = std::vector<std::vector<std::size_t>>;

Tableau T(std::size_t n, Rows rows) { return Tableau(n, std::move(rows)); }
SubsetI S(std::size_t n, std::vector<int> e) { return SubsetI(n, std::move(e)); }

// Oracle: every filling of the shape by 1..n with the given content, kept
// when rows weakly increase and columns strictly increase.
std::vector<Rows> brute_force_ssyt(const std::vector<std::size_t>& shape,
                                   const std::vector<std::int64_t>& content) {
  std::vector<std::size_t> word;
  for (std::size_t e = 1; e <= content.size(); ++e)
    for (std::int64_t k = 0; k < content[e - 1]; ++k) word.push_back(e);
  std::size_t boxes = 0;
  for (auto s : shape) boxes += s;
  std::vector<Rows> out;
  if (word.size() != boxes) return out;
  do {
    Rows rows;
    std::size_t pos = 0;
    for (auto len : shape) {
      if (len == 0) continue;
      rows.emplace_back(word.begin() + pos, word.begin() + pos + len);
      pos += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c] < rows[r][c - 1]) ok = false;
        if (r > 0 && rows[r][c] <= rows[r - 1][c]) ok = false;
      }
    if (ok) out.push_back(rows);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;  // next_permutation visits words in lexicographic order
}

std::size_t sig_value(const Signature& sig, const SubsetI& a) {
  for (const auto& [s, v] : sig)
    if (s == a) return v;
  FAIL("subset missing from signature");
  return 0;
}

}  // namespace

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(T(3, {{2, 1}}), Error);
  CHECK_THROWS_AS(T(3, {{1, 2}, {1}}), Error);
  CHECK_THROWS_AS(T(3, {{1}, {2, 3}}), Error);
  CHECK_THROWS_AS(T(3, {{4}}), Error);
  CHECK_THROWS_AS(T(3, {{}, {1}}), Error);
  const auto t = T(3, {{1, 2}, {3}, {}});
  CHECK(t.shape() == std::vector<std::size_t>{2, 1});
  CHECK(t.content() == std::vector<std::int64_t>{1, 1, 1});
  CHECK(t.boxes() == std::vector<Box>{{1, 1}, {1, 2}, {2, 3}});
  CHECK(t.to_string() == "[[1,2],[3]]");
}

TEST_CASE("ssyt_enumerate examples") {
  const auto two = ssyt_enumerate({2, 1}, {1, 1, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == T(3, {{1, 2}, {3}}));
  CHECK(two[1] == T(3, {{1, 3}, {2}}));
  CHECK(ssyt_enumerate({1}, {1, 0, 0}).size() == 1);
  CHECK(ssyt_enumerate({2, 1}, {3, 0, 0}).empty());
  CHECK(ssyt_enumerate({2, 1}, {2, 2, -1}).empty());
  CHECK(ssyt_enumerate({2, 1}, {1, 1, 0}).empty());
  CHECK(ssyt_enumerate({1, 1, 1, 1}, {1, 1, 1, 0}).empty());
  CHECK(ssyt_enumerate({}, {0, 0}).size() == 1);
  CHECK_THROWS_AS(ssyt_enumerate({1, 2}, {1, 1, 1}), Error);
}

TEST_CASE("ssyt_enumerate matches brute force, n <= 4, |lambda| <= 6") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 6; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n)) {
          const auto expected = brute_force_ssyt(shape, content);
          const auto got = ssyt_enumerate(shape, content);
          REQUIRE(got.size() == expected.size());
          for (std::size_t k = 0; k < got.size(); ++k) REQUIRE(got[k].rows() == expected[k]);
        }
}

TEST_CASE("admissible pairs") {
  CHECK(admissible_pairs(T(3, {{1, 2}, {3}})) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
  CHECK(admissible_pairs(T(3, {{1, 3}, {2}})).empty());
  // non-adjacent rows are allowed: (1,3) → (3,4) since 1 < 3 <= 3 < 4
  const auto t = T(4, {{1, 3}, {2}, {4}});
  const auto pairs = admissible_pairs(t);
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair<std::size_t, std::size_t>{1, 3}) != pairs.end());
}

TEST_CASE("g_count") {
  CHECK(g_count(T(3, {{1, 2}, {3}}), S(3, {2})) == 1);
  CHECK(g_count(T(3, {{1, 3}, {2}}), S(3, {2})) == 0);
  CHECK(g_count(T(3, {{1}, {2}, {3}}), S(3, {2, 3})) == 0);
  CHECK_THROWS_AS(g_count(T(3, {{1, 2}, {3}}), S(3, {1, 3})), Error);
}

TEST_CASE("signature") {
  auto sig = signature(T(3, {{1, 2}, {3}}));
  CHECK(sig == Signature{{S(3, {2}), 1}, {S(3, {3}), 1}, {S(3, {2, 3}), 1}});
  sig = signature(T(3, {{1, 3}, {2}}));
  CHECK(sig == Signature{{S(3, {2}), 0}, {S(3, {3}), 1}, {S(3, {2, 3}), 1}});
  sig = signature(T(3, {{1}}));
  for (const auto& [a, g] : sig) CHECK(g == 0);
}

TEST_CASE("signatures separate tableaux of equal shape and content, n <= 4, |lambda| <= 7") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 7; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n)) {
          std::set<Signature> seen;
          const auto tabs = ssyt_enumerate(shape, content);
          for (const auto& t : tabs) seen.insert(signature(t));
          REQUIRE(seen.size() == tabs.size());
        }
}

TEST_CASE("type_t_module examples") {
  const auto t = T(3, {{1, 2}, {3}});
  SUBCASE("unit scalar") {
    const auto m = type_t_module(t, constant_scalars(t, 1));
    CHECK(m.dims() == std::vector<std::size_t>{1, 1});
    CHECK(m.right(1) == RatMatrix::from_rows({{1}}));
    CHECK(m.left(2) == RatMatrix::from_rows({{0}}));
  }
  SUBCASE("no admissible pairs gives N({3})") {
    const auto t2 = T(3, {{1, 3}, {2}});
    CHECK(type_t_module(t2, {}) == maya_module(MayaSubset(3, {3})));
  }
  SUBCASE("zero scalars decouple") {
    CHECK(type_t_module(t, constant_scalars(t, 0)) ==
          direct_sum(GradedRep::simple(3, 1), GradedRep::simple(3, 2)));
  }
  SUBCASE("malformed scalars") {
    CHECK_THROWS_AS(type_t_module(t, {}), Error);
    BoxScalars wrong{{{0, 2}, Rational(1)}};
    CHECK_THROWS_AS(type_t_module(t, wrong), Error);
  }
}

TEST_CASE("generic_scalars") {
  CHECK(generic_scalars(T(3, {{1, 3}, {2}}), 4).empty());
  const auto t = T(4, {{1, 2, 3}, {2, 4}, {4}});
  CHECK(generic_scalars(t, 99) == generic_scalars(t, 99));
  for (const auto& [pq, e] : generic_scalars(t, 99)) {
    CHECK(e >= Rational(1));
    CHECK(e <= Rational(1000000));
  }
  const auto small = T(3, {{1, 2}, {3}});
  const auto a = generic_scalars(small, 1), b = generic_scalars(small, 2);
  REQUIRE(a.size() == 1);
  CHECK(a.begin()->second != b.begin()->second);
}

TEST_CASE("type-T modules satisfy the relations for any scalars, n <= 4, |lambda| <= 6") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 6; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n))
          for (const auto& t : ssyt_enumerate(shape, content)) {
            REQUIRE(check_preprojective(type_t_module(t, constant_scalars(t, 0))));
            REQUIRE(check_preprojective(type_t_module(t, constant_scalars(t, 1))));
            REQUIRE(check_preprojective(type_t_module(t, generic_scalars(t, size))));
            BoxScalars mixed = generic_scalars(t, 7);
            for (auto& [pq, e] : mixed) e = Rational(-3, 7) * e;
            REQUIRE(check_preprojective(type_t_module(t, mixed)));
          }
}

TEST_CASE("single-column tableaux with unit scalars give maya modules") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& a : all_maya_subsets(n)) {
      Rows rows;
      for (int x : a.subset().elements()) rows.push_back({static_cast<std::size_t>(x)});
      const Tableau t(n, rows);
      BoxScalars sc = constant_scalars(t, 0);
      for (auto& [pq, e] : sc)
        if (t.boxes()[pq.second].row == t.boxes()[pq.first].row + 1) e = 1;
      REQUIRE(type_t_module(t, sc) == maya_module(a));
    }
}

TEST_CASE("f_value examples") {
  const auto t = T(3, {{1, 2}, {3}});
  const auto generic = type_t_module(t, generic_scalars(t, 3));
  CHECK(f_value(generic, MayaSubset(3, {2})) == 1);
  CHECK(f_value(generic, MayaSubset(3, {2})) == g_count(t, S(3, {2})));

  // zero scalars give S_1 + S_2; only S_1 maps to the socle of N({3})
  const auto degenerate = type_t_module(t, constant_scalars(t, 0));
  CHECK(f_value(degenerate, MayaSubset(3, {3})) == 1);
  CHECK(f_value(degenerate, MayaSubset(3, {3})) >= g_count(t, S(3, {3})));

  CHECK(f_value(GradedRep::zero(3), MayaSubset(3, {2, 3})) == 0);
  CHECK_THROWS_AS(f_value(generic, MayaSubset(3, {1, 3})), Error);
}

TEST_CASE("hom into connected maya modules counts boxes at generic points, n <= 4") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 6; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n))
          for (const auto& t : ssyt_enumerate(shape, content)) {
            const Signature g = signature(t);
            bool matched = false;
            for (std::uint64_t attempt = 0; attempt <= 5 && !matched; ++attempt)
              matched = f_signature(type_t_module(t, generic_scalars(t, 100 + attempt))) == g;
            INFO(t.to_string());
            REQUIRE(matched);

            const Signature zero = f_signature(type_t_module(t, constant_scalars(t, 0)));
            for (std::size_t k = 0; k < g.size(); ++k) REQUIRE(zero[k].second >= g[k].second);
          }
}

TEST_CASE("generic type-T modules respect the socle bound") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 6; ++size)
      for (const auto& shape : partitions(size, n)) {
        std::vector<std::int64_t> w(n - 1);
        for (std::size_t i = 1; i < n; ++i)
          w[i - 1] = static_cast<std::int64_t>(shape[i - 1]) - static_cast<std::int64_t>(shape[i]);
        for (const auto& content : compositions(size, n))
          for (const auto& t : ssyt_enumerate(shape, content))
            REQUIRE(in_rep_w(type_t_module(t, generic_scalars(t, 5)), w));
      }
}

TEST_CASE("classify") {
  const auto t1 = T(3, {{1, 2}, {3}});
  const auto t2 = T(3, {{1, 3}, {2}});
  SUBCASE("round trips") {
    auto c = classify(type_t_module(t1, generic_scalars(t1, 8)), {2, 1}, {1, 1, 1});
    CHECK(c.tableau == t1);
    CHECK_FALSE(c.degenerate());
    c = classify(type_t_module(t2, generic_scalars(t2, 8)), {2, 1}, {1, 1, 1});
    CHECK(c.tableau == t2);
    CHECK_FALSE(c.degenerate());
  }
  SUBCASE("S_1 + S_2 sits in the closure and is flagged") {
    const auto m = direct_sum(GradedRep::simple(3, 1), GradedRep::simple(3, 2));
    const auto f = f_signature(m);
    CHECK(sig_value(f, S(3, {2})) == 1);
    CHECK(sig_value(f, S(3, {3})) == 1);
    CHECK(sig_value(f, S(3, {2, 3})) == 1);
    const auto c = classify(m, {2, 1}, {1, 1, 1});
    CHECK(c.tableau == t1);
    CHECK(c.end_dim == 2);
    CHECK(c.generic_end_dim == 1);
    CHECK(c.degenerate());
  }
  SUBCASE("socle outside the bound") {
    // w = (0,1) forbids socle at vertex 1, which is where N({3}) has it
    try {
      classify(maya_module(MayaSubset(3, {3})), {1, 1}, {0, 1, 1});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_input);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(classify(GradedRep::simple(3, 1), {2, 1}, {1, 1, 1}), Error);
  }
}

TEST_CASE("classify round trip over all small tableaux") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 1; size <= 5; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n))
          for (const auto& t : ssyt_enumerate(shape, content)) {
            const auto c = classify(type_t_module(t, generic_scalars(t, 31)), shape, content);
            REQUIRE(c.tableau == t);
          }
}

TEST_CASE("partitions and compositions") {
  CHECK(partitions(4, 2) == std::vector<std::vector<std::size_t>>{{4, 0}, {3, 1}, {2, 2}});
  CHECK(partitions(0, 3) == std::vector<std::vector<std::size_t>>{{0, 0, 0}});
  CHECK(compositions(2, 2) == std::vector<std::vector<std::int64_t>>{{0, 2}, {1, 1}, {2, 0}});
}
