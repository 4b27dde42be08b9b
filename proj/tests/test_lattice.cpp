#include "oracles.hpp"

#include "preproj/error.hpp"
#include "preproj/lattice.hpp"
#include "preproj/maya.hpp"
#include "preproj/tableaux.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

SubsetI S(std::size_t n, std::vector<int> e) { return SubsetI(n, std::move(e)); }
RootVector R(std::vector<std::int64_t> c) { return RootVector(std::move(c)); }

}  // namespace

TEST_CASE("root vector invariants") {
  CHECK_THROWS_AS(R({1, 1, -1}), Error);
  CHECK_THROWS_AS(R({0}), Error);
  CHECK(RootVector::simple_root(4, 2) == R({0, 1, -1, 0}));
  CHECK(RootVector::from_dims({1, 1}) == R({1, 0, -1}));
  CHECK(R({1, 0, -1}).simple_coefficients() == std::vector<std::int64_t>{1, 1});
  CHECK(R({1, 0, -1}).is_nonnegative());
  CHECK_FALSE(R({-1, 0, 1}).is_nonnegative());
}

TEST_CASE("subset validation and parsing") {
  CHECK_THROWS_AS(S(3, {2, 2}), Error);
  CHECK_THROWS_AS(S(3, {0}), Error);
  CHECK_THROWS_AS(S(3, {4}), Error);
  CHECK(SubsetI::parse(7, "3,6,7") == S(7, {3, 6, 7}));
  CHECK(SubsetI::parse(7, "") == S(7, {}));
  CHECK_THROWS_AS(SubsetI::parse(7, "3,,6"), Error);
  CHECK_THROWS_AS(SubsetI::parse(7, "3,x"), Error);
  CHECK_THROWS_AS(SubsetI::parse(7, "3,6,"), Error);
  CHECK(S(7, {3, 6, 7}).to_string() == "3,6,7");
}

TEST_CASE("subset_diff") {
  CHECK(subset_diff(S(7, {1, 2, 3}), S(7, {3, 6, 7})) == R({1, 1, 0, 0, 0, -1, -1}));
  CHECK(subset_diff(S(5, {2, 4}), S(5, {2, 4})) == RootVector::zero(5));
  CHECK(subset_diff(S(3, {1, 2}), S(3, {2, 3})) ==
        RootVector::simple_root(3, 1) + RootVector::simple_root(3, 2));
  CHECK_THROWS_AS(subset_diff(S(3, {1}), S(3, {1, 2})), Error);
  CHECK_THROWS_AS(subset_diff(S(3, {1}), S(4, {1})), Error);
}

TEST_CASE("dominance_leq") {
  CHECK(dominance_leq(S(3, {2, 3}), S(3, {1, 3})));
  CHECK(dominance_leq(S(4, {1, 4}), S(4, {1, 4})));
  CHECK_FALSE(dominance_leq(S(3, {1, 2}), S(3, {2, 3})));
  CHECK_THROWS_AS(dominance_leq(S(3, {1}), S(3, {1, 2})), Error);
}

TEST_CASE("dominance is elementwise comparison, exhaustively for n <= 8") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t size = 0; size <= n; ++size) {
      const auto all = subsets_of_size(n, size);
      for (const auto& c : all)
        for (const auto& b : all) {
          bool elementwise = true;
          for (std::size_t k = 1; k <= size; ++k) elementwise = elementwise && b.at(k) <= c.at(k);
          REQUIRE(dominance_leq(c, b) == elementwise);
        }
    }
}

TEST_CASE("subset_from_dims") {
  CHECK(subset_from_dims({1, 2, 2, 2, 2, 1}, 3) == S(7, {3, 6, 7}));
  CHECK(subset_from_dims({0, 1}, 2) == S(3, {1, 3}));
  CHECK(subset_from_dims({1, 0}, 1) == S(3, {2}));
  CHECK_THROWS_AS(subset_from_dims({2, 0}, 1), Error);
  CHECK_THROWS_AS(subset_from_dims({0, 0}, 1), Error);  // would be {1}
  CHECK_THROWS_AS(subset_from_dims({1, 0}, 3), Error);
  CHECK_THROWS_AS(subset_from_dims({-1, 0}, 1), Error);
}

TEST_CASE("subset_from_dims inverts the Maya dimension vector for n <= 7") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& a : all_maya_subsets(n)) {
      const std::size_t i = a.size();
      const auto v = maya_dims(a);
      REQUIRE(RootVector::from_dims(v) == subset_diff(SubsetI::initial(n, i), a.subset()));
      REQUIRE(subset_from_dims(v, i) == a.subset());
    }
}

TEST_CASE("connected_subsets") {
  CHECK(connected_subsets(3, true) == std::vector<SubsetI>{S(3, {2}), S(3, {3}), S(3, {2, 3})});
  CHECK(connected_subsets(2, true) == std::vector<SubsetI>{S(2, {2})});
  CHECK(connected_subsets(3, false) == std::vector<SubsetI>{S(3, {1}), S(3, {2}), S(3, {3}), S(3, {1, 2}),
                                                            S(3, {2, 3}), S(3, {1, 2, 3})});
  CHECK(is_connected(S(5, {2, 3, 4})));
  CHECK_FALSE(is_connected(S(5, {2, 4})));
  CHECK_FALSE(is_connected(S(5, {})));
}

TEST_CASE("weights_from") {
  auto d = weights_from({1, 1}, {1, 1});
  CHECK(d.lambda == std::vector<std::int64_t>{2, 1, 0});
  CHECK(d.mu == std::vector<std::int64_t>{1, 1, 1});

  d = weights_from({1, 0}, {0, 0});
  CHECK(d.lambda == std::vector<std::int64_t>{1, 0, 0});
  CHECK(d.mu == std::vector<std::int64_t>{1, 0, 0});

  d = weights_from({0, 1}, {0, 1});
  CHECK(d.lambda == std::vector<std::int64_t>{1, 1, 0});
  CHECK(d.mu == std::vector<std::int64_t>{1, 0, 1});

  CHECK_THROWS_AS(weights_from({1}, {1, 1}), Error);
}

TEST_CASE("kostant_partition examples") {
  CHECK(kostant_partition(RootVector::simple_root(3, 1)) == 1);
  CHECK(kostant_partition(RootVector::from_dims({1, 1})) == 2);
  CHECK(kostant_partition(RootVector::from_dims({2, 1})) == 2);
  CHECK(kostant_partition(RootVector::zero(4)) == 1);
  CHECK(kostant_partition(R({-1, 1, 0})) == 0);
}

TEST_CASE("kostant_partition agrees with multiset enumeration") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto table = oracle::kostant_table(n - 1, 6);
    // every coefficient vector of height <= 6, including the ones with count 0
    std::vector<std::int64_t> v(n - 1, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
      if (pos == v.size()) {
        auto it = table.find(v);
        const std::uint64_t expected = it == table.end() ? 0 : it->second;
        REQUIRE(kostant_partition(RootVector::from_dims(v)) == expected);
        return;
      }
      for (std::int64_t x = 0; x <= left; ++x) {
        v[pos] = x;
        self(self, pos + 1, left - x);
      }
    };
    rec(rec, 0, 6);
  }
}

TEST_CASE("weight_multiplicity examples") {
  CHECK(weight_multiplicity({2, 1, 0}, {1, 1, 1}) == 2);
  CHECK(weight_multiplicity({3, 1, 0}, {3, 1, 0}) == 1);
  CHECK(weight_multiplicity({1, 0, 0}, {0, 0, 1}) == 1);
  CHECK(weight_multiplicity({1, 0, 0}, {1, 1, 0}) == 0);
  CHECK_THROWS_AS(weight_multiplicity({0, 1}, {1, 0}), Error);
}

TEST_CASE("weight multiplicity counts tableaux for n <= 4, |lambda| <= 6") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t size = 0; size <= 6; ++size)
      for (const auto& shape : partitions(size, n))
        for (const auto& content : compositions(size, n)) {
          std::vector<std::int64_t> lambda(shape.begin(), shape.end());
          REQUIRE(weight_multiplicity(lambda, content) == ssyt_enumerate(shape, content).size());
        }
}

TEST_CASE("admissible subset counts") {
  CHECK(admissible_subsets(3).size() == 4);
  CHECK(admissible_subsets(6).size() == 57);
  CHECK(subsets_of_size(5, 2).size() == 10);
  CHECK(subsets_of_size(3, 0).size() == 1);
  CHECK(subsets_of_size(3, 4).empty());
}
