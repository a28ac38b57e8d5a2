#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"
#include "fmc/nests.hpp"

using namespace fmc;

namespace {

Subset S(std::initializer_list<int> labels) { return subset_of(std::vector<int>(labels)); }

std::vector<Subset> family(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> out;
  for (int l = 1; l <= n; ++l) out.push_back(singleton(l));
  for (auto s : sets) out.push_back(S(s));
  return out;
}

// Oracle: every family of subsets of size >= 2, filtered by the overlap rule.
std::set<std::vector<Subset>> nests_by_filter(int n) {
  std::vector<Subset> candidates;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    if (subset_size(s) >= 2) candidates.push_back(s);
  }
  std::set<std::vector<Subset>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::vector<Subset> fam;
    for (int l = 1; l <= n; ++l) fam.push_back(singleton(l));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (pick >> i & 1) fam.push_back(candidates[i]);
    }
    if (is_nest(n, fam)) {
      std::sort(fam.begin(), fam.end(), canonical_less);
      out.insert(fam);
    }
  }
  return out;
}

// Oracle: enumerate the lattice points of M_S one by one.
IntPoly weight_by_lattice(const Nest& s, int d) {
  std::vector<int> bounds;
  for (const auto& [node, sons] : nest_stats(s).sons) bounds.push_back(d * (sons - 1) - 1);
  std::vector<BigInt> counts(1, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int total) {
    if (i == bounds.size()) {
      if (counts.size() <= static_cast<std::size_t>(total)) counts.resize(total + 1);
      counts[total] += 1;
      return;
    }
    for (int mu = 1; mu <= bounds[i]; ++mu) walk(i + 1, total + mu);
  };
  walk(0, 0);
  return IntPoly(std::move(counts));
}

}  // namespace

TEST_CASE("subset helpers") {
  CHECK(labels_of(S({3, 1})) == std::vector<int>{1, 3});
  CHECK(canonical_less(S({3}), S({1, 2})));
  CHECK(canonical_less(S({1, 2}), S({1, 3})));
  CHECK(canonical_less(S({1, 3}), S({2, 3})));
  CHECK_FALSE(canonical_less(S({2, 3}), S({2, 3})));
}

TEST_CASE("is_nest examples") {
  CHECK(is_nest(3, family(3, {})));
  CHECK_FALSE(is_nest(3, family(3, {{1, 2}, {1, 3}})));
  CHECK(is_nest(3, family(3, {{2, 3}, {1, 2, 3}})));
  CHECK_FALSE(is_nest(3, {S({1}), S({2})}));          // missing singleton
  CHECK_FALSE(is_nest(2, family(2, {{1, 2, 3}})));    // label outside [n]
  CHECK_FALSE(is_nest(2, {S({1}), S({2}), 0}));       // empty member
  CHECK_THROWS_AS(Nest(3, family(3, {{1, 2}, {2, 3}})), InvalidArgument);
}

TEST_CASE("enumerate_nests examples") {
  CHECK(enumerate_nests(1).size() == 1);
  const auto two = enumerate_nests(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].members() == family(2, {}));
  CHECK(two[1].members() == family(2, {{1, 2}}));
  CHECK(enumerate_nests(3).size() == 8);
  CHECK_THROWS_AS(enumerate_nests(0), InvalidArgument);
}

TEST_CASE("enumeration matches the subset-family filter") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    std::set<std::vector<Subset>> got;
    for (const auto& s : enumerate_nests(n)) got.insert(s.members());
    CHECK(got == nests_by_filter(n));
  }
}

TEST_CASE("enumeration is sorted, duplicate free and valid") {
  for (int n = 1; n <= 6; ++n) {
    const auto nests = enumerate_nests(n);
    CHECK(std::is_sorted(nests.begin(), nests.end()));
    CHECK(std::adjacent_find(nests.begin(), nests.end()) == nests.end());
    for (const auto& s : nests) CHECK(is_nest(n, s.members()));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_nests(8), BudgetExceeded);
  CHECK_NOTHROW((EnumerationBudget{7, true}.check(9)));
  CHECK_THROWS_AS((EnumerationBudget{7, true}.check(32)), InvalidArgument);
  CHECK(enumerate_nests(7).size() == 78416);
}

TEST_CASE("nest_stats examples") {
  const Nest figure(3, family(3, {{2, 3}, {1, 2, 3}}));
  const NestStats st = nest_stats(figure);
  CHECK(st.components == 1);
  REQUIRE(st.sons.size() == 2);
  CHECK(st.sons[0] == std::pair<Subset, int>{S({2, 3}), 2});
  CHECK(st.sons[1] == std::pair<Subset, int>{S({1, 2, 3}), 2});

  const NestStats flat = nest_stats(Nest(3, family(3, {})));
  CHECK(flat.components == 3);
  CHECK(flat.sons.empty());

  const NestStats one = nest_stats(Nest(3, family(3, {{1, 2}})));
  CHECK(one.components == 2);
  CHECK(one.sons == std::vector<std::pair<Subset, int>>{{S({1, 2}), 2}});
}

TEST_CASE("nest_stats invariants") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_nests(n)) {
      const NestStats st = nest_stats(s);
      CHECK(st.components >= 1);
      int excess = 0;
      for (const auto& [node, sons] : st.sons) {
        CHECK(sons >= 2);
        excess += sons - 1;
      }
      CHECK(excess == n - st.components);
    }
  }
}

TEST_CASE("nest_weight examples") {
  CHECK(nest_weight(Nest(3, family(3, {})), 2) == IntPoly{1});
  CHECK(nest_weight(Nest(3, family(3, {{1, 2, 3}})), 2) == IntPoly{0, 1, 1, 1});
  CHECK(nest_weight(Nest(3, family(3, {{2, 3}, {1, 2, 3}})), 2) == IntPoly{0, 0, 1});
}

TEST_CASE("nest_weight equals the lattice-point count of M_S") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& s : enumerate_nests(n)) {
        const IntPoly w = nest_weight(s, d);
        CHECK(w == weight_by_lattice(s, d));
        const NestStats st = nest_stats(s);
        CHECK(w.degree() <= d * (n - st.components) - static_cast<int>(st.sons.size()));
      }
    }
  }
}

TEST_CASE("largest weight comes from the single-root nest") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 5; ++n) {
      int best = -1;
      for (const auto& s : enumerate_nests(n)) best = std::max(best, nest_weight(s, d).degree());
      const Nest root(n, family(n, {}));
      std::vector<Subset> members = root.members();
      members.push_back((Subset{1} << n) - 1);
      if (d * (n - 1) - 1 < 1) continue;
      CHECK(nest_weight(Nest(n, members), d).degree() == d * (n - 1) - 1);
      CHECK(best == d * (n - 1) - 1);
    }
  }
}

TEST_CASE("brute_bivariate examples") {
  CHECK(brute_bivariate(1, 4) == std::map<int, IntPoly>{{1, IntPoly{1}}});
  CHECK(brute_bivariate(2, 3) == std::map<int, IntPoly>{{1, IntPoly{0, 1, 1}}, {2, IntPoly{1}}});
  CHECK(brute_bivariate(3, 2) ==
        std::map<int, IntPoly>{{1, IntPoly{0, 1, 4, 1}}, {2, IntPoly{0, 3}}, {3, IntPoly{1}}});
  for (int n = 1; n <= 5; ++n) CHECK(brute_bivariate(n, 2).at(n) == IntPoly{1});
}
