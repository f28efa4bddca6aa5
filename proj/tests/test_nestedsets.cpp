#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ncpoly/nestedsets.hpp"
#include "ncpoly/statepoly.hpp"

using namespace ncpoly::nested;

namespace {

// Maximal nested sets of Î_n written out from the chain description: k
// singletons of [n], then their union with n+1, then one element at a time.
std::set<NestedSet> chain_form(int n) {
  std::set<NestedSet> out;
  for (Subset k = 0; k < (Subset{1} << n); ++k) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!(k & (Subset{1} << (i - 1)))) rest.push_back(i);
    do {
      NestedSet s;
      for (int i : elements_of(k)) s.push_back(subset_of({i}));
      Subset cur = k | subset_of({n + 1});
      s.push_back(cur);
      for (int i : rest) {
        cur |= subset_of({i});
        s.push_back(cur);
      }
      std::sort(s.begin(), s.end());
      out.insert(s);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

// Connected vertex sets of a graph on [n] given by its edges.
SetFamily graphical(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> sets;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    Subset reached = s & (~s + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (auto [a, b] : edges) {
        const Subset ea = subset_of({a}), eb = subset_of({b});
        if (!(s & ea) || !(s & eb)) continue;
        if ((reached & ea) && !(reached & eb)) reached |= eb, grew = true;
        if ((reached & eb) && !(reached & ea)) reached |= ea, grew = true;
      }
    }
    if (reached == s) sets.push_back(elements_of(s));
  }
  return make_family(n, sets);
}

}  // namespace

TEST_CASE("building sets") {
  CHECK(is_building_set(make_family(3, {{1}, {2}, {3}})));
  const SetFamily i2 = index_family(2);
  CHECK(i2 == make_family(3, {{1, 3}, {2, 3}, {1, 2, 3}}));
  CHECK_FALSE(is_building_set(i2));
  CHECK(is_building_set(building_closure(i2)));
  CHECK_FALSE(is_building_set(make_family(3, {{1}, {2}, {3}, {1, 2}, {2, 3}})));
  CHECK_THROWS(make_family(2, {{3}}));
  CHECK_THROWS(make_family(2, {{}}));
}

TEST_CASE("building closure of the index family") {
  const SetFamily singles = make_family(4, {{1}, {2}, {3}, {4}});
  CHECK(building_closure(singles) == singles);

  const SetFamily c2 = building_closure(index_family(2));
  CHECK(c2 == make_family(3, {{1}, {2}, {3}, {1, 3}, {2, 3}, {1, 2, 3}}));

  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> expected;
    for (int i = 1; i <= n; ++i) expected.push_back({i});
    for (Subset j = 0; j < (Subset{1} << n); ++j) {
      auto s = elements_of(j);
      s.push_back(n + 1);
      expected.push_back(s);
    }
    const SetFamily closure = building_closure(index_family(n));
    CHECK(closure == make_family(n + 1, expected));
    CHECK(is_building_set(closure));
    CHECK(building_closure(closure) == closure);
    for (Subset m : index_family(n).members) CHECK(closure.contains(m));

    // dropping any non-singleton member loses the building property or a generator
    const SetFamily gens = index_family(n);
    for (Subset x : closure.members) {
      if (std::popcount(x) == 1) continue;
      SetFamily smaller = closure;
      smaller.members.erase(std::find(smaller.members.begin(), smaller.members.end(), x));
      bool still_contains = std::all_of(gens.members.begin(), gens.members.end(),
                                        [&](Subset m) { return smaller.contains(m); });
      CHECK_FALSE((is_building_set(smaller) && still_contains));
    }
  }
}

TEST_CASE("maximal nested sets") {
  const std::size_t counts[] = {2, 5, 16, 65};
  for (int n = 1; n <= 4; ++n) {
    const SetFamily b = building_closure(index_family(n));
    const auto sets = maximal_nested_sets(b);
    CHECK(sets.size() == counts[n - 1]);
    CHECK(sets.size() == vertex_count_formula(n));
    CHECK(std::set<NestedSet>(sets.begin(), sets.end()) == chain_form(n));
    const Subset top = (Subset{1} << (n + 1)) - 1;
    for (const NestedSet& s : sets) {
      CHECK(s.size() == static_cast<std::size_t>(n + 1));
      CHECK(std::count(s.begin(), s.end(), top) == 1);
      CHECK(is_nested(b, s));
    }
    if (n <= 3) CHECK(sets.size() == ncpoly::statepoly::qbar(n).num_vertices());
  }
  // graph associahedra of small graphs
  CHECK(maximal_nested_sets(graphical(3, {{1, 2}, {2, 3}})).size() == 5);
  CHECK(maximal_nested_sets(graphical(3, {{1, 2}, {2, 3}, {1, 3}})).size() == 6);
  CHECK(maximal_nested_sets(graphical(4, {{1, 2}, {2, 3}, {3, 4}})).size() == 14);
  CHECK(maximal_nested_sets(graphical(4, {{1, 4}, {2, 4}, {3, 4}})).size() == 16);
  CHECK(maximal_nested_sets(make_family(2, {{1}, {2}})) == std::vector<NestedSet>{{1, 2}});
  CHECK_THROWS(maximal_nested_sets(index_family(2)));

  const SetFamily b2 = building_closure(index_family(2));
  CHECK_FALSE(is_nested(b2, {subset_of({1}), subset_of({3}), subset_of({1, 2, 3})}));
  CHECK_FALSE(is_nested(b2, {subset_of({1})}));
  CHECK_FALSE(is_nested(b2, {subset_of({1, 3}), subset_of({2, 3}), subset_of({1, 2, 3})}));
}

TEST_CASE("counting identities") {
  CHECK(vertex_count_formula(0) == 1);
  CHECK(vertex_count_formula(1) == 2);
  CHECK(vertex_count_formula(2) == 5);
  CHECK(vertex_count_formula(4) == 65);
  CHECK(vertex_count_formula(10) == 9864101);

  CHECK(delannoy_by_diagonals(1, 1) == 1);
  CHECK(delannoy_by_diagonals(1, 0) == 2);
  CHECK(delannoy_by_diagonals(2, 0) == 6);
  CHECK(delannoy_by_diagonals(2, 3) == 0);
  // central Delannoy numbers 1, 3, 13, 63, 321
  const std::uint64_t central[] = {1, 3, 13, 63, 321};
  for (int m = 0; m <= 4; ++m) {
    std::uint64_t total = 0;
    for (int k = 0; k <= m; ++k) total += delannoy_by_diagonals(m, k);
    CHECK(total == central[m]);
  }
}

TEST_CASE("conjecture report") {
  const auto r = conjecture_report(2, {2, 1});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].conjectured == 2);
  CHECK(r.rows[1].conjectured == 2);
  CHECK(r.rows[0].delannoy == 2);
  CHECK(r.rows[1].delannoy == 1);
  CHECK(r.rows[0].formula_match);
  CHECK_FALSE(r.rows[1].formula_match);
  CHECK(r.delannoy_matches);
  CHECK_FALSE(r.formula_matches);

  const auto short_f = conjecture_report(4, {7});
  CHECK(short_f.rows.size() == 4);
  CHECK_FALSE(short_f.rows[2].computed);
  CHECK(to_json(short_f)["rows"][2]["computed"].is_null());
}
