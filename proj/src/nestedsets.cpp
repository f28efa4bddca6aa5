#include "ncpoly/nestedsets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace ncpoly::nested {

namespace {

constexpr int kMaxGround = 24;

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Subset full_set(int ground) { return ground == 32 ? ~Subset{0} : (Subset{1} << ground) - 1; }

// Members of f inside s form one overlap component covering s.
bool connected_cover(const SetFamily& f, Subset s) {
  std::vector<Subset> inside;
  for (Subset m : f.members) {
    if ((m & ~s) == 0) inside.push_back(m);
  }
  if (inside.empty()) return false;
  Subset reached = inside.front();
  std::vector<bool> used(inside.size(), false);
  used[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < inside.size(); ++i) {
      if (!used[i] && (inside[i] & reached) != 0) {
        used[i] = true;
        reached |= inside[i];
        grew = true;
      }
    }
  }
  return std::all_of(used.begin(), used.end(), [](bool u) { return u; }) && reached == s;
}

}  // namespace

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw std::invalid_argument("set element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (s & (Subset{1} << i)) out.push_back(i + 1);
  }
  return out;
}

bool SetFamily::contains(Subset s) const { return std::binary_search(members.begin(), members.end(), s); }

SetFamily make_family(int ground, const std::vector<std::vector<int>>& sets) {
  if (ground < 0 || ground > kMaxGround) throw std::invalid_argument("ground set too large");
  SetFamily f{ground, {}};
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("empty member");
    Subset b = subset_of(s);
    if ((b & ~full_set(ground)) != 0) throw std::invalid_argument("member outside the ground set");
    f.members.push_back(b);
  }
  std::sort(f.members.begin(), f.members.end());
  f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
  return f;
}

bool is_building_set(const SetFamily& f) {
  for (int i = 0; i < f.ground; ++i) {
    if (!f.contains(Subset{1} << i)) return false;
  }
  for (Subset a : f.members)
    for (Subset b : f.members) {
      if ((a & b) != 0 && !f.contains(a | b)) return false;
    }
  return true;
}

SetFamily building_closure(const SetFamily& f) {
  if (f.ground > 20) throw std::length_error("building_closure: ground set above 20");
  SetFamily out{f.ground, {}};
  for (Subset s = 1; s <= full_set(f.ground) && s != 0; ++s) {
    if (std::popcount(s) == 1 || connected_cover(f, s)) out.members.push_back(s);
  }
  return out;
}

SetFamily index_family(int n) {
  std::vector<std::vector<int>> sets;
  for (int i = 1; i <= n; ++i) sets.push_back({i, n + 1});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) sets.push_back({i, j, n + 1});
  return make_family(n + 1, sets);
}

namespace {

std::vector<Subset> maximal_members(const SetFamily& b) {
  std::vector<Subset> out;
  for (Subset m : b.members) {
    bool maximal = std::none_of(b.members.begin(), b.members.end(),
                                [&](Subset o) { return o != m && (m & ~o) == 0; });
    if (maximal) out.push_back(m);
  }
  return out;
}

// Can x join the nested set n? Conditions 1 and 2 for collections containing x.
bool compatible(const SetFamily& b, const NestedSet& n, Subset x) {
  std::vector<Subset> disjoint;
  for (Subset m : n) {
    if (m == x) return false;
    const bool nested = (m & ~x) == 0 || (x & ~m) == 0;
    if (!nested && (m & x) != 0) return false;
    if ((m & x) == 0) disjoint.push_back(m);
  }
  // every pairwise disjoint subcollection of `disjoint`, joined with x
  std::function<bool(std::size_t, Subset, bool)> go = [&](std::size_t i, Subset acc, bool any) {
    if (any && b.contains(acc)) return false;
    for (std::size_t j = i; j < disjoint.size(); ++j) {
      if ((disjoint[j] & acc) == 0 && !go(j + 1, acc | disjoint[j], true)) return false;
    }
    return true;
  };
  return go(0, x, false);
}

}  // namespace

bool is_nested(const SetFamily& b, const NestedSet& n) {
  for (Subset m : n) {
    if (!b.contains(m)) return false;
  }
  for (Subset m : maximal_members(b)) {
    if (std::find(n.begin(), n.end(), m) == n.end()) return false;
  }
  NestedSet built;
  for (Subset m : n) {
    if (!compatible(b, built, m)) return false;
    built.push_back(m);
  }
  return true;
}

std::vector<NestedSet> maximal_nested_sets(const SetFamily& b) {
  if (!is_building_set(b)) throw std::invalid_argument("maximal_nested_sets: not a building set");
  NestedSet base;
  for (Subset m : maximal_members(b)) {
    if (!compatible(b, base, m)) return {};
    base.push_back(m);
  }
  std::vector<Subset> rest;
  for (Subset m : b.members) {
    if (std::find(base.begin(), base.end(), m) == base.end()) rest.push_back(m);
  }
  std::vector<NestedSet> out;
  NestedSet cur = base;
  // Grow in member order; a set is maximal when no member at all can join it.
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    bool extended = false;
    for (std::size_t j = i; j < rest.size(); ++j) {
      if (!compatible(b, cur, rest[j])) continue;
      extended = true;
      cur.push_back(rest[j]);
      go(j + 1);
      cur.pop_back();
    }
    if (extended) return;
    for (Subset m : rest) {
      if (std::find(cur.begin(), cur.end(), m) == cur.end() && compatible(b, cur, m)) return;
    }
    NestedSet n = cur;
    std::sort(n.begin(), n.end());
    out.push_back(std::move(n));
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t vertex_count_formula(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("vertex_count_formula: n out of range");
  std::uint64_t a = 0, b = 0;
  std::uint64_t fact_n = 1;
  for (int i = 2; i <= n; ++i) fact_n *= static_cast<std::uint64_t>(i);
  std::uint64_t fact_i = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact_i *= static_cast<std::uint64_t>(i);
    a += binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)) * fact_i;
    b += fact_n / fact_i;
  }
  if (a != b) throw std::logic_error("vertex_count_formula: closed forms disagree");
  return a;
}

std::uint64_t delannoy_by_diagonals(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("delannoy_by_diagonals: negative argument");
  if (k > m) return 0;
  const auto size = static_cast<std::size_t>(m + 1);
  const auto dk = static_cast<std::size_t>(k + 1);
  // dp[x][y][d]
  std::vector<std::uint64_t> dp(size * size * dk, 0);
  auto at = [&](std::size_t x, std::size_t y, std::size_t d) -> std::uint64_t& { return dp[(x * size + y) * dk + d]; };
  at(0, 0, 0) = 1;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      for (std::size_t d = 0; d < dk; ++d) {
        std::uint64_t& v = at(x, y, d);
        if (x > 0) v += at(x - 1, y, d);
        if (y > 0) v += at(x, y - 1, d);
        if (x > 0 && y > 0 && d > 0) v += at(x - 1, y - 1, d - 1);
      }
  return at(size - 1, size - 1, static_cast<std::size_t>(k));
}

ConjectureReport conjecture_report(int n, const std::vector<std::size_t>& f_vector) {
  if (n < 1) throw std::invalid_argument("conjecture_report: n must be positive");
  ConjectureReport r;
  r.n = n;
  r.f_vector = f_vector;
  const auto m = static_cast<std::uint64_t>(n - 1);
  const std::size_t rows = std::max(f_vector.size(), static_cast<std::size_t>(n));
  r.formula_matches = r.delannoy_matches = true;
  for (std::size_t k = 0; k < rows; ++k) {
    ConjectureRow row;
    row.k = static_cast<int>(k);
    if (k < f_vector.size()) row.computed = f_vector[k];
    row.conjectured = binom(m, k) * binom(2 * m, m);
    row.delannoy = delannoy_by_diagonals(n - 1, static_cast<int>(k));
    row.formula_match = row.computed && *row.computed == row.conjectured;
    row.delannoy_match = row.computed && *row.computed == row.delannoy;
    r.formula_matches = r.formula_matches && row.formula_match;
    r.delannoy_matches = r.delannoy_matches && row.delannoy_match;
    r.rows.push_back(row);
  }
  return r;
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ConjectureRow& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"computed", row.computed ? nlohmann::json(*row.computed) : nlohmann::json(nullptr)},
                    {"conjectured", row.conjectured},
                    {"delannoy", row.delannoy},
                    {"formula_match", row.formula_match},
                    {"delannoy_match", row.delannoy_match}});
  }
  return {{"n", r.n},
          {"f_vector", r.f_vector},
          {"rows", rows},
          {"formula_matches", r.formula_matches},
          {"delannoy_matches", r.delannoy_matches}};
}

nlohmann::json nested_to_json(const NestedSet& n) {
  nlohmann::json arr = nlohmann::json::array();
  for (Subset s : n) arr.push_back(elements_of(s));
  return arr;
}

nlohmann::json to_json(const SetFamily& f) { return {{"ground", f.ground}, {"members", nested_to_json(f.members)}}; }

}  // namespace ncpoly::nested
