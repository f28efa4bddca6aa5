#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

namespace ncpoly::nested {

// Bit i-1 stands for element i of the ground set [n].
using Subset = std::uint32_t;

Subset subset_of(const std::vector<int>& elements);
std::vector<int> elements_of(Subset s);

struct SetFamily {
  int ground = 0;
  std::vector<Subset> members;  // sorted, distinct, nonempty

  bool contains(Subset s) const;
  bool operator==(const SetFamily&) const = default;
};

// Throws std::invalid_argument on an empty set or an element outside [ground].
SetFamily make_family(int ground, const std::vector<std::vector<int>>& sets);

bool is_building_set(const SetFamily& f);

// Singletons plus every S whose members inside S overlap-connect and cover S.
SetFamily building_closure(const SetFamily& f);

// 𝓘_n on the ground set [n+1].
SetFamily index_family(int n);

using NestedSet = std::vector<Subset>;  // sorted

bool is_nested(const SetFamily& building, const NestedSet& n);

// Throws std::invalid_argument when the input is not a building set.
std::vector<NestedSet> maximal_nested_sets(const SetFamily& building);

// Σ binom(n,i) i!, checked against Σ n!/i!.
std::uint64_t vertex_count_formula(int n);

// Delannoy paths (0,0) -> (m,m) with exactly k diagonal steps.
std::uint64_t delannoy_by_diagonals(int m, int k);

struct ConjectureRow {
  int k = 0;
  std::optional<std::uint64_t> computed;
  std::uint64_t conjectured = 0;  // binom(n-1,k) binom(2(n-1),n-1)
  std::uint64_t delannoy = 0;
  bool formula_match = false;
  bool delannoy_match = false;
};

struct ConjectureReport {
  int n = 0;
  std::vector<std::size_t> f_vector;
  std::vector<ConjectureRow> rows;
  bool formula_matches = false;
  bool delannoy_matches = false;
};

// Observational: compares and never throws on a mismatch.
ConjectureReport conjecture_report(int n, const std::vector<std::size_t>& f_vector);

nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const SetFamily& f);
nlohmann::json nested_to_json(const NestedSet& n);

}  // namespace ncpoly::nested
