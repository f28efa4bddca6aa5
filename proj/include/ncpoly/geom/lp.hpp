#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncpoly/rational.hpp"

namespace ncpoly::geom {

enum class Sense { kLessEqual, kGreaterEqual, kEqual, kLess, kGreater };

/// coeffs · x  (sense)  rhs
struct Constraint {
  RatVec coeffs;
  Sense sense = Sense::kGreaterEqual;
  Rat rhs;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVec x;
  Rat value;
};

/// maximize c·y subject to A y = b, y >= 0. Two-phase simplex with Bland's
/// rule, so the returned basic solution is a deterministic function of the input.
LpResult solve_standard_form(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

/// maximize objective·x over free variables x. Strict senses are rejected here.
LpResult lp_maximize(const RatVec& objective, std::span<const Constraint> constraints,
                     std::size_t dim);

/// Some point satisfying every constraint exactly, strict ones included, or
/// nullopt when the system is infeasible.
std::optional<RatVec> lp_feasible(std::span<const Constraint> constraints, std::size_t dim);

}  // namespace ncpoly::geom
