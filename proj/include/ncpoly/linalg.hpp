#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncpoly/rational.hpp"

namespace ncpoly {

struct Rref {
  std::vector<RatVec> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; `cols` is needed when `m` may be empty.
Rref rref(std::vector<RatVec> m, std::size_t cols);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVec> nullspace(const std::vector<RatVec>& m, std::size_t cols);

// Some x with a x = b, or nullopt.
std::optional<RatVec> solve_linear(const std::vector<RatVec>& a, const RatVec& b,
                                   std::size_t cols);

}  // namespace ncpoly
