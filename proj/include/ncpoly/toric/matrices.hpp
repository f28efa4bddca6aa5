#pragma once

#include <optional>
#include <vector>

#include "ncpoly/codes.hpp"
#include "ncpoly/int_matrix.hpp"
#include "ncpoly/toric/binomial.hpp"

namespace ncpoly::toric {

// Columns are the nonzero codewords in code order.
IntMatrix code_matrix(const codes::NeuralCode& c);

// Some w with a·w = 1 for every column a, or nullopt.
std::optional<RatVec> is_homogeneous(const IntMatrix& m);

IntMatrix lawrence(const IntMatrix& m);
// Syntactic check for the block shape [[A,0],[Id,Id]].
bool is_lawrence(const IntMatrix& m);

// The row operation A_{n+1} <- A_{n+1} - A_2 - ... - A_n on the star matrix.
IntMatrix row_transform_star(const IntMatrix& m);

bool has_consecutive_ones(const IntMatrix& m);

// Consecutive ones (rows or columns) answers at once; otherwise every square
// minor is checked, which is refused above 12 rows or columns.
bool is_totally_unimodular(const IntMatrix& m);
// Every square minor, no shortcuts. Refused above 12 rows or columns.
bool all_minors_unimodular(const IntMatrix& m);

// Nonzero maximal minors of a row basis all share one absolute value.
bool is_unimodular(const IntMatrix& m);

std::vector<Binomial> claimed_ugb_star(int n);  // U_n
std::vector<Binomial> claimed_ugb_pair(int n);  // V_n = V'_n ∪ V''_n
std::vector<Binomial> claimed_quadratics_pair(int n);  // V'_n

}  // namespace ncpoly::toric
