#pragma once

#include <vector>

#include "ncpoly/int_matrix.hpp"
#include "ncpoly/toric/binomial.hpp"

namespace ncpoly::toric {

/// All a >= 0 with M a = b. Throws std::invalid_argument without a
/// homogeneity witness, since the fiber could then be infinite.
std::vector<Monomial> fiber(const IntMatrix& m, const IntVec& b);

struct GraverResult {
  std::vector<Binomial> elements;  // sorted
  int degree_bound = 0;
  // Some element has degree == degree_bound, so completeness is not certified.
  bool hit_bound = false;
};

/// Primitive binomials of I_M up to the degree bound, by enumerating the
/// fibers of every degree. Throws std::invalid_argument for inhomogeneous M.
GraverResult graver(const IntMatrix& m, int degree_bound);

/// Same enumeration by a positive grading that is constant on fibers, such
/// as the column sums of a nonnegative matrix; the bound is in grading units.
GraverResult graver_graded(const IntMatrix& m, const IntVec& grading, int degree_bound);

/// Kernel vectors of minimal support (circuits), up to sign.
std::vector<Binomial> circuits(const IntMatrix& m);

}  // namespace ncpoly::toric
