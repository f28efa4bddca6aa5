#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ncpoly {

// GMP keeps every value in lowest terms with a positive denominator.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<long long>;

Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& q);

RatVec to_rat(const IntVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
long long dot(const IntVec& a, const IntVec& b);

bool is_integral(const RatVec& v);
// Throws std::domain_error when a coordinate is not an integer or overflows.
IntVec to_int(const RatVec& v);

// Smallest positive multiple of v with integer, coprime coordinates.
IntVec primitive_integer_multiple(const RatVec& v);

}  // namespace ncpoly
