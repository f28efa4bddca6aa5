#include "ncpoly/rational.hpp"

#include <limits>
#include <stdexcept>

namespace ncpoly {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) { return q.get_str(); }

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += Rat(static_cast<long>(a[i])) * b[i];
  }
  return s;
}

long long dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (x.get_den() != 1) throw std::domain_error("coordinate is not an integer");
    if (!x.get_num().fits_slong_p()) throw std::domain_error("coordinate overflows");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

IntVec primitive_integer_multiple(const RatVec& v) {
  mpz_class l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(v.size());
  mpz_class g = 0;
  for (const Rat& x : v) {
    mpz_class s = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    scaled.push_back(s);
  }
  IntVec out;
  out.reserve(v.size());
  for (mpz_class& s : scaled) {
    if (g != 0) s /= g;
    if (!s.fits_slong_p()) throw std::domain_error("integer vector overflows");
    out.push_back(s.get_si());
  }
  return out;
}

}  // namespace ncpoly
