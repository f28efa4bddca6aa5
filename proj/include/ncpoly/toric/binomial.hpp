#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncpoly/rational.hpp"

namespace ncpoly::toric {

// Exponent vector of a monomial t^a.
using Monomial = IntVec;

bool divides(const Monomial& a, const Monomial& b);
long long degree(const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
std::string monomial_string(const Monomial& a);  // "t1*t4^2", "1" for the unit

/// t^{u+} - t^{u-}, stored as u with the first nonzero entry positive.
class Binomial {
 public:
  explicit Binomial(IntVec u);
  static Binomial from_terms(const Monomial& plus, const Monomial& minus);

  const IntVec& u() const { return u_; }
  Monomial plus() const;
  Monomial minus() const;
  std::size_t num_vars() const { return u_.size(); }
  long long degree() const;  // degree of t^{u+}

  auto operator<=>(const Binomial&) const = default;

 private:
  IntVec u_;
};

std::string to_string(const Binomial& b);
nlohmann::json to_json(const Binomial& b);
Binomial binomial_from_json(const nlohmann::json& j);

// 1-based variable indices, as written in the text: t_1 t_4 - t_2 t_3.
Binomial make_binomial(std::size_t num_vars, std::initializer_list<int> plus,
                       std::initializer_list<int> minus);

/// Monomial order ≺_{w,σ}: compare w·a, then graded reverse lexicographic
/// with t_1 > t_2 > ... .
class WeightOrder {
 public:
  WeightOrder() = default;
  explicit WeightOrder(IntVec w) : w_(std::move(w)) {}
  // Rational weights are scaled to a primitive integer vector.
  static WeightOrder from_rational(const RatVec& w);
  static WeightOrder grevlex(std::size_t num_vars) { return WeightOrder(IntVec(num_vars, 0)); }

  const IntVec& weight() const { return w_; }
  // true iff a ≻ b
  bool greater(const Monomial& a, const Monomial& b) const;

 private:
  IntVec w_;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);  // minimalized and sorted

  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal&) const = default;
  auto operator<=>(const MonomialIdeal&) const = default;

 private:
  std::vector<Monomial> gens_;
};

nlohmann::json to_json(const MonomialIdeal& m);

}  // namespace ncpoly::toric
