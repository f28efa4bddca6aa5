#include "ncpoly/toric/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpoly::toric {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

long long degree(const Monomial& a) {
  long long d = 0;
  for (long long x : a) d += x;
  return d;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::string monomial_string(const Monomial& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

Binomial::Binomial(IntVec u) : u_(std::move(u)) {
  auto nz = std::find_if(u_.begin(), u_.end(), [](long long x) { return x != 0; });
  if (nz == u_.end()) throw std::invalid_argument("binomial exponent vector is zero");
  if (*nz < 0) {
    for (long long& x : u_) x = -x;
  }
}

Binomial Binomial::from_terms(const Monomial& plus, const Monomial& minus) {
  if (plus.size() != minus.size()) throw std::invalid_argument("binomial terms differ in length");
  IntVec u(plus.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (plus[i] < 0 || minus[i] < 0) throw std::invalid_argument("negative exponent");
    if (plus[i] != 0 && minus[i] != 0) throw std::invalid_argument("binomial terms share a variable");
    u[i] = plus[i] - minus[i];
  }
  return Binomial(std::move(u));
}

Monomial Binomial::plus() const {
  Monomial m(u_.size());
  for (std::size_t i = 0; i < u_.size(); ++i) m[i] = std::max(u_[i], 0LL);
  return m;
}

Monomial Binomial::minus() const {
  Monomial m(u_.size());
  for (std::size_t i = 0; i < u_.size(); ++i) m[i] = std::max(-u_[i], 0LL);
  return m;
}

long long Binomial::degree() const { return toric::degree(plus()); }

std::string to_string(const Binomial& b) {
  return monomial_string(b.plus()) + " - " + monomial_string(b.minus());
}

nlohmann::json to_json(const Binomial& b) { return {{"plus", b.plus()}, {"minus", b.minus()}}; }

Binomial binomial_from_json(const nlohmann::json& j) {
  return Binomial::from_terms(j.at("plus").get<IntVec>(), j.at("minus").get<IntVec>());
}

Binomial make_binomial(std::size_t num_vars, std::initializer_list<int> plus,
                       std::initializer_list<int> minus) {
  Monomial p(num_vars, 0), m(num_vars, 0);
  for (int i : plus) p.at(static_cast<std::size_t>(i - 1))++;
  for (int i : minus) m.at(static_cast<std::size_t>(i - 1))++;
  return Binomial::from_terms(p, m);
}

WeightOrder WeightOrder::from_rational(const RatVec& w) {
  if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return sgn(x) == 0; })) {
    return WeightOrder(IntVec(w.size(), 0));
  }
  return WeightOrder(primitive_integer_multiple(w));
}

bool WeightOrder::greater(const Monomial& a, const Monomial& b) const {
  if (!w_.empty()) {
    long long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += w_[i] * a[i];
      wb += w_[i] * b[i];
    }
    if (wa != wb) return wa > wb;
  }
  const long long da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

nlohmann::json to_json(const MonomialIdeal& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Monomial& g : m.generators()) arr.push_back(monomial_string(g));
  return arr;
}

}  // namespace ncpoly::toric
