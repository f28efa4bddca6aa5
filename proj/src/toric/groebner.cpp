#include "ncpoly/toric/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ncpoly::toric {

GbElement orient(const Monomial& a, const Monomial& b, const WeightOrder& ord) {
  return ord.greater(a, b) ? GbElement{a, b} : GbElement{b, a};
}

GbElement orient(const Binomial& b, const WeightOrder& ord) { return orient(b.plus(), b.minus(), ord); }

long long GroebnerBasis::max_degree() const {
  long long d = 0;
  for (const GbElement& e : elements) d = std::max({d, degree(e.lead), degree(e.trail)});
  return d;
}

std::vector<Binomial> GroebnerBasis::binomials() const {
  std::vector<Binomial> out;
  for (const GbElement& e : elements) {
    IntVec u(e.lead.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = e.lead[i] - e.trail[i];
    out.emplace_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial normal_form(const Monomial& m, std::span<const GbElement> g) {
  Monomial cur = m;
  for (long long steps = 0;; ++steps) {
    if (steps > kReductionStepCap) throw std::runtime_error("reduction step cap exceeded");
    auto hit = std::find_if(g.begin(), g.end(), [&](const GbElement& e) { return divides(e.lead, cur); });
    if (hit == g.end()) return cur;
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += hit->trail[i] - hit->lead[i];
  }
}

namespace {

std::optional<GbElement> reduce_pair(const Monomial& a, const Monomial& b, std::span<const GbElement> g,
                                     const WeightOrder& ord) {
  Monomial x = normal_form(a, g), y = normal_form(b, g);
  if (x == y) return std::nullopt;
  return orient(x, y, ord);
}

std::vector<GbElement> oriented(std::span<const Binomial> g, const WeightOrder& ord) {
  std::vector<GbElement> out;
  for (const Binomial& b : g) out.push_back(orient(b, ord));
  return out;
}

}  // namespace

std::optional<GbElement> reduce(const Binomial& b, std::span<const Binomial> g, const WeightOrder& ord) {
  const auto og = oriented(g, ord);
  return reduce_pair(b.plus(), b.minus(), og, ord);
}

std::optional<GbElement> reduce(const Binomial& b, const GroebnerBasis& g) {
  return reduce_pair(b.plus(), b.minus(), g.elements, g.order);
}

GroebnerBasis reduced_gb(std::span<const Binomial> gens, const WeightOrder& ord) {
  std::vector<GbElement> basis;
  for (const Binomial& b : gens) {
    if (auto r = reduce_pair(b.plus(), b.minus(), basis, ord)) basis.push_back(*r);
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const GbElement& f = basis[i];
    const GbElement& g = basis[j];
    if (coprime(f.lead, g.lead)) continue;
    const Monomial l = lcm(f.lead, g.lead);
    Monomial a = l, b = l;
    for (std::size_t v = 0; v < l.size(); ++v) {
      a[v] += f.trail[v] - f.lead[v];
      b[v] += g.trail[v] - g.lead[v];
    }
    if (auto r = reduce_pair(a, b, basis, ord)) {
      basis.push_back(*r);
      for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
  }

  // Keep one element per minimal lead.
  std::sort(basis.begin(), basis.end(), [&](const GbElement& x, const GbElement& y) {
    if (x.lead != y.lead) return ord.greater(y.lead, x.lead);
    return x.trail < y.trail;
  });
  std::vector<GbElement> minimal;
  for (const GbElement& e : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const GbElement& m) { return divides(m.lead, e.lead); });
    if (!redundant) minimal.push_back(e);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GbElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i].trail = normal_form(minimal[i].trail, others);
  }
  std::sort(minimal.begin(), minimal.end());
  return {std::move(minimal), ord, true};
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  std::vector<Monomial> leads;
  for (const GbElement& e : g.elements) leads.push_back(e.lead);
  return MonomialIdeal(std::move(leads));
}

MonomialIdeal initial_terms(std::span<const Binomial> u, const WeightOrder& ord) {
  std::vector<Monomial> leads;
  for (const Binomial& b : u) leads.push_back(orient(b, ord).lead);
  return MonomialIdeal(std::move(leads));
}

bool s_pairs_reduce_to_zero(std::span<const Binomial> g, const WeightOrder& ord) {
  const auto og = oriented(g, ord);
  for (std::size_t j = 0; j < og.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = lcm(og[i].lead, og[j].lead);
      Monomial a = l, b = l;
      for (std::size_t v = 0; v < l.size(); ++v) {
        a[v] += og[i].trail[v] - og[i].lead[v];
        b[v] += og[j].trail[v] - og[j].lead[v];
      }
      if (reduce_pair(a, b, og, ord)) return false;
    }
  return true;
}

nlohmann::json to_json(const GroebnerBasis& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GbElement& e : g.elements) arr.push_back({{"plus", e.lead}, {"minus", e.trail}});
  return {{"weight", g.order.weight()}, {"binomials", arr}};
}

}  // namespace ncpoly::toric
