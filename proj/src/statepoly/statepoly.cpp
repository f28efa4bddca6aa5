#include "ncpoly/statepoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "ncpoly/geom/lp.hpp"
#include "ncpoly/toric/graver.hpp"
#include "ncpoly/toric/groebner.hpp"
#include "ncpoly/toric/matrices.hpp"

namespace ncpoly::statepoly {

using geom::Constraint;
using geom::Sense;
using toric::Monomial;

namespace {

RatVec diff(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

std::optional<IntVec> margin_weight(const std::vector<Constraint>& cons, std::size_t dim) {
  if (cons.empty()) return IntVec(dim, 0);
  auto w = geom::lp_feasible(cons, dim);
  if (!w) return std::nullopt;
  return primitive_integer_multiple(*w);
}

// Unique argmax index of w over vs, if any.
std::optional<std::size_t> unique_argmax(const std::vector<RatVec>& vs, const IntVec& w) {
  std::optional<std::size_t> best;
  Rat best_val;
  bool tie = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Rat val = dot(w, vs[i]);
    if (!best || val > best_val) {
      best = i;
      best_val = val;
      tie = false;
    } else if (val == best_val) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

std::vector<std::size_t> argmax_set(const std::vector<RatVec>& vs, const IntVec& w) {
  std::vector<std::size_t> out;
  Rat best;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Rat val = dot(w, vs[i]);
    if (out.empty() || val > best) {
      out.assign(1, i);
      best = val;
    } else if (val == best) {
      out.push_back(i);
    }
  }
  return out;
}

void enumerate_degree(std::size_t vars, long long d, Monomial& cur, std::size_t pos,
                      const std::function<void(const Monomial&)>& f) {
  if (pos + 1 == vars) {
    cur[pos] = d;
    f(cur);
    cur[pos] = 0;
    return;
  }
  for (long long k = d; k >= 0; --k) {
    cur[pos] = k;
    enumerate_degree(vars, d - k, cur, pos + 1, f);
  }
  cur[pos] = 0;
}

// Σ_{d=1}^{D} Σ { a : |a| = d, t^a ∈ ideal }
IntVec ideal_degree_sum(const toric::MonomialIdeal& ideal, std::size_t vars, long long max_deg) {
  IntVec sum(vars, 0);
  if (vars == 0) return sum;
  Monomial cur(vars, 0);
  for (long long d = 1; d <= max_deg; ++d) {
    enumerate_degree(vars, d, cur, 0, [&](const Monomial& a) {
      if (ideal.contains(a))
        for (std::size_t i = 0; i < vars; ++i) sum[i] += a[i];
    });
  }
  return sum;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

StatePolytopeResult assemble(std::vector<StateVertex> sv, std::size_t ambient, std::size_t newton_count) {
  std::vector<RatVec> pts;
  for (const StateVertex& s : sv) pts.push_back(s.point);
  StatePolytopeResult res;
  res.polytope = geom::extreme_points(pts);
  res.newton_vertices = newton_count;
  if (res.polytope.ambient_dim() != ambient) throw std::logic_error("state polytope dimension");
  std::map<RatVec, StateVertex> by_point;
  for (StateVertex& s : sv) {
    auto [it, fresh] = by_point.emplace(s.point, s);
    if (!fresh && it->second.ideal != s.ideal) {
      throw std::logic_error("two initial ideals produced the same state vertex");
    }
  }
  for (const RatVec& v : res.polytope.vertices()) res.vertices.push_back(by_point.at(v));
  return res;
}

}  // namespace

WeightedPolytope minkowski_weighted(std::span<const LatticePolytope> ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski: no summands");
  const std::size_t dim = ps.front().ambient_dim();
  for (const LatticePolytope& p : ps) {
    if (p.ambient_dim() != dim) throw std::invalid_argument("minkowski: dimension mismatch");
    if (p.num_vertices() == 0) throw std::invalid_argument("minkowski: empty summand");
  }

  struct Partial {
    RatVec point;
    std::vector<std::size_t> parts;
    IntVec weight;
  };

  // Constraints w·(p_i - p') >= 1 for every summand i and every other vertex p'.
  auto constraints = [&](const std::vector<std::size_t>& parts) {
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& vs = ps[i].vertices();
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k != parts[i]) cons.push_back({diff(vs[parts[i]], vs[k]), Sense::kGreaterEqual, Rat(1)});
      }
    }
    return cons;
  };

  std::vector<Partial> cur{{RatVec(dim, Rat(0)), {}, IntVec(dim, 0)}};
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const auto& qs = ps[j].vertices();
    std::vector<Partial> next;
    for (const Partial& s : cur) {
      const auto fast = unique_argmax(qs, s.weight);
      for (std::size_t k = 0; k < qs.size(); ++k) {
        std::vector<std::size_t> parts = s.parts;
        parts.push_back(k);
        IntVec w;
        if (fast && *fast == k) {
          w = s.weight;
        } else {
          auto lw = margin_weight(constraints(parts), dim);
          if (!lw) continue;
          w = std::move(*lw);
        }
        next.push_back({add(s.point, qs[k]), std::move(parts), std::move(w)});
      }
    }
    cur = std::move(next);
  }

  std::sort(cur.begin(), cur.end(), [](const Partial& a, const Partial& b) { return a.point < b.point; });
  std::vector<RatVec> verts;
  WeightedPolytope out;
  for (Partial& p : cur) {
    verts.push_back(p.point);
    out.weights.push_back(std::move(p.weight));
  }
  out.polytope = LatticePolytope::from_vertices_unchecked(dim, std::move(verts));
  return out;
}

LatticePolytope minkowski(std::span<const LatticePolytope> ps) { return minkowski_weighted(ps).polytope; }

WeightedPolytope newton_weighted(std::span<const toric::Binomial> g) {
  if (g.empty()) throw std::invalid_argument("newton: empty binomial set");
  std::vector<LatticePolytope> segs;
  for (const toric::Binomial& b : g) segs.push_back(geom::extreme_points(std::vector<IntVec>{b.plus(), b.minus()}));
  return minkowski_weighted(segs);
}

LatticePolytope newton(std::span<const toric::Binomial> g) { return newton_weighted(g).polytope; }

IntVec normal_cone_weight(const LatticePolytope& p, const RatVec& v) {
  const auto idx = p.vertex_index(v);
  if (!idx) throw std::invalid_argument("normal_cone_weight: not a vertex");
  const auto& vs = p.vertices();
  const std::size_t dim = p.ambient_dim();

  // Cutting planes: solve with a few margin constraints, add the violated ones.
  std::vector<Constraint> active;
  std::vector<bool> used(vs.size(), false);
  used[*idx] = true;
  for (std::size_t k = 0; k < vs.size() && active.size() < 2 * dim + 2; ++k) {
    if (used[k]) continue;
    used[k] = true;
    active.push_back({diff(v, vs[k]), Sense::kGreaterEqual, Rat(1)});
  }
  for (;;) {
    auto w = margin_weight(active, dim);
    if (!w) throw std::invalid_argument("normal_cone_weight: not a vertex");
    const Rat at_v = dot(*w, v);
    std::size_t added = 0;
    for (std::size_t k = 0; k < vs.size() && added < 32; ++k) {
      if (used[k] || dot(*w, vs[k]) < at_v) continue;
      used[k] = true;
      active.push_back({diff(v, vs[k]), Sense::kGreaterEqual, Rat(1)});
      ++added;
    }
    if (added == 0) {
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k != *idx && dot(*w, vs[k]) >= at_v) throw std::logic_error("normal_cone_weight: bad certificate");
      }
      return *w;
    }
  }
}

bool selects_uniquely(const LatticePolytope& p, const IntVec& w, const RatVec& v) {
  const auto best = unique_argmax(p.vertices(), w);
  return best && p.vertices()[*best] == v;
}

IntVec star_vertex_weight(const std::vector<int>& perm) {
  const auto n = static_cast<long long>(perm.size());
  IntVec w;
  for (int x : perm) w.push_back(x);
  for (int x : perm) w.push_back(n + 1 - x);
  return w;
}

StatePolytopeResult state_polytope_alg35(std::span<const toric::Binomial> ugb) {
  if (ugb.empty()) throw std::invalid_argument("state_polytope_alg35: empty basis");
  const std::size_t m = ugb.front().num_vars();
  long long max_deg = 0;
  for (const toric::Binomial& b : ugb) max_deg = std::max(max_deg, b.degree());
  const WeightedPolytope newt = newton_weighted(ugb);
  std::vector<StateVertex> sv;
  for (const IntVec& w : newt.weights) {
    toric::MonomialIdeal ideal = toric::initial_terms(ugb, toric::WeightOrder(w));
    sv.push_back({to_rat(ideal_degree_sum(ideal, m, max_deg)), w, std::move(ideal)});
  }
  return assemble(std::move(sv), m, newt.polytope.num_vertices());
}

StatePolytopeResult state_polytope_star_fast(int n) {
  if (n < 1) throw std::invalid_argument("state_polytope_star_fast: n must be positive");
  const auto ugb = toric::claimed_ugb_star(n);
  const auto m = static_cast<std::size_t>(2 * n);
  std::vector<StateVertex> sv;
  for (const auto& p : permutations(n)) {
    IntVec w = star_vertex_weight(p);
    toric::MonomialIdeal ideal = toric::initial_terms(ugb, toric::WeightOrder(w));
    sv.push_back({to_rat(ideal_degree_sum(ideal, m, 2)), w, std::move(ideal)});
  }
  const std::size_t count = sv.size();
  return assemble(std::move(sv), m, count);
}

std::vector<GrobnerFiber> grobner_fibers(const IntMatrix& m, std::span<const toric::Binomial> ugb) {
  std::set<IntVec> degrees;
  for (const toric::Binomial& b : ugb) degrees.insert(m * b.plus());
  std::vector<GrobnerFiber> out;
  for (const IntVec& b : degrees) out.push_back({b, geom::extreme_points(toric::fiber(m, b))});
  return out;
}

LatticePolytope state_polytope_fibers(const IntMatrix& m, std::span<const toric::Binomial> ugb) {
  std::vector<LatticePolytope> hulls;
  for (GrobnerFiber& f : grobner_fibers(m, ugb)) hulls.push_back(std::move(f.hull));
  if (hulls.empty()) throw std::invalid_argument("state_polytope_fibers: no Gröbner degrees");
  return minkowski(hulls);
}

LatticePolytope permutohedron(int n) {
  if (n < 1) throw std::invalid_argument("permutohedron: n must be positive");
  std::vector<IntVec> pts;
  for (const auto& p : permutations(n)) pts.emplace_back(p.begin(), p.end());
  return geom::extreme_points(pts);
}

LatticePolytope simplex(std::size_t dim, const std::vector<int>& s) {
  std::vector<IntVec> pts;
  for (int i : s) {
    if (i < 1 || static_cast<std::size_t>(i) > dim) throw std::invalid_argument("simplex: index out of range");
    IntVec e(dim, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    pts.push_back(std::move(e));
  }
  return geom::extreme_points(pts);
}

std::vector<std::vector<int>> index_family_qbar(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) out.push_back({i, n + 1});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j, n + 1});
  return out;
}

LatticePolytope qbar(int n) {
  if (n < 1) throw std::invalid_argument("qbar: n must be positive");
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<LatticePolytope> parts;
  for (const auto& s : index_family_qbar(n)) parts.push_back(simplex(dim, s));
  return minkowski(parts);
}

std::vector<RatVec> qbar_vertices_formula(int n) {
  std::set<RatVec> out;
  for (const auto& p : permutations(n)) {
    for (int i = 0; i <= n; ++i) {
      RatVec t;
      for (int x : p) t.emplace_back(x > i ? x : 0);
      t.emplace_back(i * (i + 1) / 2);
      out.insert(std::move(t));
    }
  }
  return {out.begin(), out.end()};
}

QbarHalfspaces qbar_halfspaces(int n) {
  if (n < 1) throw std::invalid_argument("qbar_halfspaces: n must be positive");
  const auto dim = static_cast<std::size_t>(n + 1);
  QbarHalfspaces h;
  auto add_set = [&](std::vector<int> s) {
    IntVec normal(dim, 0);
    for (int i : s) normal[static_cast<std::size_t>(i - 1)] = 1;
    const long long k = static_cast<long long>(s.size());
    const bool has_top = std::find(s.begin(), s.end(), n + 1) != s.end();
    h.inequalities.push_back({normal, Rat(static_cast<long>(has_top ? k * (k - 1) / 2 : 0))});
    h.sets.push_back(std::move(s));
  };
  for (int i = 1; i <= n; ++i) add_set({i});
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    s.push_back(n + 1);
    add_set(std::move(s));
  }
  h.equality = {IntVec(dim, 1), Rat(static_cast<long>(n) * (n + 1) / 2)};
  return h;
}

bool halfspaces_match(const QbarHalfspaces& h, const LatticePolytope& p) {
  if (p.equalities().size() != 1 || p.equalities().front() != h.equality) return false;
  std::set<std::vector<std::size_t>> facet_sets, listed_sets;
  for (const geom::Halfspace& f : p.facets()) facet_sets.insert(tight_vertices(p, f));
  for (const geom::Halfspace& s : h.inequalities) {
    for (const RatVec& v : p.vertices()) {
      if (!geom::satisfies(s, v, false)) return false;
    }
    if (std::find(p.facets().begin(), p.facets().end(), s) == p.facets().end()) return false;
    listed_sets.insert(tight_vertices(p, s));
  }
  return listed_sets.size() == h.inequalities.size() && listed_sets == facet_sets;
}

LatticePolytope stellohedron(int n) {
  if (n < 1) throw std::invalid_argument("stellohedron: n must be positive");
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<LatticePolytope> parts;
  for (int i = 1; i <= n + 1; ++i) parts.push_back(simplex(dim, {i}));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    s.push_back(n + 1);
    parts.push_back(simplex(dim, s));
  }
  return minkowski(parts);
}

std::pair<IntMatrix, IntVec> star_state_map(int n) {
  if (n < 1) throw std::invalid_argument("star_state_map: n must be positive");
  const auto k = static_cast<std::size_t>(n);
  IntMatrix l(2 * k, 2 * k, 0);
  for (std::size_t i = 0; i < 2 * k; ++i) l(i, i) = 1;
  for (std::size_t j = 0; j < k; ++j) l(j + k, j) = 1;
  IntVec v(2 * k, 0);
  for (std::size_t i = k; i < 2 * k; ++i) v[i] = n - 1;
  return {l, v};
}

bool is_simple(const LatticePolytope& p) {
  const std::size_t d = p.dimension();
  std::vector<std::size_t> count(p.num_vertices(), 0);
  for (const geom::Halfspace& f : p.facets())
    for (std::size_t i : tight_vertices(p, f)) ++count[i];
  return std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == d; });
}

bool in_weyl_chamber(const RatVec& x, const std::vector<int>& perm) {
  for (std::size_t k = 0; k + 1 < perm.size(); ++k) {
    if (x[static_cast<std::size_t>(perm[k] - 1)] > x[static_cast<std::size_t>(perm[k + 1] - 1)]) return false;
  }
  return true;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

bool weyl_chamber_check(const std::vector<int>& perm, const LatticePolytope& newt_un,
                        const LatticePolytope& pi_n) {
  RatVec x;
  for (int v : perm) x.emplace_back(v);
  if (!in_weyl_chamber(x, inverse_permutation(perm))) return false;
  IntVec w(perm.begin(), perm.end());
  if (!selects_uniquely(pi_n, w, x)) return false;
  const IntVec sw = star_vertex_weight(perm);
  RatVec vertex;
  for (long long c : sw) vertex.emplace_back(static_cast<long>(c - 1));
  return selects_uniquely(newt_un, sw, vertex);
}

bool weyl_chamber_check(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("weyl_chamber_check: not a permutation");
  }
  const auto u = toric::claimed_ugb_star(n);
  LatticePolytope newt = n >= 2 ? newton(u)
                                : LatticePolytope::from_vertices_unchecked(2, {RatVec{Rat(0), Rat(0)}});
  return weyl_chamber_check(perm, newt, permutohedron(n));
}

LatticePolytope reflect(const LatticePolytope& p) {
  std::vector<RatVec> vs;
  for (const RatVec& v : p.vertices()) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    vs.push_back(std::move(r));
  }
  std::sort(vs.begin(), vs.end());
  return LatticePolytope::from_vertices_unchecked(p.ambient_dim(), std::move(vs));
}

FanAgreement methods_agree(const LatticePolytope& alg35, const LatticePolytope& fibers,
                           std::size_t random_weights, std::uint64_t seed) {
  return compare_normal_fans(alg35, reflect(fibers), random_weights, seed);
}

FanAgreement compare_normal_fans(const LatticePolytope& a, const LatticePolytope& b,
                                 std::size_t random_weights, std::uint64_t seed) {
  FanAgreement res;
  if (a.ambient_dim() != b.ambient_dim()) {
    res.detail = "ambient dimensions differ";
    return res;
  }
  if (a.num_vertices() != b.num_vertices()) {
    res.detail = "vertex counts differ: " + std::to_string(a.num_vertices()) + " vs " +
                 std::to_string(b.num_vertices());
    return res;
  }
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const std::size_t nv = va.size();

  std::vector<IntVec> wa, wb;
  for (const RatVec& v : va) wa.push_back(normal_cone_weight(a, v));
  for (const RatVec& v : vb) wb.push_back(normal_cone_weight(b, v));

  std::vector<std::size_t> a_to_b(nv), b_to_a(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    auto j = unique_argmax(vb, wa[i]);
    auto k = unique_argmax(va, wb[i]);
    if (!j || !k) {
      res.detail = "a vertex weight of one polytope does not select a vertex of the other";
      return res;
    }
    a_to_b[i] = *j;
    b_to_a[i] = *k;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (b_to_a[a_to_b[i]] != i) {
      res.detail = "vertex correspondence is not a bijection";
      return res;
    }
  }

  auto agree_on = [&](const IntVec& w) {
    ++res.weights_tested;
    std::vector<std::size_t> sa = argmax_set(va, w), sb = argmax_set(vb, w);
    for (std::size_t& i : sa) i = a_to_b[i];
    std::sort(sa.begin(), sa.end());
    return sa == sb;
  };

  std::mt19937_64 rng(seed);
  auto pair_weight = [&](std::size_t i, std::size_t j) {
    IntVec w(wa[i].size());
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = wa[i][c] + wa[j][c];
    return w;
  };
  constexpr std::size_t kExhaustivePairs = 200;
  if (nv <= kExhaustivePairs) {
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (!agree_on(pair_weight(i, j))) {
          res.detail = "argmax sets differ on a vertex-pair weight";
          return res;
        }
      }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    for (std::size_t t = 0; t < kExhaustivePairs * kExhaustivePairs / 2; ++t) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i != j && !agree_on(pair_weight(i, j))) {
        res.detail = "argmax sets differ on a vertex-pair weight";
        return res;
      }
    }
  }
  std::uniform_int_distribution<long long> coef(-1000, 1000);
  for (std::size_t t = 0; t < random_weights; ++t) {
    IntVec w(a.ambient_dim());
    for (long long& c : w) c = coef(rng);
    if (!agree_on(w)) {
      res.detail = "argmax sets differ on a random weight";
      return res;
    }
  }
  res.agree = true;
  res.detail = std::to_string(nv) + " vertices matched";
  return res;
}

}  // namespace ncpoly::statepoly
