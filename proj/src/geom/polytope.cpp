#include "ncpoly/geom/polytope.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ncpoly/geom/lp.hpp"
#include "ncpoly/linalg.hpp"

namespace ncpoly::geom {

LatticePolytope LatticePolytope::from_vertices_unchecked(std::size_t ambient_dim,
                                                         std::vector<RatVec> vertices) {
  for (const RatVec& v : vertices) {
    if (v.size() != ambient_dim) throw std::invalid_argument("vertex dimension mismatch");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  LatticePolytope p;
  p.ambient_dim_ = ambient_dim;
  p.vertices_ = std::move(vertices);
  return p;
}

bool LatticePolytope::has_vertex(const RatVec& p) const { return vertex_index(p).has_value(); }

std::optional<std::size_t> LatticePolytope::vertex_index(const RatVec& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

const std::vector<Halfspace>& LatticePolytope::facets() const {
  if (!facets_) throw std::logic_error("polytope has no facet description yet");
  return *facets_;
}

const std::vector<Halfspace>& LatticePolytope::equalities() const {
  if (!facets_) throw std::logic_error("polytope has no facet description yet");
  return equalities_;
}

void LatticePolytope::set_halfspaces(std::vector<Halfspace> facets,
                                     std::vector<Halfspace> equalities) {
  facets_ = std::move(facets);
  equalities_ = std::move(equalities);
}

namespace {

void check_dims(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  for (const RatVec& p : points) {
    if (p.size() != points.front().size()) {
      throw std::invalid_argument("points have different dimensions");
    }
  }
}

// Is p in conv(others)? Phase-one LP on the convex-combination weights.
bool in_hull(const RatVec& p, const std::vector<const RatVec*>& others) {
  if (others.empty()) return false;
  const std::size_t d = p.size();
  std::vector<RatVec> a(d + 1, RatVec(others.size(), Rat(0)));
  RatVec b(d + 1, Rat(0));
  for (std::size_t j = 0; j < others.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = (*others[j])[i] - p[i];
    a[d][j] = 1;
  }
  b[d] = 1;
  return solve_standard_form(a, b, RatVec(others.size(), Rat(0))).status == LpStatus::kOptimal;
}

}  // namespace

bool is_extreme(const RatVec& p, std::span<const RatVec> points) {
  std::vector<const RatVec*> others;
  for (const RatVec& q : points) {
    if (q != p) others.push_back(&q);
  }
  return !in_hull(p, others);
}

LatticePolytope extreme_points(std::vector<RatVec> points) {
  check_dims(points);
  const std::size_t d = points.front().size();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return LatticePolytope::from_vertices_unchecked(d, std::move(points));

  // A unique maximizer of a linear functional is certainly extreme.
  std::vector<bool> certified(n, false);
  certified.front() = certified.back() = true;  // lexicographic extremes
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  const std::size_t trials = std::min<std::size_t>(4 * n, 400);
  RatVec w(d);
  for (std::size_t t = 0; t < trials; ++t) {
    for (Rat& x : w) x = coeff(rng);
    std::size_t best = 0;
    bool unique = true;
    Rat best_val = dot(w, points[0]);
    for (std::size_t i = 1; i < n; ++i) {
      Rat v = dot(w, points[i]);
      if (v > best_val) {
        best_val = v;
        best = i;
        unique = true;
      } else if (v == best_val) {
        unique = false;
      }
    }
    if (unique) certified[best] = true;
  }

  // Dropping a non-extreme point never changes the hull, so test against the
  // survivors only.
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    if (certified[i]) continue;
    std::vector<const RatVec*> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && alive[j]) others.push_back(&points[j]);
    }
    if (in_hull(points[i], others)) alive[i] = false;
  }
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) verts.push_back(std::move(points[i]));
  }
  return LatticePolytope::from_vertices_unchecked(d, std::move(verts));
}

LatticePolytope extreme_points(const std::vector<IntVec>& points) {
  std::vector<RatVec> r;
  r.reserve(points.size());
  for (const IntVec& p : points) r.push_back(to_rat(p));
  return extreme_points(std::move(r));
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t c = 0;
  for (std::uint64_t x : a) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

struct Ray {
  std::vector<mpz_class> v;
  Bits tight;
};

void normalize(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const mpz_class& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (mpz_class& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

mpz_class eval(const std::vector<mpz_class>& h, const std::vector<mpz_class>& ray) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h[i]) != 0 && sgn(ray[i]) != 0) s += h[i] * ray[i];
  }
  return s;
}

// Extreme rays of {y : h_i · y >= 0} for rows h_i = (1, p_i) scaled to
// integers, where the p_i affinely span R^r. Each ray (c, a) is a facet
// a·x + c >= 0.
std::vector<std::vector<mpz_class>> facet_rays(const std::vector<RatVec>& pts, std::size_t r) {
  const std::size_t k = pts.size();
  const std::size_t words = (k + 63) / 64;
  std::vector<std::vector<mpz_class>> h(k);
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class l = 1;
    for (const Rat& x : pts[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    h[i].push_back(l);
    for (const Rat& x : pts[i]) h[i].push_back(x.get_num() * (l / x.get_den()));
  }

  // Initial simplex from r+1 affinely independent points.
  std::vector<std::size_t> chosen;
  std::vector<RatVec> basis_rows;
  for (std::size_t i = 0; i < k && chosen.size() < r + 1; ++i) {
    RatVec row;
    for (const mpz_class& x : h[i]) row.emplace_back(x);
    basis_rows.push_back(row);
    if (rref(basis_rows, r + 1).pivots.size() == basis_rows.size()) {
      chosen.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (chosen.size() != r + 1) throw std::logic_error("facet_rays: points not full-dimensional");

  // Columns of the inverse of the chosen rows are the initial rays.
  std::vector<RatVec> aug(r + 1, RatVec(2 * (r + 1), Rat(0)));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j <= r; ++j) aug[i][j] = basis_rows[i][j];
    aug[i][r + 1 + i] = 1;
  }
  const Rref inv = rref(std::move(aug), 2 * (r + 1));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= r; ++j) {
    RatVec col(r + 1);
    for (std::size_t i = 0; i <= r; ++i) col[i] = inv.rows[i][r + 1 + j];
    mpz_class l = 1;
    for (const Rat& x : col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Ray ray;
    for (const Rat& x : col) ray.v.push_back(x.get_num() * (l / x.get_den()));
    normalize(ray.v);
    ray.tight.assign(words, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      if (i != j) ray.tight[chosen[i] / 64] |= std::uint64_t{1} << (chosen[i] % 64);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(k, false);
  for (std::size_t c : chosen) done[c] = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (done[c]) continue;
    std::vector<mpz_class> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = eval(h[c], rays[i].v);
      if (sgn(val[i]) > 0) pos.push_back(i);
      if (sgn(val[i]) < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].tight[c / 64] |= std::uint64_t{1} << (c % 64);
      }
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].tight[w] & rays[q].tight[w];
        if (r >= 1 && popcount(common) + 1 < r) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t != p && t != q && subset_of(common, rays[t].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
          nr.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        }
        normalize(nr.v);
        nr.tight = std::move(common);
        nr.tight[c / 64] |= std::uint64_t{1} << (c % 64);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) > 0) next.push_back(std::move(rays[i]));
      else if (sgn(val[i]) == 0) {
        rays[i].tight[c / 64] |= std::uint64_t{1} << (c % 64);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }
  std::vector<std::vector<mpz_class>> out;
  for (Ray& ray : rays) out.push_back(std::move(ray.v));
  return out;
}

Rat min_value(const IntVec& normal, const std::vector<RatVec>& verts) {
  Rat best = dot(normal, verts.front());
  for (const RatVec& v : verts) best = std::min(best, dot(normal, v));
  return best;
}

// Rank representatives of a facet normal modulo the equalities: fewer
// negative entries, then fewer nonzeros, then lexicographically larger.
bool better(const IntVec& a, const IntVec& b) {
  auto neg = [](const IntVec& v) { return std::count_if(v.begin(), v.end(), [](long long x) { return x < 0; }); };
  auto nz = [](const IntVec& v) { return std::count_if(v.begin(), v.end(), [](long long x) { return x != 0; }); };
  if (neg(a) != neg(b)) return neg(a) < neg(b);
  if (nz(a) != nz(b)) return nz(a) < nz(b);
  return a > b;
}

IntVec canonical_normal(IntVec n, const std::vector<Halfspace>& eqs) {
  for (int pass = 0; pass < 4; ++pass) {
    bool improved = false;
    for (const Halfspace& e : eqs) {
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (e.normal[i] == 0 || n[i] == 0) continue;
        const Rat mu = Rat(static_cast<long>(n[i])) / Rat(static_cast<long>(e.normal[i]));
        RatVec cand(n.size());
        for (std::size_t j = 0; j < n.size(); ++j) {
          cand[j] = Rat(static_cast<long>(n[j])) - mu * Rat(static_cast<long>(e.normal[j]));
        }
        bool zero = std::all_of(cand.begin(), cand.end(), [](const Rat& x) { return sgn(x) == 0; });
        if (zero) continue;
        IntVec c = primitive_integer_multiple(cand);
        if (better(c, n)) {
          n = std::move(c);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return n;
}

}  // namespace

LatticePolytope hull_halfspaces(const LatticePolytope& p) {
  const std::vector<RatVec>& verts = p.vertices();
  if (verts.empty()) throw std::invalid_argument("hull_halfspaces: empty polytope");
  const std::size_t d = p.ambient_dim();

  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    RatVec v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = verts[i][j] - verts[0][j];
    diffs.push_back(std::move(v));
  }
  const Rref span = rref(diffs, d);

  // Equalities: a canonical basis of the orthogonal complement.
  std::vector<Halfspace> eqs;
  const Rref comp = rref(nullspace(span.rows, d), d);
  for (const RatVec& row : comp.rows) {
    IntVec nrm = primitive_integer_multiple(row);
    eqs.push_back({nrm, dot(nrm, verts[0])});
  }

  std::vector<Halfspace> facets;
  const std::size_t r = span.pivots.size();
  if (r > 0) {
    std::vector<RatVec> proj;
    for (const RatVec& v : verts) {
      RatVec q;
      for (std::size_t c : span.pivots) q.push_back(v[c]);
      proj.push_back(std::move(q));
    }
    for (const auto& ray : facet_rays(proj, r)) {
      RatVec full(d, Rat(0));
      for (std::size_t i = 0; i < r; ++i) full[span.pivots[i]] = ray[i + 1];
      IntVec nrm = canonical_normal(primitive_integer_multiple(full), eqs);
      facets.push_back({nrm, min_value(nrm, verts)});
    }
    std::sort(facets.begin(), facets.end());
  }
  LatticePolytope out = p;
  out.set_halfspaces(std::move(facets), std::move(eqs));
  return out;
}

bool satisfies(const Halfspace& h, const RatVec& x, bool equality) {
  const Rat v = dot(h.normal, x);
  return equality ? v == h.offset : v >= h.offset;
}

std::vector<std::size_t> tight_vertices(const LatticePolytope& p, const Halfspace& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    if (dot(h.normal, p.vertices()[i]) == h.offset) out.push_back(i);
  }
  return out;
}

LatticePolytope apply_affine(const LatticePolytope& p, const IntMatrix& m,
                             const IntVec& translation) {
  if (m.cols() != p.ambient_dim() || translation.size() != m.rows()) {
    throw std::invalid_argument("apply_affine: dimension mismatch");
  }
  std::vector<RatVec> image;
  for (const RatVec& v : p.vertices()) {
    RatVec w = m * v;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += static_cast<long>(translation[i]);
    image.push_back(std::move(w));
  }
  if (m.rows() == m.cols() && determinant(m) != 0) {
    return LatticePolytope::from_vertices_unchecked(m.rows(), std::move(image));
  }
  return extreme_points(std::move(image));
}

LatticePolytope translate(const LatticePolytope& p, const RatVec& shift) {
  if (shift.size() != p.ambient_dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<RatVec> out;
  for (const RatVec& v : p.vertices()) {
    RatVec w = v;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += shift[i];
    out.push_back(std::move(w));
  }
  return LatticePolytope::from_vertices_unchecked(p.ambient_dim(), std::move(out));
}

LatticePolytope project(const LatticePolytope& p, std::span<const std::size_t> coords) {
  std::vector<RatVec> out;
  for (const RatVec& v : p.vertices()) {
    RatVec w;
    for (std::size_t c : coords) {
      if (c >= v.size()) throw std::invalid_argument("project: coordinate out of range");
      w.push_back(v[c]);
    }
    out.push_back(std::move(w));
  }
  if (out.empty()) return LatticePolytope::from_vertices_unchecked(coords.size(), {});
  return extreme_points(std::move(out));
}

namespace {

nlohmann::json rat_json(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return format_rat(q);
}

Rat json_rat(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("polytope JSON: expected integer or \"num/den\" string");
}

nlohmann::json halfspaces_json(const std::vector<Halfspace>& hs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Halfspace& h : hs) arr.push_back({{"normal", h.normal}, {"offset", rat_json(h.offset)}});
  return arr;
}

std::vector<Halfspace> json_halfspaces(const nlohmann::json& arr) {
  std::vector<Halfspace> out;
  for (const auto& h : arr) out.push_back({h.at("normal").get<IntVec>(), json_rat(h.at("offset"))});
  return out;
}

}  // namespace

nlohmann::json to_json(const LatticePolytope& p) {
  nlohmann::json j;
  j["dim"] = p.ambient_dim();
  nlohmann::json verts = nlohmann::json::array();
  for (const RatVec& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rat& x : v) row.push_back(format_rat(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  if (p.has_facets()) {
    j["facets"] = halfspaces_json(p.facets());
    j["equalities"] = halfspaces_json(p.equalities());
  }
  return j;
}

LatticePolytope polytope_from_json(const nlohmann::json& j) {
  const std::size_t d = j.at("dim").get<std::size_t>();
  std::vector<RatVec> verts;
  for (const auto& row : j.at("vertices")) {
    RatVec v;
    for (const auto& x : row) v.push_back(json_rat(x));
    if (v.size() != d) throw std::invalid_argument("polytope JSON: vertex dimension mismatch");
    verts.push_back(std::move(v));
  }
  LatticePolytope p = LatticePolytope::from_vertices_unchecked(d, std::move(verts));
  if (j.contains("facets")) {
    p.set_halfspaces(json_halfspaces(j.at("facets")),
                     j.contains("equalities") ? json_halfspaces(j.at("equalities"))
                                              : std::vector<Halfspace>{});
  }
  return p;
}

}  // namespace ncpoly::geom
