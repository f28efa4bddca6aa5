#include "ncpoly/geom/face_lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ncpoly/linalg.hpp"

namespace ncpoly::geom {

std::vector<std::size_t> FaceLattice::proper_f_vector() const {
  if (f_vector.empty()) return {};
  return {f_vector.begin(), f_vector.end() - 1};
}

namespace {

std::size_t affine_dim(const LatticePolytope& p, const std::vector<std::size_t>& face) {
  const auto& v = p.vertices();
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < face.size(); ++i) {
    RatVec d(p.ambient_dim());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = v[face[i]][j] - v[face[0]][j];
    diffs.push_back(std::move(d));
  }
  return rref(std::move(diffs), p.ambient_dim()).pivots.size();
}

}  // namespace

FaceLattice face_lattice(const LatticePolytope& input) {
  const LatticePolytope p = input.has_facets() ? input : hull_halfspaces(input);
  FaceLattice fl;
  fl.num_vertices = p.num_vertices();
  fl.dimension = p.dimension();

  std::vector<std::vector<std::size_t>> facet_sets;
  for (const Halfspace& h : p.facets()) {
    std::vector<bool> row(fl.num_vertices, false);
    std::vector<std::size_t> tight = tight_vertices(p, h);
    for (std::size_t v : tight) row[v] = true;
    fl.incidence.push_back(std::move(row));
    facet_sets.push_back(std::move(tight));
  }

  // Close the facets under intersection.
  std::vector<std::size_t> all(fl.num_vertices);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& f : facet_sets) {
    if (seen.insert(f).second) queue.push_back(f);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facet_sets) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  fl.f_vector.assign(fl.dimension + 1, 0);
  for (const auto& face : seen) {
    fl.f_vector[affine_dim(p, face)]++;
    fl.faces.push_back(face);
  }
  return fl;
}

bool lattice_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  if (a.num_vertices != b.num_vertices || a.dimension != b.dimension ||
      a.f_vector != b.f_vector || a.incidence.size() != b.incidence.size()) {
    return false;
  }
  const std::size_t nf = a.incidence.size();
  const std::size_t nv = a.num_vertices;
  auto size_of = [nv](const std::vector<bool>& row) {
    return static_cast<std::size_t>(std::count(row.begin(), row.begin() + static_cast<long>(nv), true));
  };
  auto meet = [nv](const std::vector<bool>& x, const std::vector<bool>& y) {
    std::size_t c = 0;
    for (std::size_t v = 0; v < nv; ++v) c += (x[v] && y[v]) ? 1 : 0;
    return c;
  };

  // Assign facets of a to facets of b; a vertex u of a may map to vertex w of
  // b only if u and w agree on every assigned facet pair.
  std::vector<std::size_t> image(nf, nf);
  std::vector<bool> used(nf, false);
  std::vector<std::vector<bool>> cand(nv, std::vector<bool>(nv, true));

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == nf) {
      std::vector<bool> taken(nv, false);
      for (std::size_t u = 0; u < nv; ++u) {
        std::size_t hit = nv;
        for (std::size_t w = 0; w < nv; ++w) {
          if (!cand[u][w]) continue;
          if (hit != nv) return false;  // vertex not determined by its facets
          hit = w;
        }
        if (hit == nv || taken[hit]) return false;
        taken[hit] = true;
      }
      return true;
    }
    for (std::size_t j = 0; j < nf; ++j) {
      if (used[j] || size_of(a.incidence[i]) != size_of(b.incidence[j])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = meet(a.incidence[i], a.incidence[k]) == meet(b.incidence[j], b.incidence[image[k]]);
      }
      if (!ok) continue;
      auto saved = cand;
      for (std::size_t u = 0; u < nv && ok; ++u) {
        bool any = false;
        for (std::size_t w = 0; w < nv; ++w) {
          if (cand[u][w] && a.incidence[i][u] != b.incidence[j][w]) cand[u][w] = false;
          any = any || cand[u][w];
        }
        ok = any;
      }
      if (ok) {
        used[j] = true;
        image[i] = j;
        if (extend(i + 1)) return true;
        used[j] = false;
      }
      cand = std::move(saved);
    }
    return false;
  };
  return extend(0);
}

}  // namespace ncpoly::geom
