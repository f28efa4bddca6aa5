#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "ncpoly/int_matrix.hpp"
#include "ncpoly/rational.hpp"

namespace ncpoly::geom {

/// normal · x >= offset for facets, normal · x == offset for equalities.
struct Halfspace {
  IntVec normal;
  Rat offset;

  bool operator==(const Halfspace&) const = default;
  auto operator<=>(const Halfspace& o) const {
    if (normal != o.normal) return normal <=> o.normal;
    return offset < o.offset ? std::strong_ordering::less
         : offset > o.offset ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
  }
};

/// Convex hull of finitely many rational points. Vertices are always the
/// certified extreme points, sorted lexicographically.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  // Caller guarantees `vertices` are exactly the extreme points.
  static LatticePolytope from_vertices_unchecked(std::size_t ambient_dim,
                                                 std::vector<RatVec> vertices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool has_vertex(const RatVec& p) const;
  std::optional<std::size_t> vertex_index(const RatVec& p) const;

  bool has_facets() const { return facets_.has_value(); }
  const std::vector<Halfspace>& facets() const;
  const std::vector<Halfspace>& equalities() const;

  // Affine dimension; needs facets.
  std::size_t dimension() const { return ambient_dim_ - equalities().size(); }

  void set_halfspaces(std::vector<Halfspace> facets, std::vector<Halfspace> equalities);

  bool operator==(const LatticePolytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVec> vertices_;
  std::optional<std::vector<Halfspace>> facets_;
  std::vector<Halfspace> equalities_;
};

/// Exactly the extreme points of conv(points). Throws std::invalid_argument on
/// an empty list or mismatched dimensions.
LatticePolytope extreme_points(std::vector<RatVec> points);
LatticePolytope extreme_points(const std::vector<IntVec>& points);

/// Is p a vertex of conv(points)? Decided by the LP "p is a convex combination
/// of the other points".
bool is_extreme(const RatVec& p, std::span<const RatVec> points);

/// Facets and affine-hull equalities via double description over the affine hull.
LatticePolytope hull_halfspaces(const LatticePolytope& p);

bool satisfies(const Halfspace& h, const RatVec& x, bool equality);
std::vector<std::size_t> tight_vertices(const LatticePolytope& p, const Halfspace& h);

/// Image under x -> m x + translation.
LatticePolytope apply_affine(const LatticePolytope& p, const IntMatrix& m,
                             const IntVec& translation);

LatticePolytope translate(const LatticePolytope& p, const RatVec& shift);
LatticePolytope project(const LatticePolytope& p, std::span<const std::size_t> coords);

nlohmann::json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const nlohmann::json& j);

}  // namespace ncpoly::geom
