#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncpoly/geom/polytope.hpp"
#include "ncpoly/int_matrix.hpp"
#include "ncpoly/toric/binomial.hpp"

namespace ncpoly::statepoly {

using geom::LatticePolytope;

/// A Minkowski sum whose vertices each carry an integer weight w with
/// w·v > w·u for every other vertex u.
struct WeightedPolytope {
  LatticePolytope polytope;
  std::vector<IntVec> weights;  // aligned with polytope.vertices()
};

WeightedPolytope minkowski_weighted(std::span<const LatticePolytope> ps);
LatticePolytope minkowski(std::span<const LatticePolytope> ps);

// Minkowski sum of the segments [u+, u-].
WeightedPolytope newton_weighted(std::span<const toric::Binomial> g);
LatticePolytope newton(std::span<const toric::Binomial> g);

// Throws std::invalid_argument when v is not a vertex of P.
IntVec normal_cone_weight(const LatticePolytope& p, const RatVec& v);
bool selects_uniquely(const LatticePolytope& p, const IntVec& w, const RatVec& v);

// (π, π^c) for a permutation of 1..n.
IntVec star_vertex_weight(const std::vector<int>& perm);

struct StateVertex {
  RatVec point;
  IntVec weight;
  toric::MonomialIdeal ideal;
};

struct StatePolytopeResult {
  LatticePolytope polytope;
  std::vector<StateVertex> vertices;  // aligned with polytope.vertices()
  std::size_t newton_vertices = 0;
};

// The alg35 construction on a universal Gröbner basis.
StatePolytopeResult state_polytope_alg35(std::span<const toric::Binomial> ugb);

// For S_n: the weights (π,π^c) instead of LP weights; same output otherwise.
StatePolytopeResult state_polytope_star_fast(int n);

struct GrobnerFiber {
  IntVec degree;  // b = M u+
  LatticePolytope hull;
};
std::vector<GrobnerFiber> grobner_fibers(const IntMatrix& m, std::span<const toric::Binomial> ugb);
LatticePolytope state_polytope_fibers(const IntMatrix& m, std::span<const toric::Binomial> ugb);

LatticePolytope permutohedron(int n);

// Δ_S for S ⊆ [dim] given 1-based.
LatticePolytope simplex(std::size_t dim, const std::vector<int>& s);

std::vector<std::vector<int>> index_family_qbar(int n);  // 𝓘_n
LatticePolytope qbar(int n);
std::vector<RatVec> qbar_vertices_formula(int n);

struct QbarHalfspaces {
  std::vector<std::vector<int>> sets;       // S, 1-based
  std::vector<geom::Halfspace> inequalities;  // Σ_{i∈S} x_i >= z_S, aligned with sets
  geom::Halfspace equality;                 // Σ x_i = binom(n+1, 2)
};
QbarHalfspaces qbar_halfspaces(int n);

// Every listed inequality is valid and defines a facet of P, distinct
// inequalities give distinct facets, every facet of P is listed, the facet
// normals are the indicator vectors and the equality matches.
bool halfspaces_match(const QbarHalfspaces& h, const LatticePolytope& p_with_facets);

LatticePolytope stellohedron(int n);

// f(x) = L x - v.
std::pair<IntMatrix, IntVec> star_state_map(int n);

bool is_simple(const LatticePolytope& p_with_facets);

// x_{π_1} <= ... <= x_{π_n}
bool in_weyl_chamber(const RatVec& x, const std::vector<int>& perm);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

bool weyl_chamber_check(const std::vector<int>& perm);
bool weyl_chamber_check(const std::vector<int>& perm, const LatticePolytope& newt_un,
                        const LatticePolytope& pi_n);

// -P
LatticePolytope reflect(const LatticePolytope& p);

struct FanAgreement {
  bool agree = false;
  std::size_t weights_tested = 0;
  std::string detail;
};

// Behavioral normal-fan comparison: a vertex bijection from certified vertex
// weights, then identical argmax sets for all pairwise weight sums and for
// `random_weights` random integer weights.
FanAgreement compare_normal_fans(const LatticePolytope& a, const LatticePolytope& b,
                                 std::size_t random_weights, std::uint64_t seed);

// The fiber sum selects standard monomials, i.e. minimizes w, while the
// alg35 polytope maximizes; compares alg35 against -fibers.
FanAgreement methods_agree(const LatticePolytope& alg35, const LatticePolytope& fibers,
                           std::size_t random_weights, std::uint64_t seed);

}  // namespace ncpoly::statepoly
