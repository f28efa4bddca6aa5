#pragma once

#include <cstddef>
#include <vector>

#include "ncpoly/geom/polytope.hpp"

namespace ncpoly::geom {

/// Faces of a polytope as vertex-index sets, together with the vertex-facet
/// incidence that determines the whole lattice.
struct FaceLattice {
  std::size_t num_vertices = 0;
  std::size_t dimension = 0;
  // incidence[f][v]: vertex v lies on facet f
  std::vector<std::vector<bool>> incidence;
  // f_vector[k] = number of k-dimensional faces, k = 0..dimension (last entry 1)
  std::vector<std::size_t> f_vector;
  // every nonempty face, sorted vertex indices
  std::vector<std::vector<std::size_t>> faces;

  // f_0 .. f_{dim-1}
  std::vector<std::size_t> proper_f_vector() const;
};

FaceLattice face_lattice(const LatticePolytope& p);

/// True iff the two vertex-facet incidence structures are isomorphic.
bool lattice_isomorphic(const FaceLattice& a, const FaceLattice& b);

}  // namespace ncpoly::geom
