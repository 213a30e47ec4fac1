#pragma once

#include <optional>

#include "polydual/intlinalg.hpp"
#include "polydual/polytope.hpp"

namespace polydual {

// Integer linear map with determinant +-1; a lattice automorphism.  All
// isomorphisms here are linear, not affine: reflexive polytopes carry the
// origin as their canonical interior point and every map fixes it.
struct UnimodularMap {
    IntMatrix3 matrix;

    IntVec3 operator()(const IntVec3& v) const { return mat_vec(matrix, v); }
};

// GL(3,Z)-invariant data used as a pre-filter for the isomorphism search:
// vertex, facet, lattice-point and boundary-point counts plus the sorted
// per-facet relative-interior point counts and per-edge interior counts.
struct Fingerprint {
    std::size_t n_vertices = 0;
    std::size_t n_facets = 0;
    std::size_t n_lattice_points = 0;
    std::size_t n_boundary_points = 0;
    std::vector<Int> facet_interior_counts;
    std::vector<Int> edge_interior_counts;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint invariant_fingerprint(const LatticePolytope& p);

// Returns a map m with |det m| = 1 and m(p) = q (vertex-set equality) if
// one exists.  Search: fingerprint pre-filter, then one fixed linearly
// independent vertex triple of p against all ordered vertex triples of q,
// solving each linear system exactly; first match in lexicographic triple
// order, so the result is deterministic.
std::optional<UnimodularMap> find_unimodular_map(const LatticePolytope& p,
                                                 const LatticePolytope& q);

// true iff m is unimodular and maps p's vertex set onto q's
bool verify_map(const UnimodularMap& m, const LatticePolytope& p, const LatticePolytope& q);

}  // namespace polydual
