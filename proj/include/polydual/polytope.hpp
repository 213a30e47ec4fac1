#pragma once

#include <cstdint>
#include <vector>

#include "polydual/geometry.hpp"

namespace polydual {

// Supporting plane <normal, x> >= -offset of a full-dimensional lattice
// polytope.  Normals are primitive; for integral vertices the offset of a
// primitive supporting plane is itself an integer.  The polytope contains
// the origin strictly iff every offset is positive, and is reflexive iff
// every offset equals one.
struct Facet {
    IntVec3 normal;
    Int offset;

    bool operator==(const Facet& o) const {
        return normal == o.normal && offset == o.offset;
    }
    bool operator<(const Facet& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

// Full-dimensional polytope in a rank-3 lattice.  Vertices are the extreme
// points, lexicographically sorted, so equal polytopes compare equal as
// vertex lists.  The H-representation is computed eagerly at construction;
// values are immutable afterwards and freely shareable across threads.
class LatticePolytope {
public:
    // convex hull of the given points; throws Degenerate if their affine
    // span has dimension < 3
    explicit LatticePolytope(const std::vector<IntVec3>& points);

    const std::vector<IntVec3>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const IntVec3& p) const;
    bool contains(const LatticePolytope& other) const;
    bool origin_interior() const;

    bool operator==(const LatticePolytope& o) const { return verts_ == o.verts_; }
    bool operator<(const LatticePolytope& o) const { return verts_ < o.verts_; }

private:
    std::vector<IntVec3> verts_;
    std::vector<Facet> facets_;
};

struct RationalPolytope {
    std::vector<RatVec3> vertices;  // sorted; extreme by construction
};

LatticePolytope hull(const std::vector<IntVec3>& points);

// hull of `base` and one extra lattice point (the enumeration work-horse)
LatticePolytope extend(const LatticePolytope& base, const IntVec3& p);

// {y : <y,x> >= -1 for all x in p}; vertices are facet normals divided by
// their offsets.  Throws OriginNotInterior when the dual is unbounded.
RationalPolytope polar_dual(const LatticePolytope& p);

// true iff every facet offset equals one (with the origin interior); for
// integral polytopes this is exactly integrality of the polar dual plus
// uniqueness of the interior lattice point
bool is_reflexive(const LatticePolytope& p);

// polar dual of a reflexive polytope as a lattice polytope
LatticePolytope dual_lattice_polytope(const LatticePolytope& p);

// all lattice points of p: bounding-box scan filtered through the H-rep
std::vector<IntVec3> lattice_points(const LatticePolytope& p);

RatVec3 facet_dual_vertex(const LatticePolytope& p, std::size_t facet_index);

// vertex pairs forming the edges of p
std::vector<std::pair<IntVec3, IntVec3>> edges(const LatticePolytope& p);

// lattice points strictly between the endpoints of a segment
Int segment_interior_points(const IntVec3& a, const IntVec3& b);

// for each edge incident to `vertex`, the number of lattice points strictly
// between its endpoints; sorted ascending.  Throws NotAVertex.
std::vector<Int> edge_interior_counts(const LatticePolytope& p, const IntVec3& vertex);

}  // namespace polydual
