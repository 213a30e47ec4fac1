#pragma once

#include <optional>
#include <vector>

#include "polydual/geometry.hpp"

namespace polydual {

// Three integer 4-vectors spanning a rank-3 sublattice of Z^4.  The bases
// used here are always kernels of a weight vector: each row is orthogonal
// to the weight it was built for.
struct LatticeBasis {
    std::array<IntVec4, 3> rows;

    const IntVec4& operator[](std::size_t i) const { return rows[i]; }
};

Int det3_checked(const IntMatrix3& m);

inline bool is_unimodular(const IntMatrix3& m) {
    Int d = det3(m);
    return d == 1 || d == -1;
}

// Basis of {x in Z^4 : weight . x = 0}, Hermite-reduced so the result is
// canonical.  Rejects non-positive weights.
LatticeBasis kernel_basis(const IntVec4& weight);

// Unique integer coordinates c with c[0]*b0 + c[1]*b1 + c[2]*b2 = v.
// Throws NotInLattice when no integer solution exists.
IntVec3 express_in_basis(const IntVec4& v, const LatticeBasis& basis);

std::optional<IntVec3> try_express_in_basis(const IntVec4& v, const LatticeBasis& basis);

IntVec4 combine(const IntVec3& c, const LatticeBasis& basis);

// true iff the rows are independent and generate the full kernel lattice of
// `weight` (index one), with every row orthogonal to `weight`.
bool spans_kernel_lattice(const LatticeBasis& basis, const IntVec4& weight);

}  // namespace polydual
