#pragma once

#include <vector>

#include "polydual/intlinalg.hpp"
#include "polydual/polytope.hpp"

namespace polydual {

// Anticanonical weight system (a0..a3; d) with d = a0+a1+a2+a3.  Well-posed:
// every 3-subset of the weights is coprime.
struct WeightSystem4 {
    IntVec4 a;
    Int d;

    WeightSystem4(IntVec4 weights, Int degree);
};

bool is_well_posed(const IntVec4& a);

// exponent vector of a monomial in W, X, Y, Z
using Monomial4 = std::array<Int, 4>;

Int weighted_degree(const Monomial4& m, const WeightSystem4& w);

// Finite set of monomials, all of weighted degree d.
struct WeightedPolynomial {
    WeightSystem4 weight;
    std::vector<Monomial4> monomials;  // sorted, deduplicated

    WeightedPolynomial(WeightSystem4 w, std::vector<Monomial4> monos);
};

// lattice point of a degree-d monomial: exponents shifted by (1,1,1,1) land
// in the rank-3 lattice {x : a.x = 0}, then coordinates in the given basis
IntVec3 monomial_to_point(const Monomial4& m, const WeightSystem4& w, const LatticeBasis& basis);

Monomial4 point_to_monomial(const IntVec3& c, const LatticeBasis& basis);

LatticePolytope newton_polytope(const WeightedPolynomial& f, const LatticeBasis& basis);

// all monomials of weighted degree d, in lexicographic exponent order
std::vector<Monomial4> all_monomials(const WeightSystem4& w);

// hull of every degree-d monomial point: the defining polytope of the
// weighted projective space as a toric 3-fold
LatticePolytope ambient_polytope(const WeightSystem4& w, const LatticeBasis& basis);

}  // namespace polydual
