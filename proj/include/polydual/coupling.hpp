#pragma once

#include <vector>

#include "polydual/wps.hpp"

namespace polydual {

// Weight system (w1,w2,w3; d) for polynomials in three variables.  The
// weights are required to be primitive (gcd one overall); pairwise
// coprimality is deliberately not enforced, since coupled systems such as
// (3,4,4;12) carry a repeated factor in one pair.
struct WeightSystem3 {
    IntVec3 w;
    Int d;

    WeightSystem3(IntVec3 weights, Int degree);
};

using Monomial3 = std::array<Int, 3>;

// 3x3 nonnegative integer matrix; validity is relative to a pair of weight
// systems via the row/column sum relations.
struct MagicSquare {
    IntMatrix3 c;

    MagicSquare(IntMatrix3 entries);
    bool operator==(const MagicSquare& o) const { return c == o.c; }
};

// C . t(w1 w2 w3) = t(d d d) and (w'1 w'2 w'3) . C = (h h h)
bool is_weighted_magic_square(const MagicSquare& c, const WeightSystem3& w,
                              const WeightSystem3& w2);

// almost primitive: |det C| = (d - sum w)h = (h - sum w')d.
// Throws NotMagic when the square relations fail.
bool is_coupled(const MagicSquare& c, const WeightSystem3& w, const WeightSystem3& w2);

// coupled with a zero entry in every row and every column.
// Throws NotCoupled when is_coupled fails.
bool is_strongly_coupled(const MagicSquare& c, const WeightSystem3& w, const WeightSystem3& w2);

// f from the rows of C, f' from the columns
std::pair<std::vector<Monomial3>, std::vector<Monomial3>> polynomials_from_square(const MagicSquare& c);

// Exhaustive search for weighted magic squares with entries bounded by
// max(d, h); deterministic row-major order.
std::vector<MagicSquare> find_magic_squares(const WeightSystem3& w, const WeightSystem3& w2);

std::vector<MagicSquare> find_coupled_squares(const WeightSystem3& w, const WeightSystem3& w2);

// F = (f on the non-section variables) + (section variable)^(d / weight);
// restricting F to section = 0 recovers f.  The non-section variables of
// `target`, in order, must carry the weights of f's variables.
// Throws IndivisibleDegree when the section weight does not divide d.
WeightedPolynomial projectivise(const std::vector<Monomial3>& f, const WeightSystem3& fw,
                                const WeightSystem4& target, int section_variable);

// the f recovered by setting the section variable to zero (monomials not
// involving it), as exponents over the remaining three variables
std::vector<Monomial3> restrict_to_section_zero(const WeightedPolynomial& F, int section_variable);

// F' with exponent matrix the transpose of F's; requires exactly four
// monomials (a square exponent matrix) and validates the result is
// anticanonical for `target`.
WeightedPolynomial transpose_polynomial(const WeightedPolynomial& F, const WeightSystem4& target);

// section-variable pairs (i, j) with a_i * h = b_j * d: the candidate
// almost-primitive determinant values linking two anticanonical systems
std::vector<std::pair<int, int>> compatible_sections(const WeightSystem4& a, const WeightSystem4& b);

// drop one variable from an anticanonical 4-system: the 3-system of the
// remaining weights with the same degree
WeightSystem3 drop_variable(const WeightSystem4& a, int section_variable);

}  // namespace polydual
