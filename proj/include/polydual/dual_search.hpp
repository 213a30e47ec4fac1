#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydual/lattice_iso.hpp"
#include "polydual/wps.hpp"

namespace polydual {

// Reflexive pair related through the polar dual: witness maps the polar
// dual of delta onto delta_prime.
struct DualPair {
    LatticePolytope delta;
    LatticePolytope delta_prime;
    UnimodularMap witness;
};

// All distinct reflexive polytopes P with inner <= P <= outer.  Vertices of
// any such P are lattice points of outer, so the search walks the closure
// of `inner` under adding one candidate point at a time, deduplicating by
// canonical vertex set; the number of distinct hulls stays small even when
// the candidate count is in the dozens.  Throws NotContained.
std::vector<LatticePolytope> enumerate_reflexive_between(const LatticePolytope& inner,
                                                         const LatticePolytope& outer);

// All (P, Q) in listA x listB with hull(polar_dual(P)) unimodularly
// isomorphic to Q, each with its witness.  When the two lists are equal the
// case is self-coupled and pairs are reported unordered ((P, P) allowed).
// Throws NonReflexiveInput.
std::vector<DualPair> find_dual_pairs(const std::vector<LatticePolytope>& listA,
                                      const std::vector<LatticePolytope>& listB);

// One numbered case: both weight systems with their lattice bases and
// polynomials, plus the expected dual pairs.
struct CaseSide {
    int yonemura_no;
    WeightSystem4 weight;
    LatticeBasis basis;
    WeightedPolynomial F;
    std::vector<IntVec3> newton_vertices;  // must equal newton_polytope(F)
};

struct CaseRecord {
    int case_no;
    bool self_coupled;
    int expected_count;
    CaseSide side_a;
    CaseSide side_b;
    std::vector<std::pair<std::vector<IntVec3>, std::vector<IntVec3>>> expected_pairs;
};

struct CaseReport {
    int case_no = 0;
    std::vector<DualPair> pairs;
    bool expected_found = false;        // every expected pair is present
    std::size_t n_expected = 0;
    int expected_count = 0;
    std::vector<std::size_t> extra;     // indices into pairs not expected
    std::vector<std::size_t> missing;   // indices into expected_pairs not found
    std::size_t enum_a = 0, enum_b = 0; // sandwiched reflexive polytopes per side
    std::int64_t millis = 0;

    bool matches_expectation() const {
        return expected_found && (expected_count > 0) == !pairs.empty();
    }
};

// Builds Newton polytopes and ambients from the record, enumerates both
// sides, matches dual pairs and compares against the expected list.
CaseReport verify_case(const CaseRecord& record);

}  // namespace polydual
