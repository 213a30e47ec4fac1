#pragma once

#include <string>
#include <vector>

#include "polydual/dual_search.hpp"
#include "polydual/json_io.hpp"

namespace polydual {

// An isomorphism statement verified against the registry polytopes: the
// matrix maps the source vertex set onto the target vertex set.
struct IsoRecord {
    std::string label;
    IntMatrix3 matrix;
    std::vector<IntVec3> source;
    std::vector<IntVec3> target;
};

struct Registry {
    std::vector<CaseRecord> cases;
    std::vector<IsoRecord> isomorphisms;
};

// Parses and fully validates the case registry: weight systems are
// anticanonical and well-posed, bases span the kernel lattice of their
// weight, polynomials are anticanonical, stored Newton vertices agree with
// the polynomial's Newton polytope, and every expected polytope sits inside
// its ambient.  Validation failures carry the JSON path of the offending
// field.
Registry load_registry(const std::string& path);

Registry registry_from_json(const json& j);

json case_report_to_json(const CaseReport& rep, const CaseRecord& rec);

}  // namespace polydual
