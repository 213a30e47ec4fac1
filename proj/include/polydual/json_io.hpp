#pragma once

#include <string>

#include <json.hpp>

#include "polydual/polytope.hpp"
#include "polydual/wps.hpp"

namespace polydual {

using json = nlohmann::json;

// Coordinates, exponents and weights in the file formats are plain JSON
// integers; rational entries are [num, den] pairs with den > 0 and
// gcd(num, den) = 1.

json to_json(const IntVec3& v);
json to_json(const LatticePolytope& p);     // {"vertices": [[x,y,z], ...]}
json to_json(const RationalPolytope& p);    // {"vertices": [[[n,d],...], ...]}
json to_json(const WeightedPolynomial& f);  // {"weights":[a0..a3,d], "monomials":[[e0..e3],...]}

LatticePolytope polytope_from_json(const json& j);
WeightedPolynomial polynomial_from_json(const json& j);

json load_json_file(const std::string& path);

Int int_from_json(const json& j);
json int_to_json(const Int& v);

}  // namespace polydual
