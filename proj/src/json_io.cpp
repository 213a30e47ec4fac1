#include "polydual/json_io.hpp"

#include <fstream>

#include "polydual/errors.hpp"

namespace polydual {

Int int_from_json(const json& j) {
    if (!j.is_number_integer())
        throw BadInput("expected an integer, got " + j.dump());
    return Int(j.get<long long>());
}

json int_to_json(const Int& v) {
    // all quantities in the file formats are far below 2^63
    return json(v.convert_to<long long>());
}

json to_json(const IntVec3& v) {
    return json::array({int_to_json(v[0]), int_to_json(v[1]), int_to_json(v[2])});
}

json to_json(const LatticePolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    return json{{"vertices", verts}};
}

json to_json(const RationalPolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const auto& q : v)
            row.push_back(json::array({int_to_json(rat_num(q)), int_to_json(rat_den(q))}));
        verts.push_back(row);
    }
    return json{{"vertices", verts}};
}

json to_json(const WeightedPolynomial& f) {
    json ws = json::array();
    for (const auto& a : f.weight.a) ws.push_back(int_to_json(a));
    ws.push_back(int_to_json(f.weight.d));
    json monos = json::array();
    for (const auto& m : f.monomials) {
        json e = json::array();
        for (const auto& x : m) e.push_back(int_to_json(x));
        monos.push_back(e);
    }
    return json{{"weights", ws}, {"monomials", monos}};
}

LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw BadInput("polytope file needs a \"vertices\" array");
    std::vector<IntVec3> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != 3)
            throw BadInput("polytope vertex must be a triple of integers");
        pts.push_back({int_from_json(row[0]), int_from_json(row[1]), int_from_json(row[2])});
    }
    return LatticePolytope(pts);
}

WeightedPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("monomials"))
        throw BadInput("polynomial file needs \"weights\" and \"monomials\"");
    const auto& ws = j["weights"];
    if (!ws.is_array() || ws.size() != 5)
        throw BadInput("\"weights\" must be [a0,a1,a2,a3,d]");
    WeightSystem4 w({int_from_json(ws[0]), int_from_json(ws[1]), int_from_json(ws[2]),
                     int_from_json(ws[3])},
                    int_from_json(ws[4]));
    std::vector<Monomial4> monos;
    for (const auto& row : j["monomials"]) {
        if (!row.is_array() || row.size() != 4)
            throw BadInput("monomial must be a quadruple of exponents");
        monos.push_back({int_from_json(row[0]), int_from_json(row[1]), int_from_json(row[2]),
                         int_from_json(row[3])});
    }
    return WeightedPolynomial(std::move(w), std::move(monos));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw BadInput(path + ": " + e.what());
    }
    return j;
}

}  // namespace polydual
