#include "polydual/registry.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual {

namespace {

IntVec4 vec4_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) throw BadInput(path + ": expected 4 integers");
    return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]), int_from_json(j[3])};
}

IntVec3 vec3_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) throw BadInput(path + ": expected 3 integers");
    return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

std::vector<IntVec3> vertex_list_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw BadInput(path + ": expected a vertex list");
    std::vector<IntVec3> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(vec3_at(j[i], path + "/" + std::to_string(i)));
    return out;
}

CaseSide side_from_json(const json& j, const std::string& path) {
    for (const char* key : {"yonemura_no", "weights", "degree", "basis", "monomials", "newton_vertices"})
        if (!j.contains(key)) throw BadInput(path + ": missing field \"" + key + "\"");

    WeightSystem4 weight(vec4_at(j["weights"], path + "/weights"), int_from_json(j["degree"]));

    const auto& jb = j["basis"];
    if (!jb.is_array() || jb.size() != 3) throw BadInput(path + "/basis: expected 3 rows");
    LatticeBasis basis{{vec4_at(jb[0], path + "/basis/0"), vec4_at(jb[1], path + "/basis/1"),
                        vec4_at(jb[2], path + "/basis/2")}};
    if (!spans_kernel_lattice(basis, weight.a))
        throw BadInput(path + "/basis: does not span the kernel lattice of the weight");

    std::vector<Monomial4> monos;
    const auto& jm = j["monomials"];
    if (!jm.is_array() || jm.empty()) throw BadInput(path + "/monomials: expected a list");
    for (std::size_t i = 0; i < jm.size(); ++i) {
        const auto& row = jm[i];
        if (!row.is_array() || row.size() != 4)
            throw BadInput(path + "/monomials/" + std::to_string(i) + ": expected 4 exponents");
        monos.push_back({int_from_json(row[0]), int_from_json(row[1]), int_from_json(row[2]),
                         int_from_json(row[3])});
    }
    CaseSide side{j["yonemura_no"].get<int>(), weight, basis,
                  WeightedPolynomial(weight, std::move(monos)),
                  vertex_list_at(j["newton_vertices"], path + "/newton_vertices")};

    LatticePolytope newton = newton_polytope(side.F, side.basis);
    std::vector<IntVec3> stored = side.newton_vertices;
    std::sort(stored.begin(), stored.end());
    if (newton.vertices() != stored)
        throw BadInput(path + "/newton_vertices: disagree with the polynomial's Newton polytope");
    return side;
}

}  // namespace

Registry registry_from_json(const json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw BadInput("/schema: unsupported registry schema");
    if (!j.contains("cases") || !j["cases"].is_array())
        throw BadInput("/cases: missing");
    Registry reg;
    for (std::size_t i = 0; i < j["cases"].size(); ++i) {
        const auto& jc = j["cases"][i];
        std::string path = "/cases/" + std::to_string(i);
        CaseRecord rec{jc.at("case").get<int>(),
                       jc.at("self_coupled").get<bool>(),
                       jc.at("expected_count").get<int>(),
                       side_from_json(jc.at("side_a"), path + "/side_a"),
                       side_from_json(jc.at("side_b"), path + "/side_b"),
                       {}};

        LatticePolytope ambient_a = ambient_polytope(rec.side_a.weight, rec.side_a.basis);
        LatticePolytope ambient_b = ambient_polytope(rec.side_b.weight, rec.side_b.basis);
        const auto& jp = jc.at("expected_pairs");
        for (std::size_t e = 0; e < jp.size(); ++e) {
            std::string ppath = path + "/expected_pairs/" + std::to_string(e);
            auto a = vertex_list_at(jp[e].at("delta"), ppath + "/delta");
            auto b = vertex_list_at(jp[e].at("delta_prime"), ppath + "/delta_prime");
            if (!ambient_a.contains(LatticePolytope(a)))
                throw BadInput(ppath + "/delta: not contained in the ambient polytope");
            if (!ambient_b.contains(LatticePolytope(b)))
                throw BadInput(ppath + "/delta_prime: not contained in the ambient polytope");
            rec.expected_pairs.emplace_back(std::move(a), std::move(b));
        }
        reg.cases.push_back(std::move(rec));
    }
    if (j.contains("isomorphisms")) {
        for (std::size_t i = 0; i < j["isomorphisms"].size(); ++i) {
            const auto& ji = j["isomorphisms"][i];
            std::string path = "/isomorphisms/" + std::to_string(i);
            IsoRecord iso;
            iso.label = ji.at("label").get<std::string>();
            const auto& jm = ji.at("matrix");
            if (!jm.is_array() || jm.size() != 3) throw BadInput(path + "/matrix: expected 3 rows");
            for (int r = 0; r < 3; ++r) iso.matrix[r] = vec3_at(jm[r], path + "/matrix");
            iso.source = vertex_list_at(ji.at("source_vertices"), path + "/source_vertices");
            iso.target = vertex_list_at(ji.at("target_vertices"), path + "/target_vertices");
            reg.isomorphisms.push_back(std::move(iso));
        }
    }
    return reg;
}

Registry load_registry(const std::string& path) {
    return registry_from_json(load_json_file(path));
}

json case_report_to_json(const CaseReport& rep, const CaseRecord& rec) {
    json pairs = json::array();
    for (const auto& pr : rep.pairs) {
        json m = json::array();
        for (const auto& row : pr.witness.matrix) m.push_back(to_json(row));
        pairs.push_back(json{{"delta", to_json(pr.delta)["vertices"]},
                             {"delta_prime", to_json(pr.delta_prime)["vertices"]},
                             {"witness", m}});
    }
    json extra = json::array();
    for (auto i : rep.extra) extra.push_back(pairs[i]);
    json missing = json::array();
    for (auto e : rep.missing) {
        json verts_a = json::array(), verts_b = json::array();
        for (const auto& v : rec.expected_pairs[e].first) verts_a.push_back(to_json(v));
        for (const auto& v : rec.expected_pairs[e].second) verts_b.push_back(to_json(v));
        missing.push_back(json{{"delta", verts_a}, {"delta_prime", verts_b}});
    }
    return json{{"case", rep.case_no},
                {"pairs", pairs},
                {"expected_found", rep.expected_found},
                {"expected_count", rep.expected_count},
                {"found_count", rep.pairs.size()},
                {"enumerated", json::array({rep.enum_a, rep.enum_b})},
                {"extra", extra},
                {"missing", missing},
                {"millis", rep.millis}};
}

}  // namespace polydual
