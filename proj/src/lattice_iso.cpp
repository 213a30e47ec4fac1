#include "polydual/lattice_iso.hpp"

#include <algorithm>
#include <set>

namespace polydual {

Fingerprint invariant_fingerprint(const LatticePolytope& p) {
    Fingerprint fp;
    fp.n_vertices = p.vertices().size();
    fp.n_facets = p.facets().size();
    auto pts = lattice_points(p);
    fp.n_lattice_points = pts.size();
    for (const auto& f : p.facets()) {
        Int count = 0;
        for (const auto& x : pts) {
            if (dot(f.normal, x) != -f.offset) continue;
            bool on_other = false;
            for (const auto& g : p.facets()) {
                if (&g == &f) continue;
                if (dot(g.normal, x) == -g.offset) { on_other = true; break; }
            }
            if (!on_other) ++count;
        }
        fp.facet_interior_counts.push_back(count);
    }
    std::sort(fp.facet_interior_counts.begin(), fp.facet_interior_counts.end());
    for (const auto& x : pts)
        for (const auto& f : p.facets())
            if (dot(f.normal, x) == -f.offset) {
                ++fp.n_boundary_points;
                break;
            }
    for (const auto& [a, b] : edges(p))
        fp.edge_interior_counts.push_back(segment_interior_points(a, b));
    std::sort(fp.edge_interior_counts.begin(), fp.edge_interior_counts.end());
    return fp;
}

namespace {

// solve M * t_i = c_i for rows of M by Cramer; nullopt if non-integer
std::optional<IntMatrix3> solve_map(const std::array<IntVec3, 3>& t,
                                    const std::array<IntVec3, 3>& c) {
    IntMatrix3 T{t[0], t[1], t[2]};
    Int d = det3(T);
    IntMatrix3 m{};
    for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) {
            IntMatrix3 Ti = T;
            for (int i = 0; i < 3; ++i) Ti[i][col] = c[i][r];
            Int num = det3(Ti);
            if (num % d != 0) return std::nullopt;
            m[r][col] = num / d;
        }
    }
    return m;
}

}  // namespace

std::optional<UnimodularMap> find_unimodular_map(const LatticePolytope& p,
                                                 const LatticePolytope& q) {
    if (invariant_fingerprint(p) != invariant_fingerprint(q)) return std::nullopt;
    const auto& vp = p.vertices();
    const auto& vq = q.vertices();
    if (vp.size() != vq.size()) return std::nullopt;

    // one linearly independent triple of p (exists: p is full-dimensional
    // and, in every use here, contains the origin in its interior)
    std::array<IntVec3, 3> trip{};
    bool found = false;
    for (std::size_t i = 0; i < vp.size() && !found; ++i)
        for (std::size_t j = i + 1; j < vp.size() && !found; ++j)
            for (std::size_t k = j + 1; k < vp.size() && !found; ++k)
                if (det3({vp[i], vp[j], vp[k]}) != 0) {
                    trip = {vp[i], vp[j], vp[k]};
                    found = true;
                }
    if (!found) return std::nullopt;

    std::set<IntVec3> qset(vq.begin(), vq.end());
    const std::size_t n = vq.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                auto m = solve_map(trip, {vq[a], vq[b], vq[c]});
                if (!m || !is_unimodular(*m)) continue;
                bool ok = true;
                for (const auto& v : vp)
                    if (!qset.count(mat_vec(*m, v))) { ok = false; break; }
                if (ok) return UnimodularMap{*m};
            }
    return std::nullopt;
}

bool verify_map(const UnimodularMap& m, const LatticePolytope& p, const LatticePolytope& q) {
    if (!is_unimodular(m.matrix)) return false;
    std::vector<IntVec3> img;
    img.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) img.push_back(m(v));
    std::sort(img.begin(), img.end());
    return img == q.vertices();
}

}  // namespace polydual
