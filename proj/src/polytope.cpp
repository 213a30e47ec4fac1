#include "polydual/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "polydual/errors.hpp"

namespace polydual {

namespace {

// The facet scan is cubic in the number of points, which never exceeds a
// few dozen here.  Coordinates in this problem are tiny, so the scan runs
// on int64 whenever that provably cannot overflow and falls back to
// unbounded integers otherwise.

constexpr std::int64_t kSmall = 1 << 15;

struct V64 {
    std::int64_t x, y, z;
};

inline V64 sub64(const V64& a, const V64& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline V64 cross64(const V64& a, const V64& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline std::int64_t dot64(const V64& a, const V64& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { std::int64_t t = a % b; a = b; b = t; }
    return a;
}

bool small_coords(const std::vector<IntVec3>& pts) {
    for (const auto& p : pts)
        for (const auto& c : p)
            if (c > kSmall || c < -kSmall) return false;
    return true;
}

std::vector<Facet> facet_scan64(const std::vector<IntVec3>& pts) {
    std::vector<V64> q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        q[i] = {pts[i][0].convert_to<std::int64_t>(),
                pts[i][1].convert_to<std::int64_t>(),
                pts[i][2].convert_to<std::int64_t>()};
    std::set<std::pair<std::array<std::int64_t, 3>, std::int64_t>> out;
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                V64 nrm = cross64(sub64(q[j], q[i]), sub64(q[k], q[i]));
                if (nrm.x == 0 && nrm.y == 0 && nrm.z == 0) continue;
                std::int64_t g = gcd64(gcd64(nrm.x, nrm.y), nrm.z);
                nrm = {nrm.x / g, nrm.y / g, nrm.z / g};
                std::int64_t base = dot64(nrm, q[i]);
                bool lo = false, hi = false;
                for (const auto& p : q) {
                    std::int64_t d = dot64(nrm, p) - base;
                    if (d > 0) hi = true;
                    else if (d < 0) lo = true;
                    if (lo && hi) break;
                }
                if (lo && hi) continue;
                if (lo) { nrm = {-nrm.x, -nrm.y, -nrm.z}; base = -base; }
                out.insert({{nrm.x, nrm.y, nrm.z}, -base});
            }
    std::vector<Facet> facets;
    facets.reserve(out.size());
    for (const auto& [nrm, off] : out)
        facets.push_back(Facet{{Int(nrm[0]), Int(nrm[1]), Int(nrm[2])}, Int(off)});
    return facets;
}

std::vector<Facet> facet_scan_big(const std::vector<IntVec3>& pts) {
    std::set<Facet> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                IntVec3 nrm = primitive(cross(sub(pts[j], pts[i]), sub(pts[k], pts[i])));
                if (nrm == IntVec3{0, 0, 0}) continue;
                Int base = dot(nrm, pts[i]);
                bool lo = false, hi = false;
                for (const auto& p : pts) {
                    Int d = dot(nrm, p) - base;
                    if (d > 0) hi = true;
                    else if (d < 0) lo = true;
                    if (lo && hi) break;
                }
                if (lo && hi) continue;
                if (lo) { nrm = neg(nrm); base = -base; }
                out.insert(Facet{nrm, -base});
            }
    return {out.begin(), out.end()};
}

std::vector<Facet> facet_scan(const std::vector<IntVec3>& pts) {
    return small_coords(pts) ? facet_scan64(pts) : facet_scan_big(pts);
}

bool rank3(const std::vector<Facet>& through) {
    for (std::size_t a = 0; a + 2 < through.size(); ++a)
        for (std::size_t b = a + 1; b + 1 < through.size(); ++b)
            for (std::size_t c = b + 1; c < through.size(); ++c)
                if (det3({through[a].normal, through[b].normal, through[c].normal}) != 0)
                    return true;
    return false;
}

bool full_dimensional(const std::vector<IntVec3>& pts) {
    if (pts.size() < 4) return false;
    const IntVec3& p0 = pts[0];
    std::vector<IntVec3> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec3 d = sub(pts[i], p0);
        if (d != IntVec3{0, 0, 0}) dirs.push_back(d);
    }
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
            for (std::size_t c = b + 1; c < dirs.size(); ++c)
                if (det3({dirs[a], dirs[b], dirs[c]}) != 0) return true;
    return false;
}

}  // namespace

LatticePolytope::LatticePolytope(const std::vector<IntVec3>& points) {
    std::vector<IntVec3> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (!full_dimensional(pts))
        throw Degenerate("point set does not affinely span rank 3");
    facets_ = facet_scan(pts);
    for (const auto& p : pts) {
        std::vector<Facet> through;
        for (const auto& f : facets_)
            if (dot(f.normal, p) == -f.offset) through.push_back(f);
        if (through.size() >= 3 && rank3(through)) verts_.push_back(p);
    }
    // facets were computed from the full point set; vertices alone span the
    // same hull, so nothing else to recompute
}

bool LatticePolytope::contains(const IntVec3& p) const {
    for (const auto& f : facets_)
        if (dot(f.normal, p) < -f.offset) return false;
    return true;
}

bool LatticePolytope::contains(const LatticePolytope& other) const {
    for (const auto& v : other.verts_)
        if (!contains(v)) return false;
    return true;
}

bool LatticePolytope::origin_interior() const {
    for (const auto& f : facets_)
        if (f.offset <= 0) return false;
    return true;
}

LatticePolytope hull(const std::vector<IntVec3>& points) {
    return LatticePolytope(points);
}

LatticePolytope extend(const LatticePolytope& base, const IntVec3& p) {
    std::vector<IntVec3> pts = base.vertices();
    pts.push_back(p);
    return LatticePolytope(pts);
}

RationalPolytope polar_dual(const LatticePolytope& p) {
    if (!p.origin_interior())
        throw OriginNotInterior("polar dual is unbounded: origin not strictly interior");
    RationalPolytope d;
    for (const auto& f : p.facets())
        d.vertices.push_back({make_rat(f.normal[0], f.offset),
                              make_rat(f.normal[1], f.offset),
                              make_rat(f.normal[2], f.offset)});
    std::sort(d.vertices.begin(), d.vertices.end());
    return d;
}

bool is_reflexive(const LatticePolytope& p) {
    for (const auto& f : p.facets())
        if (f.offset != 1) return false;
    return true;
}

LatticePolytope dual_lattice_polytope(const LatticePolytope& p) {
    if (!is_reflexive(p))
        throw NonReflexiveInput("polar dual is not integral");
    std::vector<IntVec3> verts;
    for (const auto& f : p.facets()) verts.push_back(f.normal);
    return LatticePolytope(verts);
}

std::vector<IntVec3> lattice_points(const LatticePolytope& p) {
    long long lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
        lo[i] = std::numeric_limits<long long>::max();
        hi[i] = std::numeric_limits<long long>::min();
        for (const auto& v : p.vertices()) {
            long long c = v[i].convert_to<long long>();
            lo[i] = std::min(lo[i], c);
            hi[i] = std::max(hi[i], c);
        }
    }
    std::vector<IntVec3> out;
    for (long long x = lo[0]; x <= hi[0]; ++x)
        for (long long y = lo[1]; y <= hi[1]; ++y)
            for (long long z = lo[2]; z <= hi[2]; ++z) {
                IntVec3 q{x, y, z};
                if (p.contains(q)) out.push_back(q);
            }
    return out;
}

RatVec3 facet_dual_vertex(const LatticePolytope& p, std::size_t facet_index) {
    if (facet_index >= p.facets().size())
        throw BadInput("facet index out of range");
    const Facet& f = p.facets()[facet_index];
    if (!p.origin_interior())
        throw OriginNotInterior("facet dual vertex needs the origin interior");
    return {make_rat(f.normal[0], f.offset), make_rat(f.normal[1], f.offset),
            make_rat(f.normal[2], f.offset)};
}

std::vector<std::pair<IntVec3, IntVec3>> edges(const LatticePolytope& p) {
    std::vector<std::pair<IntVec3, IntVec3>> out;
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            std::vector<const Facet*> common;
            for (const auto& f : p.facets())
                if (dot(f.normal, vs[i]) == -f.offset && dot(f.normal, vs[j]) == -f.offset)
                    common.push_back(&f);
            bool edge = false;
            for (std::size_t a = 0; a < common.size() && !edge; ++a)
                for (std::size_t b = a + 1; b < common.size() && !edge; ++b)
                    if (cross(common[a]->normal, common[b]->normal) != IntVec3{0, 0, 0})
                        edge = true;
            if (edge) out.emplace_back(vs[i], vs[j]);
        }
    return out;
}

Int segment_interior_points(const IntVec3& a, const IntVec3& b) {
    return content(sub(b, a)) - 1;
}

std::vector<Int> edge_interior_counts(const LatticePolytope& p, const IntVec3& vertex) {
    const auto& vs = p.vertices();
    if (std::find(vs.begin(), vs.end(), vertex) == vs.end())
        throw NotAVertex("not a vertex of the polytope");
    std::vector<Int> counts;
    for (const auto& [a, b] : edges(p))
        if (a == vertex || b == vertex)
            counts.push_back(segment_interior_points(a, b));
    std::sort(counts.begin(), counts.end());
    return counts;
}

}  // namespace polydual
