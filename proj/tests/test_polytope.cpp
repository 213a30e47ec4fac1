#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "polydual/errors.hpp"
#include "polydual/polytope.hpp"
#include "test_helpers.hpp"

using namespace polydual;
using namespace polydual::testing;

TEST_CASE("hull keeps exactly the extreme points") {
    auto cube = unit_cube_pm1();
    CHECK(cube.vertices().size() == 8);

    auto simplex = make({{-1, -1, 1}, {-1, -1, -1}, {6, -1, -1}, {-1, 2, -1}});
    CHECK(simplex.vertices().size() == 4);

    auto p = make({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    std::vector<IntVec3> expect{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}, {2, 0, 0}};
    CHECK(p.vertices() == expect);
}

TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(make({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}), Degenerate);
    CHECK_THROWS_AS(make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), Degenerate);
    CHECK_THROWS_AS(make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), Degenerate);
}

TEST_CASE("polar dual of the workhorse simplex") {
    auto d14 = delta14();
    auto dual = polar_dual(d14);
    std::vector<RatVec3> expect{
        {Rat(-6), Rat(-14), Rat(-21)}, {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)},
        {Rat(1), Rat(0), Rat(0)}};
    CHECK(dual.vertices == expect);
}

TEST_CASE("polar dual of the cube is the octahedron") {
    auto dual = dual_lattice_polytope(unit_cube_pm1());
    std::vector<IntVec3> expect{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
                                {0, 0, 1},  {0, 1, 0},  {1, 0, 0}};
    CHECK(dual.vertices() == expect);
}

TEST_CASE("polar dual of the 5-vertex case") {
    // hull{(-1,-1,1),(-1,-1,-1),(4,-1,-1),(0,2,-1),(-1,2,-1)}
    auto p = make({{-1, -1, 1}, {-1, -1, -1}, {4, -1, -1}, {0, 2, -1}, {-1, 2, -1}});
    auto dual = dual_lattice_polytope(p);
    std::vector<IntVec3> expect{{-6, -8, -15}, {0, -2, -3}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(dual.vertices() == expect);
}

TEST_CASE("polar dual needs the origin strictly inside") {
    auto shifted = make({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK_THROWS_AS(polar_dual(shifted), OriginNotInterior);
    CHECK_FALSE(is_reflexive(shifted));
}

TEST_CASE("reflexivity") {
    CHECK(is_reflexive(delta14()));
    CHECK(is_reflexive(unit_cube_pm1()));
    CHECK(is_reflexive(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})));
    // replacing (-1,-1,-1) by (-1,-1,0) leaves a facet at lattice distance > 1
    CHECK_FALSE(is_reflexive(make({{-1, -1, 0}, {-1, -1, 1}, {6, -1, -1}, {-1, 2, -1}})));
}

TEST_CASE("lattice point counts") {
    auto unit_simplex = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(lattice_points(unit_simplex).size() == 4);

    CHECK(segment_interior_points({-1, -1, -1}, {6, -1, -1}) == 5);

    // independent oracle: monomials of weighted degree 42 in (1,6,14,21)
    long long monomials = 0;
    for (int j = 0; 6 * j <= 42; ++j)
        for (int k = 0; 6 * j + 14 * k <= 42; ++k)
            for (int l = 0; 6 * j + 14 * k + 21 * l <= 42; ++l) ++monomials;
    CHECK(monomials == 24);
    CHECK(lattice_points(delta14()).size() == static_cast<std::size_t>(monomials));
}

TEST_CASE("H-rep point filter agrees with V-rep membership") {
    std::vector<LatticePolytope> pool{
        delta14(), unit_cube_pm1(),
        make({{-1, -1, 1}, {-1, -1, -1}, {4, -1, -1}, {0, 2, -1}, {-1, 2, -1}}),
        make({{0, -1, 1}, {-1, -1, -1}, {3, -1, -1}, {-1, 2, -1}}),
        make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-3, -8, -12}})};
    for (const auto& p : pool) {
        std::set<IntVec3> via_hrep;
        for (const auto& q : lattice_points(p)) via_hrep.insert(q);
        long long lo[3], hi[3];
        for (int i = 0; i < 3; ++i) {
            lo[i] = 100; hi[i] = -100;
            for (const auto& v : p.vertices()) {
                lo[i] = std::min(lo[i], v[i].convert_to<long long>());
                hi[i] = std::max(hi[i], v[i].convert_to<long long>());
            }
        }
        for (long long x = lo[0]; x <= hi[0]; ++x)
            for (long long y = lo[1]; y <= hi[1]; ++y)
                for (long long z = lo[2]; z <= hi[2]; ++z) {
                    IntVec3 q{x, y, z};
                    CHECK(in_hull_vrep(p.vertices(), q) == (via_hrep.count(q) != 0));
                }
    }
}

TEST_CASE("facet dual vertices of the non-reflexive faces") {
    // the three faces whose dual vertices are non-integral, each embedded in
    // a host polytope inside the workhorse simplex
    auto host1 = make({{-1, -1, 0}, {-1, -1, 1}, {6, -1, -1}, {-1, 2, -1}});
    bool found = false;
    for (std::size_t i = 0; i < host1.facets().size(); ++i) {
        auto v = facet_dual_vertex(host1, i);
        if (v == RatVec3{Rat(3, 10), Rat(7, 10), Rat(21, 10)}) found = true;
    }
    CHECK(found);

    auto host2 = make({{-1, 0, -1}, {-1, -1, 1}, {6, -1, -1}, {-1, 2, -1}});
    found = false;
    for (std::size_t i = 0; i < host2.facets().size(); ++i)
        if (facet_dual_vertex(host2, i) == RatVec3{Rat(2, 9), Rat(14, 9), Rat(7, 9)}) found = true;
    CHECK(found);

    auto host3 = make({{0, -1, -1}, {-1, -1, 1}, {-1, 2, -1}, {6, -1, -1}});
    found = false;
    for (std::size_t i = 0; i < host3.facets().size(); ++i)
        if (facet_dual_vertex(host3, i) == RatVec3{Rat(6, 5), Rat(2, 5), Rat(3, 5)}) found = true;
    CHECK(found);

    CHECK_THROWS_AS(facet_dual_vertex(host1, 99), BadInput);
    for (std::size_t i = 0; i < unit_cube_pm1().facets().size(); ++i) {
        auto v = facet_dual_vertex(unit_cube_pm1(), i);
        Rat norm = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        CHECK(norm == Rat(1));  // +- standard basis vectors
    }
}

TEST_CASE("subpolytopes pinned to a non-integral face are never reflexive") {
    auto d14 = delta14();
    auto pts = lattice_points(d14);
    std::vector<std::vector<IntVec3>> faces{
        {{-1, -1, 0}, {6, -1, -1}, {-1, 2, -1}},
        {{-1, 0, -1}, {6, -1, -1}, {-1, -1, 1}},
        {{0, -1, -1}, {-1, -1, 1}, {-1, 2, -1}}};
    for (const auto& face : faces) {
        IntVec3 n = primitive(cross(sub(face[1], face[0]), sub(face[2], face[0])));
        Int base = dot(n, face[0]);
        for (const auto& extra : pts) {
            std::vector<IntVec3> gen = face;
            gen.push_back(extra);
            LatticePolytope sub = [&] {
                try {
                    return LatticePolytope(gen);
                } catch (const Degenerate&) {
                    return delta14();  // coplanar pick; skip via reflexive==true below
                }
            }();
            if (sub == d14) continue;
            // only polytopes that actually keep the face as a facet matter
            bool facet = false;
            for (const auto& f : sub.facets())
                if ((f.normal == n && -f.offset == base) ||
                    (f.normal == neg(n) && f.offset == base))
                    facet = true;
            if (facet) CHECK_FALSE(is_reflexive(sub));
        }
    }
}

TEST_CASE("edge interior counts") {
    // the ambient of the self-coupled (1,3,4,7;15) system
    auto d71 = make({{-1, -1, 1}, {-1, -1, -1}, {4, -1, -1}, {0, 2, -1}, {-1, 2, -1}, {-1, 1, 0}});
    std::vector<Int> expect{1, 2, 4};
    CHECK(edge_interior_counts(d71, {-1, -1, -1}) == expect);

    std::vector<Int> ones{1, 1, 1};
    CHECK(edge_interior_counts(unit_cube_pm1(), {1, 1, 1}) == ones);

    auto unit_simplex = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    std::vector<Int> zeros{0, 0, 0};
    CHECK(edge_interior_counts(unit_simplex, {0, 0, 0}) == zeros);

    CHECK_THROWS_AS(edge_interior_counts(unit_simplex, {5, 5, 5}), NotAVertex);
}

TEST_CASE("dual involution on reflexive polytopes") {
    std::vector<LatticePolytope> pool{
        delta14(), unit_cube_pm1(),
        make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
        make({{-1, -1, 1}, {-1, -1, -1}, {4, -1, -1}, {0, 2, -1}, {-1, 2, -1}}),
        make({{-1, -1, 1}, {-1, -1, -1}, {4, -1, -1}, {-1, 3, -1}})};
    for (const auto& p : pool) {
        REQUIRE(is_reflexive(p));
        CHECK(dual_lattice_polytope(dual_lattice_polytope(p)) == p);
    }
}

TEST_CASE("polar duality is antitone") {
    std::mt19937 rng(23);
    auto outer = delta14();
    auto pts = lattice_points(outer);
    int done = 0, attempts = 0;
    while (done < 50 && ++attempts < 5000) {
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<IntVec3> gen(pts.begin(), pts.begin() + 6);
        LatticePolytope inner = [&]() -> LatticePolytope {
            try {
                return LatticePolytope(gen);
            } catch (const Degenerate&) {
                return outer;
            }
        }();
        if (!inner.origin_interior()) continue;
        ++done;
        // dual(outer) inside dual(inner): every dual vertex of outer
        // satisfies <y, x> >= -1 against all of inner's vertices
        for (const auto& y : polar_dual(outer).vertices)
            for (const auto& x : inner.vertices()) {
                Rat s = y[0] * Rat(x[0]) + y[1] * Rat(x[1]) + y[2] * Rat(x[2]);
                CHECK(s >= Rat(-1));
            }
    }
    CHECK(done == 50);
}
