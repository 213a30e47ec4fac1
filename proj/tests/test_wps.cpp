#include <doctest.h>

#include <set>

#include "polydual/errors.hpp"
#include "polydual/wps.hpp"
#include "test_helpers.hpp"

using namespace polydual;
using namespace polydual::testing;

namespace {

LatticeBasis basis_m4() {
    return LatticeBasis{{IntVec4{-3, 1, 0, 0}, IntVec4{-4, 0, 1, 0}, IntVec4{-4, 0, 0, 1}}};
}

LatticeBasis basis_m14() {
    return LatticeBasis{{IntVec4{-6, 1, 0, 0}, IntVec4{-14, 0, 1, 0}, IntVec4{-21, 0, 0, 1}}};
}

LatticeBasis basis_m1() {
    return LatticeBasis{{IntVec4{-1, 1, 0, 0}, IntVec4{-1, 0, 1, 0}, IntVec4{-1, 0, 0, 1}}};
}

}  // namespace

TEST_CASE("well-posedness of weight tuples") {
    CHECK(is_well_posed({1, 6, 14, 21}));
    CHECK(is_well_posed({1, 1, 1, 1}));
    CHECK_FALSE(is_well_posed({2, 2, 4, 6}));
}

TEST_CASE("weight system validation") {
    CHECK_THROWS_AS(WeightSystem4({1, 3, 4, 4}, 13), BadInput);  // wrong degree
    CHECK_THROWS_AS(WeightSystem4({2, 2, 4, 6}, 14), BadInput);  // ill-posed
    CHECK_THROWS_AS(WeightSystem4({0, 1, 1, 1}, 3), BadInput);
    WeightSystem4 ok({1, 3, 4, 4}, 12);
    CHECK(ok.d == 12);
}

TEST_CASE("monomials map to lattice points") {
    WeightSystem4 w({1, 3, 4, 4}, 12);
    auto b = basis_m4();
    CHECK(monomial_to_point({12, 0, 0, 0}, w, b) == IntVec3{-1, -1, -1});
    CHECK(monomial_to_point({0, 4, 0, 0}, w, b) == IntVec3{3, -1, -1});
    CHECK(monomial_to_point({1, 1, 1, 1}, w, b) == IntVec3{0, 0, 0});
    CHECK_THROWS_AS(monomial_to_point({1, 0, 0, 0}, w, b), WrongDegree);
}

TEST_CASE("monomial map is injective on each degree") {
    for (auto w : {WeightSystem4({1, 3, 4, 4}, 12), WeightSystem4({1, 6, 14, 21}, 42)}) {
        auto b = kernel_basis(w.a);
        std::set<IntVec3> seen;
        for (const auto& m : all_monomials(w)) CHECK(seen.insert(monomial_to_point(m, w, b)).second);
    }
}

TEST_CASE("newton polytope of the invertible quartic-cubic polynomial") {
    WeightSystem4 w({1, 3, 4, 4}, 12);
    WeightedPolynomial f(w, {{0, 4, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {12, 0, 0, 0}});
    auto newt = newton_polytope(f, basis_m4());
    std::vector<IntVec3> expect{{-1, -1, -1}, {-1, -1, 2}, {-1, 2, -1}, {3, -1, -1}};
    CHECK(newt.vertices() == expect);
    CHECK(newt == ambient_polytope(w, basis_m4()));
}

TEST_CASE("newton polytope of the quartic in four variables") {
    WeightSystem4 w({1, 1, 1, 1}, 4);
    WeightedPolynomial f(w, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}});
    auto newt = newton_polytope(f, basis_m1());
    std::vector<IntVec3> expect{{-1, -1, -1}, {-1, -1, 3}, {-1, 3, -1}, {3, -1, -1}};
    CHECK(newt.vertices() == expect);

    // duplicated monomials do not change the hull
    WeightedPolynomial g(w, {{4, 0, 0, 0}, {4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}});
    CHECK(newton_polytope(g, basis_m1()) == newt);
}

TEST_CASE("newton polytope needs an affinely spanning set") {
    WeightSystem4 w({1, 1, 1, 1}, 4);
    WeightedPolynomial thin(w, {{4, 0, 0, 0}, {0, 4, 0, 0}, {2, 2, 0, 0}, {1, 3, 0, 0}});
    CHECK_THROWS_AS(newton_polytope(thin, basis_m1()), Degenerate);
}

TEST_CASE("ambient polytopes of the classic weights") {
    WeightSystem4 w14({1, 6, 14, 21}, 42);
    auto amb = ambient_polytope(w14, basis_m14());
    CHECK(amb == delta14());

    WeightSystem4 w1({1, 1, 1, 1}, 4);
    auto amb1 = ambient_polytope(w1, basis_m1());
    std::vector<IntVec3> expect{{-1, -1, -1}, {-1, -1, 3}, {-1, 3, -1}, {3, -1, -1}};
    CHECK(amb1.vertices() == expect);
    CHECK(is_reflexive(amb));
    CHECK(is_reflexive(amb1));
}

TEST_CASE("ambient lattice points are exactly the monomials") {
    for (auto w : {WeightSystem4({1, 6, 14, 21}, 42), WeightSystem4({1, 3, 4, 4}, 12),
                   WeightSystem4({1, 3, 4, 7}, 15), WeightSystem4({1, 1, 3, 5}, 10)}) {
        auto b = kernel_basis(w.a);
        auto amb = ambient_polytope(w, b);
        auto monos = all_monomials(w);
        CHECK(lattice_points(amb).size() == monos.size());
        for (const auto& m : monos) CHECK(amb.contains(monomial_to_point(m, w, b)));
    }
}

TEST_CASE("newton polytopes live inside the ambient") {
    WeightSystem4 w({1, 3, 4, 7}, 15);
    auto b = kernel_basis(w.a);
    auto amb = ambient_polytope(w, b);
    WeightedPolynomial f(w, {{1, 0, 0, 2}, {11, 0, 1, 0}, {0, 5, 0, 0}, {0, 0, 2, 1}});
    CHECK(amb.contains(newton_polytope(f, b)));
}
