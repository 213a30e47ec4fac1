#include <doctest.h>

#include <random>

#include "polydual/errors.hpp"
#include "polydual/intlinalg.hpp"

using namespace polydual;

TEST_CASE("det3 on identity and known matrices") {
    CHECK(det3(identity3()) == 1);
    // cofactor expansion by hand: 6*(2-1) + 1*(-1-1) - 1*(1+2) = 1
    IntMatrix3 m{{{6, -1, -1}, {-1, 2, -1}, {-1, -1, 1}}};
    CHECK(det3(m) == 1);
    IntMatrix3 a1{{{1, 1, 2}, {2, 3, 5}, {3, 4, 8}}};
    CHECK(det3(a1) == 1);
}

TEST_CASE("det3 is multiplicative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix3 a{}, b{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a[i][j] = entry(rng);
                b[i][j] = entry(rng);
            }
        CHECK(det3(mat_mul(a, b)) == det3(a) * det3(b));
    }
}

TEST_CASE("is_unimodular") {
    CHECK(is_unimodular(identity3()));
    CHECK(is_unimodular({{{6, -1, -1}, {-1, 2, -1}, {-1, -1, 1}}}));
    CHECK_FALSE(is_unimodular({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
}

TEST_CASE("inverse of a unimodular matrix") {
    IntMatrix3 m{{{6, -1, -1}, {-1, 2, -1}, {-1, -1, 1}}};
    IntMatrix3 inv = inverse_unimodular(m);
    CHECK(mat_mul(m, inv) == identity3());
    CHECK(mat_mul(inv, m) == identity3());
}

namespace {

// brute-force kernel sample: every lattice point of the box with w.x = 0
// must have integer coordinates in the basis, and conversely
void check_kernel_spans(const IntVec4& w, int box) {
    LatticeBasis b = kernel_basis(w);
    CHECK(spans_kernel_lattice(b, w));
    for (const auto& row : b.rows) CHECK(dot(row, w) == 0);
    long long n_checked = 0;
    for (int x0 = -box; x0 <= box; ++x0)
        for (int x1 = -box; x1 <= box; ++x1)
            for (int x2 = -box; x2 <= box; ++x2) {
                // solve the last coordinate instead of scanning it
                Int rest = -(w[0] * x0 + w[1] * x1 + w[2] * x2);
                if (rest % w[3] != 0) continue;
                Int x3 = rest / w[3];
                if (x3 < -box || x3 > box) continue;
                IntVec4 v{x0, x1, x2, x3};
                auto c = try_express_in_basis(v, b);
                REQUIRE(c.has_value());
                CHECK(combine(*c, b) == v);
                ++n_checked;
            }
    CHECK(n_checked > 0);
}

}  // namespace

TEST_CASE("kernel_basis spans the full kernel lattice") {
    check_kernel_spans({1, 6, 14, 21}, 22);
    check_kernel_spans({1, 1, 1, 1}, 8);
    check_kernel_spans({1, 1, 1, 3}, 8);
    check_kernel_spans({3, 5, 11, 19}, 20);
}

TEST_CASE("kernel_basis of (1,6,14,21) spans the same lattice as the elementary rows") {
    LatticeBasis b = kernel_basis({1, 6, 14, 21});
    LatticeBasis paper{{IntVec4{-6, 1, 0, 0}, IntVec4{-14, 0, 1, 0}, IntVec4{-21, 0, 0, 1}}};
    for (const auto& row : paper.rows) CHECK(try_express_in_basis(row, b).has_value());
    for (const auto& row : b.rows) CHECK(try_express_in_basis(row, paper).has_value());
}

TEST_CASE("kernel_basis of (1,1,1,1)") {
    LatticeBasis b = kernel_basis({1, 1, 1, 1});
    LatticeBasis paper{{IntVec4{-1, 1, 0, 0}, IntVec4{-1, 0, 1, 0}, IntVec4{-1, 0, 0, 1}}};
    for (const auto& row : paper.rows) CHECK(try_express_in_basis(row, b).has_value());
    for (const auto& row : b.rows) CHECK(try_express_in_basis(row, paper).has_value());
}

TEST_CASE("kernel_basis rejects bad weights") {
    CHECK_THROWS_AS(kernel_basis({0, 1, 1, 1}), BadInput);
    CHECK_THROWS_AS(kernel_basis({-1, 1, 1, 1}), BadInput);
}

TEST_CASE("express_in_basis examples") {
    LatticeBasis m14{{IntVec4{-6, 1, 0, 0}, IntVec4{-14, 0, 1, 0}, IntVec4{-21, 0, 0, 1}}};
    CHECK(express_in_basis({-6, 1, 0, 0}, m14) == IntVec3{1, 0, 0});

    LatticeBasis m4{{IntVec4{-3, 1, 0, 0}, IntVec4{-4, 0, 1, 0}, IntVec4{-4, 0, 0, 1}}};
    CHECK(express_in_basis({-1, 3, -1, -1}, m4) == IntVec3{3, -1, -1});

    CHECK_THROWS_AS(express_in_basis({1, 0, 0, 0}, m14), NotInLattice);
}

TEST_CASE("express_in_basis round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-20, 20);
    LatticeBasis b = kernel_basis({1, 3, 4, 7});
    for (int iter = 0; iter < 200; ++iter) {
        IntVec3 c{entry(rng), entry(rng), entry(rng)};
        CHECK(express_in_basis(combine(c, b), b) == c);
    }
}
