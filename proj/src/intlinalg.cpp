#include "polydual/intlinalg.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual {

Int det3_checked(const IntMatrix3& m) { return det3(m); }

namespace {

struct Xgcd {
    Int g, s, t;  // g = s*a + t*b
};

Xgcd xgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

// row-style Hermite normal form of a full-rank 3x4 integer matrix
std::array<IntVec4, 3> hnf3x4(std::array<IntVec4, 3> m) {
    int row = 0;
    for (int col = 0; col < 4 && row < 3; ++col) {
        int pivot = -1;
        for (int r = row; r < 3; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int r = row + 1; r < 3; ++r) {
            while (m[r][col] != 0) {
                Int q = m[row][col] / m[r][col];
                for (int k = 0; k < 4; ++k) m[row][k] -= q * m[r][k];
                std::swap(m[row], m[r]);
            }
        }
        if (m[row][col] < 0)
            for (int k = 0; k < 4; ++k) m[row][k] = -m[row][k];
        for (int r = 0; r < row; ++r) {
            Int q = m[r][col] / m[row][col];
            if (m[r][col] < 0 && m[r][col] % m[row][col] != 0) q -= 1;
            for (int k = 0; k < 4; ++k) m[r][k] -= q * m[row][k];
        }
        ++row;
    }
    return m;
}

}  // namespace

LatticeBasis kernel_basis(const IntVec4& weight) {
    for (const auto& w : weight)
        if (w <= 0) throw BadInput("kernel_basis: weight entries must be positive");
    // unimodular column operations reducing weight to (g,0,0,0); the kernel
    // is generated by the last three columns
    std::array<IntVec4, 4> cols{};
    for (int i = 0; i < 4; ++i) cols[i][i] = 1;
    IntVec4 v = weight;
    for (int i = 1; i < 4; ++i) {
        if (v[i] == 0) continue;
        auto [g, s, t] = xgcd(v[0], v[i]);
        Int a = v[0] / g, b = v[i] / g;
        for (int k = 0; k < 4; ++k) {
            Int c0 = cols[0][k], ci = cols[i][k];
            cols[0][k] = s * c0 + t * ci;
            cols[i][k] = -b * c0 + a * ci;
        }
        v[0] = g;
        v[i] = 0;
    }
    LatticeBasis basis{{cols[1], cols[2], cols[3]}};
    basis.rows = hnf3x4(basis.rows);
    return basis;
}

std::optional<IntVec3> try_express_in_basis(const IntVec4& v, const LatticeBasis& basis) {
    // solve c . B = v over three independent columns, then verify all four
    for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = c0 + 1; c1 < 4; ++c1)
            for (int c2 = c1 + 1; c2 < 4; ++c2) {
                IntMatrix3 m{};
                for (int r = 0; r < 3; ++r)
                    m[r] = {basis[r][c0], basis[r][c1], basis[r][c2]};
                IntMatrix3 mt = transpose(m);
                Int d = det3(mt);
                if (d == 0) continue;
                IntVec3 rhs{v[c0], v[c1], v[c2]};
                IntVec3 c{};
                for (int i = 0; i < 3; ++i) {
                    IntMatrix3 mi = mt;
                    for (int r = 0; r < 3; ++r) mi[r][i] = rhs[r];
                    Int num = det3(mi);
                    if (num % d != 0) return std::nullopt;
                    c[i] = num / d;
                }
                if (combine(c, basis) != v) return std::nullopt;
                return c;
            }
    return std::nullopt;
}

IntVec3 express_in_basis(const IntVec4& v, const LatticeBasis& basis) {
    auto c = try_express_in_basis(v, basis);
    if (!c) throw NotInLattice("vector is not in the lattice spanned by the basis");
    return *c;
}

IntVec4 combine(const IntVec3& c, const LatticeBasis& basis) {
    IntVec4 out{};
    for (int k = 0; k < 4; ++k)
        out[k] = c[0] * basis[0][k] + c[1] * basis[1][k] + c[2] * basis[2][k];
    return out;
}

bool spans_kernel_lattice(const LatticeBasis& basis, const IntVec4& weight) {
    for (const auto& row : basis.rows)
        if (dot(row, weight) != 0) return false;
    // signed 3x3 minors of the 3x4 matrix give k*weight with |k| the index
    // of the spanned sublattice in the full kernel lattice
    auto minor = [&](int skip) {
        IntMatrix3 m{};
        for (int r = 0; r < 3; ++r) {
            int j = 0;
            for (int cidx = 0; cidx < 4; ++cidx)
                if (cidx != skip) m[r][j++] = basis[r][cidx];
        }
        return det3(m);
    };
    IntVec4 plucker{minor(0), -minor(1), minor(2), -minor(3)};
    IntVec4 negp{-plucker[0], -plucker[1], -plucker[2], -plucker[3]};
    Int g = content(weight);
    IntVec4 w = weight;
    for (auto& x : w) x /= g;
    return plucker == w || negp == w;
}

}  // namespace polydual
