#pragma once

#include <array>
#include <ostream>

#include "polydual/numbers.hpp"

namespace polydual {

using IntVec3 = std::array<Int, 3>;
using IntVec4 = std::array<Int, 4>;
using RatVec3 = std::array<Rat, 3>;

// rows
using IntMatrix3 = std::array<IntVec3, 3>;

template <class V>
typename V::value_type dot(const V& a, const V& b) {
    typename V::value_type s = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec3 sub(const IntVec3& a, const IntVec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline IntVec3 cross(const IntVec3& a, const IntVec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline IntVec3 neg(const IntVec3& v) { return {-v[0], -v[1], -v[2]}; }

template <class V>
Int content(const V& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

// v / gcd(v); the zero vector is returned unchanged
inline IntVec3 primitive(IntVec3 v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline Int det3(const IntMatrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline IntVec3 mat_vec(const IntMatrix3& m, const IntVec3& v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline IntMatrix3 mat_mul(const IntMatrix3& a, const IntMatrix3& b) {
    IntMatrix3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

inline IntMatrix3 transpose(const IntMatrix3& m) {
    IntMatrix3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
    return r;
}

inline IntMatrix3 identity3() {
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

// adjugate / det for |det| = 1; caller must check unimodularity
inline IntMatrix3 inverse_unimodular(const IntMatrix3& m) {
    Int d = det3(m);
    IntMatrix3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) * d;
        }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const IntVec3& v) {
    return os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
}

}  // namespace polydual
