#include "polydual/wps.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual {

bool is_well_posed(const IntVec4& a) {
    for (int skip = 0; skip < 4; ++skip) {
        Int g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = gcd(g, a[i]);
        if (g != 1) return false;
    }
    return true;
}

WeightSystem4::WeightSystem4(IntVec4 weights, Int degree) : a(std::move(weights)), d(std::move(degree)) {
    Int sum = 0;
    for (const auto& w : a) {
        if (w <= 0) throw BadInput("weight system: weights must be positive");
        sum += w;
    }
    if (sum != d) throw BadInput("weight system: degree must equal the weight sum");
    if (!is_well_posed(a)) throw BadInput("weight system: weights are not well-posed");
}

Int weighted_degree(const Monomial4& m, const WeightSystem4& w) {
    Int s = 0;
    for (int i = 0; i < 4; ++i) s += m[i] * w.a[i];
    return s;
}

WeightedPolynomial::WeightedPolynomial(WeightSystem4 w, std::vector<Monomial4> monos)
    : weight(std::move(w)), monomials(std::move(monos)) {
    for (const auto& m : monomials) {
        for (const auto& e : m)
            if (e < 0) throw BadInput("polynomial: negative exponent");
        if (weighted_degree(m, weight) != weight.d)
            throw WrongDegree("polynomial: monomial of wrong weighted degree");
    }
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    if (monomials.empty()) throw BadInput("polynomial: no monomials");
}

IntVec3 monomial_to_point(const Monomial4& m, const WeightSystem4& w, const LatticeBasis& basis) {
    if (weighted_degree(m, w) != w.d)
        throw WrongDegree("monomial is not of anticanonical degree");
    IntVec4 p{m[0] - 1, m[1] - 1, m[2] - 1, m[3] - 1};
    // degree-correct monomials always land in the kernel lattice; a failure
    // here means the basis does not span it
    return express_in_basis(p, basis);
}

Monomial4 point_to_monomial(const IntVec3& c, const LatticeBasis& basis) {
    IntVec4 p = combine(c, basis);
    return {p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1};
}

LatticePolytope newton_polytope(const WeightedPolynomial& f, const LatticeBasis& basis) {
    std::vector<IntVec3> pts;
    pts.reserve(f.monomials.size());
    for (const auto& m : f.monomials)
        pts.push_back(monomial_to_point(m, f.weight, basis));
    return LatticePolytope(pts);  // throws Degenerate if span < 3
}

std::vector<Monomial4> all_monomials(const WeightSystem4& w) {
    std::vector<Monomial4> out;
    for (Int e0 = 0; e0 * w.a[0] <= w.d; ++e0)
        for (Int e1 = 0; e0 * w.a[0] + e1 * w.a[1] <= w.d; ++e1)
            for (Int e2 = 0; e0 * w.a[0] + e1 * w.a[1] + e2 * w.a[2] <= w.d; ++e2) {
                Int rest = w.d - e0 * w.a[0] - e1 * w.a[1] - e2 * w.a[2];
                if (rest % w.a[3] == 0)
                    out.push_back({e0, e1, e2, rest / w.a[3]});
            }
    return out;
}

LatticePolytope ambient_polytope(const WeightSystem4& w, const LatticeBasis& basis) {
    std::vector<IntVec3> pts;
    for (const auto& m : all_monomials(w))
        pts.push_back(monomial_to_point(m, w, basis));
    return LatticePolytope(pts);
}

}  // namespace polydual
