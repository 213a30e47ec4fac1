#include "polydual/coupling.hpp"

#include <algorithm>

#include "polydual/errors.hpp"

namespace polydual {

WeightSystem3::WeightSystem3(IntVec3 weights, Int degree) : w(std::move(weights)), d(std::move(degree)) {
    Int g = 0;
    for (const auto& x : w) {
        if (x <= 0) throw BadInput("weight system: weights must be positive");
        g = gcd(g, x);
    }
    if (g != 1) throw BadInput("weight system: weights must be primitive");
    if (d <= 0) throw BadInput("weight system: degree must be positive");
}

MagicSquare::MagicSquare(IntMatrix3 entries) : c(std::move(entries)) {
    for (const auto& row : c)
        for (const auto& x : row)
            if (x < 0) throw BadInput("magic square: entries must be nonnegative");
}

bool is_weighted_magic_square(const MagicSquare& c, const WeightSystem3& w,
                              const WeightSystem3& w2) {
    for (int i = 0; i < 3; ++i)
        if (dot(c.c[i], w.w) != w.d) return false;
    for (int j = 0; j < 3; ++j) {
        Int col = c.c[0][j] * w2.w[0] + c.c[1][j] * w2.w[1] + c.c[2][j] * w2.w[2];
        if (col != w2.d) return false;
    }
    return true;
}

namespace {

Int weight_sum(const WeightSystem3& w) { return w.w[0] + w.w[1] + w.w[2]; }

}  // namespace

bool is_coupled(const MagicSquare& c, const WeightSystem3& w, const WeightSystem3& w2) {
    if (!is_weighted_magic_square(c, w, w2))
        throw NotMagic("square does not satisfy the weighted row/column relations");
    Int det = det3(c.c);
    if (det < 0) det = -det;
    return det == (w.d - weight_sum(w)) * w2.d && det == (w2.d - weight_sum(w2)) * w.d;
}

bool is_strongly_coupled(const MagicSquare& c, const WeightSystem3& w, const WeightSystem3& w2) {
    if (!is_coupled(c, w, w2))
        throw NotCoupled("square is not almost primitive");
    for (int i = 0; i < 3; ++i) {
        bool row_zero = false, col_zero = false;
        for (int j = 0; j < 3; ++j) {
            if (c.c[i][j] == 0) row_zero = true;
            if (c.c[j][i] == 0) col_zero = true;
        }
        if (!row_zero || !col_zero) return false;
    }
    return true;
}

std::pair<std::vector<Monomial3>, std::vector<Monomial3>> polynomials_from_square(const MagicSquare& c) {
    std::vector<Monomial3> rows, cols;
    for (int i = 0; i < 3; ++i) {
        rows.push_back({c.c[i][0], c.c[i][1], c.c[i][2]});
        cols.push_back({c.c[0][i], c.c[1][i], c.c[2][i]});
    }
    return {rows, cols};
}

std::vector<MagicSquare> find_magic_squares(const WeightSystem3& w, const WeightSystem3& w2) {
    Int bound = std::max(w.d, w2.d);
    // rows satisfying the w-weighted sum d
    std::vector<IntVec3> rows;
    for (Int a = 0; a <= bound; ++a) {
        if (a * w.w[0] > w.d) break;
        for (Int b = 0; b <= bound; ++b) {
            if (a * w.w[0] + b * w.w[1] > w.d) break;
            Int rest = w.d - a * w.w[0] - b * w.w[1];
            if (rest % w.w[2] == 0 && rest / w.w[2] <= bound)
                rows.push_back({a, b, rest / w.w[2]});
        }
    }
    std::vector<MagicSquare> out;
    for (const auto& r0 : rows)
        for (const auto& r1 : rows)
            for (const auto& r2 : rows) {
                bool ok = true;
                for (int j = 0; j < 3 && ok; ++j)
                    ok = r0[j] * w2.w[0] + r1[j] * w2.w[1] + r2[j] * w2.w[2] == w2.d;
                if (ok) out.push_back(MagicSquare{{r0, r1, r2}});
            }
    return out;
}

std::vector<MagicSquare> find_coupled_squares(const WeightSystem3& w, const WeightSystem3& w2) {
    std::vector<MagicSquare> out;
    for (const auto& sq : find_magic_squares(w, w2))
        if (is_coupled(sq, w, w2)) out.push_back(sq);
    return out;
}

WeightedPolynomial projectivise(const std::vector<Monomial3>& f, const WeightSystem3& fw,
                                const WeightSystem4& target, int section_variable) {
    if (section_variable < 0 || section_variable > 3)
        throw BadInput("section variable index out of range");
    int other[3], k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != section_variable) other[k++] = i;
    for (int i = 0; i < 3; ++i)
        if (target.a[other[i]] != fw.w[i])
            throw BadInput("projectivise: non-section weights do not match f's variables");
    if (target.d % target.a[section_variable] != 0)
        throw IndivisibleDegree("projectivise: section weight does not divide the degree");
    std::vector<Monomial4> monos;
    for (const auto& m : f) {
        Monomial4 lifted{0, 0, 0, 0};
        for (int i = 0; i < 3; ++i) lifted[other[i]] = m[i];
        monos.push_back(lifted);
    }
    Monomial4 power{0, 0, 0, 0};
    power[section_variable] = target.d / target.a[section_variable];
    monos.push_back(power);
    return WeightedPolynomial(target, std::move(monos));
}

std::vector<Monomial3> restrict_to_section_zero(const WeightedPolynomial& F, int section_variable) {
    std::vector<Monomial3> out;
    for (const auto& m : F.monomials) {
        if (m[section_variable] != 0) continue;
        Monomial3 r{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != section_variable) r[k++] = m[i];
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Canonical row arrangement of a 4x4 exponent matrix: monomial i sits in
// the row of variable i, i.e. the diagonal is nonzero (such a matching
// exists exactly when some Leibniz term of det A_F survives).  Among valid
// arrangements the lexicographically smallest row sequence is chosen, so
// the transpose below is deterministic and self-inverse on polynomials
// with a unique matching.
std::array<Monomial4, 4> canonical_rows(const std::vector<Monomial4>& monos) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<Monomial4, 4> best{};
    bool have = false;
    std::sort(perm.begin(), perm.end());
    do {
        bool diag = true;
        for (int i = 0; i < 4; ++i)
            if (monos[perm[i]][i] == 0) { diag = false; break; }
        if (!diag) continue;
        std::array<Monomial4, 4> rows{monos[perm[0]], monos[perm[1]], monos[perm[2]], monos[perm[3]]};
        if (!have || rows < best) { best = rows; have = true; }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!have)
        return {monos[0], monos[1], monos[2], monos[3]};
    return best;
}

}  // namespace

WeightedPolynomial transpose_polynomial(const WeightedPolynomial& F, const WeightSystem4& target) {
    if (F.monomials.size() != 4)
        throw NotSquare("transpose needs exactly four monomials");
    auto rows = canonical_rows(F.monomials);
    std::vector<Monomial4> monos(4, Monomial4{0, 0, 0, 0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) monos[j][i] = rows[i][j];
    // WeightedPolynomial validation rejects a transpose that is not
    // anticanonical for the claimed target
    return WeightedPolynomial(target, std::move(monos));
}

std::vector<std::pair<int, int>> compatible_sections(const WeightSystem4& a, const WeightSystem4& b) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a.a[i] * b.d == b.a[j] * a.d) out.emplace_back(i, j);
    return out;
}

WeightSystem3 drop_variable(const WeightSystem4& a, int section_variable) {
    IntVec3 w{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != section_variable) w[k++] = a.a[i];
    return WeightSystem3(w, a.d);
}

}  // namespace polydual
