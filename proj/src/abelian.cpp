#include "tnov/abelian.hpp"

namespace tnov {

std::vector<mpz_class> SmithResult::diagonal() const {
    std::vector<mpz_class> out;
    size_t n = std::min(d.size(), d.empty() ? size_t(0) : d[0].size());
    for (size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
}

namespace {

ZMatrix identity_z(size_t n) {
    ZMatrix m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void row_swap(ZMatrix& m, size_t a, size_t b) { std::swap(m[a], m[b]); }

void row_addmul(ZMatrix& m, size_t dst, size_t src, const mpz_class& c) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}

void col_swap(ZMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void col_addmul(ZMatrix& m, size_t dst, size_t src, const mpz_class& c) {
    for (auto& row : m) row[dst] += c * row[src];
}

void row_negate(ZMatrix& m, size_t r) {
    for (auto& v : m[r]) v = -v;
}

}  // namespace

SmithResult smith_normal_form(const ZMatrix& a) {
    SmithResult res;
    res.d = a;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    res.left = identity_z(rows);
    res.right = identity_z(cols);
    ZMatrix& d = res.d;

    size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot of minimal absolute value in the remaining block
        size_t pi = t, pj = t;
        bool found = false;
        mpz_class best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                mpz_class v = abs(d[i][j]);
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            row_swap(d, pi, t);
            row_swap(res.left, pi, t);
        }
        if (pj != t) {
            col_swap(d, pj, t);
            col_swap(res.right, pj, t);
        }
        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (d[i][t] == 0) continue;
            mpz_class q = d[i][t] / d[t][t];  // truncated division is fine, we iterate
            if (q != 0) {
                row_addmul(d, i, t, -q);
                row_addmul(res.left, i, t, -q);
            }
            if (d[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (d[t][j] == 0) continue;
            mpz_class q = d[t][j] / d[t][t];
            if (q != 0) {
                col_addmul(d, j, t, -q);
                col_addmul(res.right, j, t, -q);
            }
            if (d[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders exist; re-pick pivot
        // divisibility condition: pivot must divide the remaining block
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols && !fixed; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    row_addmul(d, t, i, 1);
                    row_addmul(res.left, t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        if (d[t][t] < 0) {
            row_negate(d, t);
            row_negate(res.left, t);
        }
        ++t;
    }
    return res;
}

std::vector<mpz_class> abelian_exponents(const FreeWord& w, size_t ngens) {
    std::vector<mpz_class> e(ngens, 0);
    for (const Letter& l : w.letters()) e[static_cast<size_t>(l.gen)] += l.exp;
    return e;
}

Monomial AbelianMap::word_image(const FreeWord& w) const {
    Monomial m(static_cast<size_t>(k), 0);
    for (const Letter& l : w.letters()) {
        const Monomial& g = images[static_cast<size_t>(l.gen)];
        for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)] += l.exp * g[static_cast<size_t>(i)];
    }
    return m;
}

LaurentPoly AbelianMap::word_monomial(const FreeWord& w, CoefficientRing ring) const {
    return LaurentPoly::monomial(ring, k, word_image(w), 1);
}

AbelianMap abelianize(const Presentation& p) {
    size_t s = p.num_generators(), l = p.num_relators();
    // columns of E^T are relator exponent vectors; H = coker(E^T : Z^l -> Z^s)
    ZMatrix et(s, std::vector<mpz_class>(std::max<size_t>(l, 1), 0));
    for (size_t r = 0; r < l; ++r) {
        auto e = abelian_exponents(p.relators[r], s);
        for (size_t j = 0; j < s; ++j) et[j][r] = e[j];
    }
    SmithResult snf = smith_normal_form(et);
    auto diag = snf.diagonal();
    // free coordinates: diagonal zero or beyond the diagonal range
    std::vector<size_t> free_coords;
    for (size_t i = 0; i < s; ++i) {
        mpz_class di = i < diag.size() ? diag[i] : mpz_class(0);
        if (di == 0) free_coords.push_back(i);
    }
    AbelianMap pi;
    pi.k = static_cast<int>(free_coords.size());
    pi.images.resize(s);
    for (size_t j = 0; j < s; ++j) {
        Monomial m(free_coords.size(), 0);
        for (size_t fi = 0; fi < free_coords.size(); ++fi) {
            mpz_class v = snf.left[free_coords[fi]][j];
            if (!v.fits_slong_p()) throw math_error("abelianization image too large");
            m[fi] = v.get_si();
        }
        pi.images[j] = m;
    }
    return pi;
}

bool validate_epimorphism(const AbelianMap& pi, const Presentation& p) {
    if (pi.images.size() != p.num_generators()) return false;
    for (const FreeWord& r : p.relators) {
        Monomial m = pi.word_image(r);
        for (int64_t e : m)
            if (e != 0) return false;
    }
    // images must generate Z^k: the image matrix has elementary divisors all 1
    if (pi.k == 0) return true;
    ZMatrix img(static_cast<size_t>(pi.k), std::vector<mpz_class>(p.num_generators(), 0));
    for (size_t j = 0; j < p.num_generators(); ++j)
        for (int i = 0; i < pi.k; ++i) img[static_cast<size_t>(i)][j] = pi.images[j][static_cast<size_t>(i)];
    auto diag = smith_normal_form(img).diagonal();
    if (diag.size() < static_cast<size_t>(pi.k)) return false;
    for (int i = 0; i < pi.k; ++i)
        if (abs(diag[static_cast<size_t>(i)]) != 1) return false;
    return true;
}

AbelianMap sum_to_one_map(const AbelianMap& pi, const Presentation& p) {
    AbelianMap eps;
    eps.k = 1;
    eps.images.resize(pi.images.size());
    for (size_t j = 0; j < pi.images.size(); ++j) {
        int64_t sum = 0;
        for (int64_t e : pi.images[j]) sum += e;
        eps.images[j] = Monomial{sum};
    }
    if (!validate_epimorphism(eps, p))
        throw math_error("meridian specialization is not an epimorphism onto Z");
    return eps;
}

}  // namespace tnov
