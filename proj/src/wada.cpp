#include "tnov/wada.hpp"

#include "tnov/novikov.hpp"

#include <functional>

namespace tnov {

std::string LocalizedFraction::to_string() const {
    if (is_zero()) return "0";
    if (!den.is_zero() && den.is_constant() && den.constant_value() == 1) return render(num);
    return "(" + render(num) + ")/(" + render(den) + ")";
}

bool in_sigma(const LaurentPoly& x) {
    if (x.is_zero()) return false;
    if (x.vars() != 1) throw math_error("Sigma membership is a one-variable test");
    const auto& terms = x.terms();
    return x.ring().is_unit(terms.begin()->second) && x.ring().is_unit(terms.rbegin()->second);
}

bool in_sigma_mu(const LaurentPoly& x, const std::vector<mpq_class>& mu) {
    CohomologyClass m;
    m.xi = mu;
    return !x.is_zero() && has_mu_monic_ends(x, m);
}

LocalizedFraction reduce_fraction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw math_error("fraction with zero denominator");
    LocalizedFraction f;
    if (num.is_zero()) {
        f.num = num;
        f.den = LaurentPoly::one(num.ring(), num.vars());
        return f;
    }
    LaurentPoly g = gcd(num, den);
    auto qn = exact_div(num, g);
    auto qd = exact_div(den, g);
    if (!qn || !qd) throw math_error("fraction reduction failed (internal)");
    // the invariant is defined up to units, so numerator and denominator are
    // canonicalized independently
    f.num = canonical_form(*qn);
    f.den = canonical_form(*qd);
    return f;
}

bool equal_up_to_localized_units(const LocalizedFraction& a, const LocalizedFraction& b,
                                 const std::function<bool(const LaurentPoly&)>& sigma) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    LaurentPoly x = mul(a.num, b.den);
    LaurentPoly y = mul(b.num, a.den);
    LaurentPoly g = gcd(x, y);
    auto xr = exact_div(x, g);
    auto yr = exact_div(y, g);
    if (!xr || !yr) throw math_error("localized comparison failed (internal)");
    return (xr->is_unit() || sigma(*xr)) && (yr->is_unit() || sigma(*yr));
}

bool divides_in_localized(const LaurentPoly& a, const LocalizedFraction& frac,
                          const std::function<bool(const LaurentPoly&)>& sigma) {
    if (frac.is_zero()) return true;
    if (a.is_zero()) return false;
    LaurentPoly g = gcd(frac.num, a);
    auto rest = exact_div(a, g);
    if (!rest) throw math_error("localized divisibility failed (internal)");
    return rest->is_unit() || sigma(*rest);
}

// ------------------------------------------------------------------ W-invariant

LocalizedFraction w_invariant(const std::vector<std::vector<GroupRingElement>>& b,
                              const std::vector<GroupRingElement>& alpha,
                              const SubstitutionMap& subst, size_t suppress,
                              const MinorBudget& budget) {
    size_t l = b.size();
    size_t s = alpha.size();
    if (suppress >= s) throw math_error("w_invariant: column out of range");
    for (const auto& row : b)
        if (row.size() != s) throw math_error("w_invariant: matrix shape mismatch");
    size_t n = static_cast<size_t>(subst.n());

    LMatrix psi_b = subst.matrix(b);
    LMatrix psi_alpha = subst.column(alpha);
    if (l > 0 && !lmatrix_is_zero(lmatrix_mul(psi_b, psi_alpha)))
        throw math_error("w_invariant: B * alpha does not vanish under psi");

    LaurentPoly den = determinant(subst.element(alpha[suppress]));
    if (den.is_zero()) throw math_error("w_invariant: det psi(a_j) = 0 for the chosen column");

    LocalizedFraction out;
    if (l < s - 1) {  // no row selection of size n(s-1) exists
        out.num = LaurentPoly::zero(subst.ring(), subst.vars());
        out.den = LaurentPoly::one(subst.ring(), subst.vars());
        return out;
    }
    std::vector<size_t> keep_cols;
    for (size_t c = 0; c < n * s; ++c)
        if (c < n * suppress || c >= n * (suppress + 1)) keep_cols.push_back(c);
    std::vector<size_t> all_rows(psi_b.rows());
    for (size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
    LMatrix mj = psi_b.select(all_rows, keep_cols);
    IdealValue q = minor_ideal_gcd(mj, static_cast<long>(n * (s - 1)), budget);
    return reduce_fraction(q.gcd, den);
}

// ------------------------------------------------------------ twisted Alexander

namespace {

bool is_basis_monomial(const Monomial& m) {
    int nonzero = 0;
    for (int64_t e : m) {
        if (e == 0) continue;
        if (e != 1 && e != -1) return false;
        ++nonzero;
    }
    return nonzero == 1;
}

bool independent_pair(const Monomial& a, const Monomial& b) {
    // rank-2 test: some 2x2 minor of the 2 x k integer matrix is nonzero
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] - a[j] * b[i] != 0) return true;
    return false;
}

bool nontrivial(const Monomial& m) {
    for (int64_t e : m)
        if (e != 0) return true;
    return false;
}

}  // namespace

TwistedAlexander twisted_alexander(const Presentation& p, const SubstitutionMap& subst,
                                   const MinorBudget& budget) {
    const AbelianMap& pi = subst.pi();
    if (pi.k == 0) throw math_error("twisted Alexander polynomial needs rank >= 1");
    auto alex = alexander_matrix(p);
    auto alpha = fundamental_column(p);
    size_t s = p.num_generators();

    TwistedAlexander ta;
    ta.k = pi.k;
    if (pi.k == 1) {
        // deterministic admissible column: prefer a basis-monomial image
        std::optional<size_t> pick;
        for (size_t j = 0; j < s && !pick; ++j) {
            if (!is_basis_monomial(pi.images[j])) continue;
            if (!determinant(subst.element(alpha[j])).is_zero()) pick = j;
        }
        for (size_t j = 0; j < s && !pick; ++j)
            if (!determinant(subst.element(alpha[j])).is_zero()) pick = j;
        if (!pick) throw math_error("twisted Alexander: no admissible column (det psi(1-g_j) = 0 for all j)");
        ta.suppressed = *pick;
        ta.value = w_invariant(alex, alpha, subst, *pick, budget);
        return ta;
    }
    // multi-variable regime: pick generators with independent images
    std::optional<std::pair<size_t, size_t>> pair;
    for (size_t j1 = 0; j1 < s && !pair; ++j1) {
        if (!nontrivial(pi.images[j1])) continue;
        for (size_t j2 = j1 + 1; j2 < s && !pair; ++j2)
            if (independent_pair(pi.images[j1], pi.images[j2])) pair = {j1, j2};
    }
    if (!pair) throw math_error("twisted Alexander: no generator pair with independent images");
    size_t j1 = pair->first;
    ta.suppressed = j1;
    LocalizedFraction w = w_invariant(alex, alpha, subst, j1, budget);
    if (w.is_zero()) {
        ta.value = w;
        return ta;
    }
    // P_{j1} divides the minor GCD exactly, so the reduced denominator must be
    // a unit; anything else flags an internal inconsistency
    auto direct = exact_div(w.num, w.den);
    if (!direct)
        throw math_error("twisted Alexander: P1 does not divide the minor GCD (internal inconsistency)");
    ta.value.num = canonical_form(*direct);
    ta.value.den = LaurentPoly::one(w.num.ring(), w.num.vars());
    return ta;
}

// ------------------------------------------------------------------ cross-checks

CrosscheckReport crosscheck_divisibility(const Presentation& p, const SubstitutionMap& subst,
                                         const std::vector<mpq_class>& mu,
                                         const MinorBudget& budget) {
    CrosscheckReport rep;
    rep.deficiency_one = p.num_relators() + 1 == p.num_generators();
    IdealValue a = twisted_fitting(p, subst, 1, budget);
    TwistedAlexander ta = twisted_alexander(p, subst, budget);

    std::function<bool(const LaurentPoly&)> sigma;
    if (subst.vars() == 1)
        sigma = [](const LaurentPoly& x) { return in_sigma(x); };
    else {
        std::vector<mpq_class> m = mu;
        if (m.empty()) m.assign(static_cast<size_t>(subst.vars()), mpq_class(1));
        sigma = [m](const LaurentPoly& x) { return in_sigma_mu(x, m); };
    }

    if (a.gcd.is_zero() && ta.value.is_zero()) {
        rep.vacuous = true;
        rep.divides = true;
        rep.equal = true;
        rep.detail = "both invariants degenerate to zero";
        return rep;
    }
    rep.divides = divides_in_localized(a.gcd, ta.value, sigma);
    LocalizedFraction af;
    af.num = a.gcd;
    af.den = LaurentPoly::one(a.gcd.ring(), a.gcd.vars());
    rep.equal = equal_up_to_localized_units(af, ta.value, sigma);
    rep.detail = "A = " + render(a.gcd) + ", Delta = " + ta.value.to_string();
    return rep;
}

}  // namespace tnov
