#include "tnov/novikov.hpp"

#include <sstream>

namespace tnov {

bool CohomologyClass::is_zero() const {
    for (const auto& v : xi)
        if (v != 0) return false;
    return true;
}

CohomologyClass CohomologyClass::negated() const {
    CohomologyClass r = *this;
    for (auto& v : r.xi) v = -v;
    return r;
}

CohomologyClass parse_xi(const std::string& text, size_t expect_dim) {
    CohomologyClass c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) throw input_error("empty xi component");
        c.xi.push_back(parse_coeff(tok));
    }
    if (c.xi.empty()) throw input_error("empty xi");
    if (expect_dim != 0 && c.xi.size() != expect_dim)
        throw input_error("xi has " + std::to_string(c.xi.size()) + " components, expected " +
                          std::to_string(expect_dim));
    return c;
}

mpq_class pair_xi(const CohomologyClass& xi, const Monomial& m) {
    if (xi.dim() != m.size()) throw math_error("xi dimension mismatch");
    mpq_class s(0);
    for (size_t i = 0; i < m.size(); ++i) s += xi.xi[i] * mpq_class(static_cast<long>(m[i]));
    return s;
}

bool is_xi_monic(const LaurentPoly& x, const CohomologyClass& xi) {
    if (xi.is_zero()) throw math_error("xi must be non-zero");
    if (x.is_zero()) return false;
    bool have = false, tie = false;
    mpq_class best;
    Coeff best_coeff;
    for (auto& [m, c] : x.terms()) {
        mpq_class v = pair_xi(xi, m);
        if (!have || v > best) {
            best = v;
            best_coeff = c;
            tie = false;
            have = true;
        } else if (v == best) {
            tie = true;
        }
    }
    return !tie && x.ring().is_unit(best_coeff);
}

bool has_mu_monic_ends(const LaurentPoly& x, const CohomologyClass& mu) {
    return is_xi_monic(x, mu) && is_xi_monic(x, mu.negated());
}

// ------------------------------------------------------------- Novikov numbers

namespace {

NovikovNumbers numbers_from_sequences(const std::vector<FittingSequence>& fs,
                                      const std::vector<long>& gamma,
                                      const CohomologyClass& xi) {
    NovikovNumbers out;
    size_t top = fs.size();
    for (size_t d = 0; d < top; ++d) {
        long a_km1 = d > 0 ? fs[d - 1].a_k : 0;
        long gamma_km1 = d > 0 ? gamma[d - 1] : 0;
        out.bhat.push_back(fs[d].a_k + a_km1 - gamma_km1);
        const auto& red = fs[d].reduced;
        long q = 0;
        std::vector<LaurentPoly> tau;
        for (size_t i = 0; i < red.size(); ++i) {
            if (is_xi_monic(red[i], xi)) continue;  // monic tail contributes nothing
            ++q;
            LaurentPoly next = (i + 1 < red.size())
                                   ? red[i + 1]
                                   : LaurentPoly::one(red[i].ring(), red[i].vars());
            auto quot = exact_div(red[i], next);
            if (!quot) throw math_error("torsion quotient division failed (internal)");
            tau.push_back(canonical_form(*quot));
        }
        out.qhat.push_back(q);
        out.tau.push_back(tau);
    }
    if (xi.dim() >= 2) {
        out.injective_xi = false;
        out.caveat =
            "requires injective xi: rational classes in rank >= 2 are never injective; "
            "Betti/torsion numbers are reported cone-wise";
    }
    return out;
}

}  // namespace

NovikovNumbers novikov_numbers(const Presentation& p, const SubstitutionMap& subst,
                               const CohomologyClass& xi, int maxdeg, const MinorBudget& budget) {
    if (xi.is_zero()) throw math_error("xi must be non-zero");
    if (maxdeg > 1)
        throw math_error("degree beyond the 2-regular resolution front; supply a full complex");
    ChainComplex c = twisted_front(p, subst);
    std::vector<FittingSequence> fs;
    std::vector<long> gamma;
    for (int d = 0; d <= maxdeg; ++d) {
        fs.push_back(fitting_sequence(c, d, budget));
        gamma.push_back(c.rank_at(d));
    }
    return numbers_from_sequences(fs, gamma, xi);
}

NovikovNumbers novikov_numbers(const ChainComplex& c, const CohomologyClass& xi,
                               const MinorBudget& budget) {
    if (xi.is_zero()) throw math_error("xi must be non-zero");
    std::vector<FittingSequence> fs;
    std::vector<long> gamma;
    for (int d = 0; d <= c.top_degree(); ++d) {
        fs.push_back(fitting_sequence(c, d, budget));
        gamma.push_back(c.rank_at(d));
    }
    return numbers_from_sequences(fs, gamma, xi);
}

std::vector<long> morse_lower_bounds(const NovikovNumbers& nums) {
    size_t top = nums.bhat.size();
    std::vector<long> bounds(top + 1, 0);
    for (size_t i = 0; i <= top; ++i) {
        long b = i < top ? nums.bhat[i] : 0;
        long q = i < top ? nums.qhat[i] : 0;
        long qprev = (i > 0 && i - 1 < top) ? nums.qhat[i - 1] : 0;
        bounds[i] = b + q + qprev;
    }
    return bounds;
}

// ------------------------------------------------------- 3-manifold criterion

VanishingReport vanishing_3mfd(const Presentation& p, const SubstitutionMap& subst,
                               const CohomologyClass& xi, const MinorBudget& budget) {
    if (xi.is_zero()) throw math_error("xi must be non-zero");
    VanishingReport r;
    IdealValue a = twisted_fitting(p, subst, 1, budget);
    r.witness = a.gcd;
    r.monic = !a.gcd.is_zero() && is_xi_monic(a.gcd, xi);
    r.vanishes = r.monic;
    r.note = "valid under the 3-manifold hypothesis (compact, chi = 0)";
    return r;
}

// ------------------------------------------------------- fibredness obstruction

FibredReport fibred_obstruction(const Presentation& p, const Representation& rep,
                                const AbelianMap& meridian, const MinorBudget& budget) {
    if (meridian.k != 1) throw math_error("fibredness test needs a rank-1 meridian class");
    SubstitutionMap subst(rep, meridian, p);
    IdealValue a = twisted_fitting(p, subst, 1, budget);
    FibredReport r;
    r.invariant = a.gcd;
    CohomologyClass mu;
    mu.xi = {mpq_class(1)};
    if (a.gcd.is_zero()) {
        r.obstructed = true;
        r.detail = "invariant vanishes; Novikov homology cannot vanish";
        return r;
    }
    // extreme coefficients in the meridian direction
    const auto& terms = a.gcd.terms();
    r.high_end = terms.begin()->second.get_str();
    r.low_end = terms.rbegin()->second.get_str();
    bool monic_both = has_mu_monic_ends(a.gcd, mu);
    r.obstructed = !monic_both;
    r.detail = monic_both ? "both ends are units; no obstruction"
                          : "an extreme coefficient is not a unit";
    return r;
}

}  // namespace tnov
