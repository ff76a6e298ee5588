#pragma once

/* The W-invariant of a matrix and the twisted Alexander polynomial, in the
   one-variable and multi-variable regimes, plus the divisibility and equality
   cross-checks against the Fitting route. */

#include "tnov/fitting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnov {

// num/den with den certified in the allowed multiplicative set; reduced by
// their GCD and scaled so the numerator is canonical
struct LocalizedFraction {
    LaurentPoly num;
    LaurentPoly den;

    bool is_zero() const { return num.is_zero(); }
    std::string to_string() const;
};

// one-variable multiplicative set Sigma: both extreme coefficients are units
bool in_sigma(const LaurentPoly& x);

// Sigma_mu: both mu-extreme terms unique with unit coefficients (mu-monic ends)
bool in_sigma_mu(const LaurentPoly& x, const std::vector<mpq_class>& mu);

LocalizedFraction reduce_fraction(const LaurentPoly& num, const LaurentPoly& den);

// fractions equal up to units of the localized ring; sigma decides membership
// of the leftover cofactors in the multiplicative set
bool equal_up_to_localized_units(const LocalizedFraction& a, const LocalizedFraction& b,
                                 const std::function<bool(const LaurentPoly&)>& sigma);

// a divides frac in the localized ring
bool divides_in_localized(const LaurentPoly& a, const LocalizedFraction& frac,
                          const std::function<bool(const LaurentPoly&)>& sigma);

// ------------------------------------------------------------------ W-invariant

// W(B, alpha, psi) with the j-th column suppressed: GCD over row selections S
// of det(psi(B_j)^S), divided by det(psi(a_j)).  Zero when l < s-1 (no row
// selection exists).  Demands psi(B)psi(alpha) = 0.
LocalizedFraction w_invariant(const std::vector<std::vector<GroupRingElement>>& b,
                              const std::vector<GroupRingElement>& alpha,
                              const SubstitutionMap& subst, size_t suppress,
                              const MinorBudget& budget = {});

struct TwistedAlexander {
    int k = 1;                // abelianization rank; k >= 2 means polynomial regime
    LocalizedFraction value;  // den = 1 in the polynomial regime
    size_t suppressed = 0;    // generator column used
};

// k = 1: Wada fraction with a deterministic admissible column.
// k >= 2: the polynomial Q_j / P_j after exact division.
TwistedAlexander twisted_alexander(const Presentation& p, const SubstitutionMap& subst,
                                   const MinorBudget& budget = {});

// ------------------------------------------------------------------ cross-checks

struct CrosscheckReport {
    bool vacuous = false;        // degenerate inputs (free group etc.)
    bool divides = false;        // A | Delta in the localized ring
    bool equal = false;          // equality up to localized units (deficiency one)
    bool deficiency_one = false;
    std::string detail;
};

CrosscheckReport crosscheck_divisibility(const Presentation& p, const SubstitutionMap& subst,
                                         const std::vector<mpq_class>& mu,
                                         const MinorBudget& budget = {});

}  // namespace tnov
