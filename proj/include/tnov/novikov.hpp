#pragma once

/* Monicity with respect to a cohomology class, twisted Novikov Betti and
   torsion numbers from Fitting sequences, Morse-form lower bounds, the
   3-manifold vanishing criterion, and the fibredness obstruction. */

#include "tnov/fitting.hpp"

#include <map>
#include <string>
#include <vector>

namespace tnov {

struct CohomologyClass {
    std::vector<mpq_class> xi;  // exact rational entries, length k

    size_t dim() const { return xi.size(); }
    bool is_zero() const;
    CohomologyClass negated() const;
};

CohomologyClass parse_xi(const std::string& text, size_t expect_dim);

// <xi, m> as an exact rational
mpq_class pair_xi(const CohomologyClass& xi, const Monomial& m);

// the unique <xi,.>-maximal term exists and has a unit coefficient
bool is_xi_monic(const LaurentPoly& x, const CohomologyClass& xi);

// xi-monic for both mu and -mu
bool has_mu_monic_ends(const LaurentPoly& x, const CohomologyClass& mu);

// ------------------------------------------------------------- Novikov numbers

struct NovikovNumbers {
    std::vector<long> bhat;                       // degrees 0..maxdeg
    std::vector<long> qhat;
    std::vector<std::vector<LaurentPoly>> tau;    // per degree, quotients lambda_i/lambda_{i+1}
    bool injective_xi = true;                     // false flags the k >= 2 rational caveat
    std::string caveat;
};

// from the psi-image of the 2-regular resolution front; degrees 0 and 1
NovikovNumbers novikov_numbers(const Presentation& p, const SubstitutionMap& subst,
                               const CohomologyClass& xi, int maxdeg = 1,
                               const MinorBudget& budget = {});

// from a full chain complex over Lambda, arbitrary degrees
NovikovNumbers novikov_numbers(const ChainComplex& c, const CohomologyClass& xi,
                               const MinorBudget& budget = {});

// m_i >= bhat_i + qhat_i + qhat_{i-1}; one extra degree for the qhat carry
std::vector<long> morse_lower_bounds(const NovikovNumbers& nums);

// ------------------------------------------------------- 3-manifold criterion

struct VanishingReport {
    bool vanishes = false;
    bool monic = false;
    LaurentPoly witness;  // A(G, rho_pi)
    std::string note;     // validity label
};

VanishingReport vanishing_3mfd(const Presentation& p, const SubstitutionMap& subst,
                               const CohomologyClass& xi, const MinorBudget& budget = {});

// ------------------------------------------------------- fibredness obstruction

struct FibredReport {
    bool obstructed = false;
    LaurentPoly invariant;             // A over R[t, t^-1] via the meridian class
    std::string low_end, high_end;     // extreme coefficients
    std::string detail;
};

// requires the meridian specialization to have rank 1; tests both flow
// directions (mu and -mu)
FibredReport fibred_obstruction(const Presentation& p, const Representation& rep,
                                const AbelianMap& meridian, const MinorBudget& budget = {});

}  // namespace tnov
