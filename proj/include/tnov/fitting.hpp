#pragma once

/* Regular chain complexes over Lambda, minor-ideal GCDs I_s, the reindexed
   Fitting sequences J^(k)_m with their invariants, twisted Fitting invariants
   delta_m(G, rho_pi), and homology of integer complexes from the invariants. */

#include "tnov/matrix.hpp"
#include "tnov/representation.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace tnov {

struct MinorBudget {
    uint64_t max_minors = 1000000;
    int threads = 1;
};

enum class IdealClass { zero, whole_ring, proper };

struct IdealValue {
    IdealClass cls = IdealClass::zero;
    LaurentPoly gcd;  // canonical; 0 for zero class, 1 for whole ring

    bool is_zero() const { return cls == IdealClass::zero; }
    bool nontrivial() const { return cls == IdealClass::proper; }
};

// GCD of all s x s minors with the stated conventions: s <= 0 -> whole ring,
// s > min(dim) -> zero.  Short-circuits when the running GCD becomes a unit.
IdealValue minor_ideal_gcd(const LMatrix& m, long s, const MinorBudget& budget = {});

// ------------------------------------------------------------- chain complexes

struct ChainComplex {
    CoefficientRing ring;
    int vars = 0;
    std::vector<long> ranks;            // ranks[d] = rank of C_d
    std::vector<LMatrix> boundaries;    // boundaries[d] = matrix of d_{d+1}: C_{d+1} -> C_d
                                        // (row-wise: ranks[d+1] rows, ranks[d] columns)

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    long rank_at(int d) const {
        return (d < 0 || d > top_degree()) ? 0 : ranks[static_cast<size_t>(d)];
    }
    // boundary d_{d+1}; an empty matrix outside the range
    LMatrix boundary_into(int d) const;
    void validate() const;  // shapes and dd = 0
};

ChainComplex trivial_complex(CoefficientRing ring, int vars, int degree, long rank);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// JSON: {"ranks": [...], "boundaries": [[row-major Laurent strings], ...],
//        optional "ring": "Z"|"Q"|{"Zp":p}, optional "vars": k}
ChainComplex parse_complex_json(const std::string& text);
std::string complex_to_json(const ChainComplex& c);

// ------------------------------------------------------------ Fitting sequences

struct FittingEntry {
    long m;
    IdealValue ideal;
};

// The index of J^(k)_m uses the alternating rank sum sigma_k = gamma_k -
// gamma_{k-1} + gamma_{k-2} - ..., which is unchanged by every trivial-summand
// stabilization and agrees with gamma_k - gamma_{k-1} on 2-regular fronts.
struct FittingSequence {
    CoefficientRing ring;
    int vars = 0;
    int degree = 0;
    long gamma_k = 0;
    long sigma_k = 0;
    long a_k = 0;                      // zero ideals in the segment = gamma_k - rank
    std::vector<FittingEntry> window;  // all m with 1 <= s(m) <= min(gamma_k, gamma_{k+1})
    std::vector<LaurentPoly> reduced;  // proper GCDs, by increasing m

    long minor_size(long m) const { return sigma_k - m + 1; }
    IdealValue ideal_at(long m) const;
};

FittingSequence fitting_sequence(const ChainComplex& c, int degree,
                                 const MinorBudget& budget = {});

// --------------------------------------------------------- homology over a PID

struct HomologySummary {
    std::vector<long> betti;
    std::vector<long> torsion_number;
    std::vector<std::vector<mpz_class>> torsion_orders;  // per degree, tau_i = lambda_i / lambda_{i+1}
};

// integer complexes only (vars = 0, ring Z)
HomologySummary homology_over_pid(const ChainComplex& c, const MinorBudget& budget = {});

// --------------------------------------------- resolutions and twisted Fitting

// the 2-regular front 0 <- L <- L^s <- L^l of the free resolution of Z over ZG
struct ResolutionFront {
    const Presentation* presentation;
    std::vector<GroupRingElement> alpha;               // d1 column, entries 1 - g_j
    std::vector<std::vector<GroupRingElement>> alex;   // d2 = Alexander matrix
};

ResolutionFront resolution_from_presentation(const Presentation& p);

// psi-image of the resolution front as a Laurent chain complex with
// ranks (n, n*s, n*l)
ChainComplex twisted_front(const Presentation& p, const SubstitutionMap& subst);

// delta_m(G, rho_pi): the value of J^(1)_m of the twisted front; m = 1 gives
// A(G, rho_pi); zero for m <= 0
IdealValue twisted_fitting(const Presentation& p, const SubstitutionMap& subst, long m,
                           const MinorBudget& budget = {});

}  // namespace tnov
