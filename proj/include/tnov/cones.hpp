#pragma once

/* Acyclicity cones: Newton-polytope vertex systems Gamma_v as strict rational
   inequality systems, exact Fourier-Motzkin feasibility, membership and
   intersection of cone systems. */

#include "tnov/novikov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnov {

using IneqVector = std::vector<mpz_class>;  // <xi, d> > 0

enum class ConeTag { empty, all_nonzero, complement_of_hyperplanes, generic };

struct Cone {
    Monomial vertex;
    std::vector<IneqVector> gt;       // strict inequalities
    std::vector<mpq_class> witness;   // a strictly feasible point
};

struct ConeSystem {
    int dim = 0;
    ConeTag tag = ConeTag::empty;
    std::vector<Cone> cones;
    std::vector<IneqVector> walls;  // populated for complement_of_hyperplanes

    bool is_empty() const { return cones.empty(); }
};

std::string tag_name(ConeTag t);

// strict feasibility of {<xi, d> > 0}; returns a rational witness when feasible
std::optional<std::vector<mpq_class>> strict_feasible(const std::vector<IneqVector>& system,
                                                      int dim);

ConeSystem acyclicity_cones(const LaurentPoly& a);

struct MembershipResult {
    bool inside = false;
    int cone_index = -1;
};

MembershipResult membership(const ConeSystem& sys, const CohomologyClass& xi);

ConeSystem intersect(const std::vector<ConeSystem>& systems);

// prune inequalities implied by the rest of their cone
ConeSystem minimize(const ConeSystem& sys);

std::string cones_to_json(const ConeSystem& sys);
ConeSystem cones_from_json(const std::string& text);

// k = 2 angle sweep: sample directions (cos not needed, rational ray sweep)
// returns lines "numerator denominator inside cone_index"
std::vector<std::string> sweep_table(const ConeSystem& sys, int samples);

}  // namespace tnov
