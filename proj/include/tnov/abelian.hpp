#pragma once

/* Abelianization pi: G -> H = H_1/Tors via Smith normal form of the relator
   exponent matrix; torsion coordinates are dropped.  The same AbelianMap type
   carries any epimorphism onto a free abelian group (e.g. meridian maps). */

#include "tnov/laurent.hpp"
#include "tnov/presentation.hpp"

#include <vector>

namespace tnov {

using ZMatrix = std::vector<std::vector<mpz_class>>;

struct SmithResult {
    ZMatrix d;        // diagonal form
    ZMatrix left;     // unimodular U with U*A*V = D
    ZMatrix right;    // unimodular V
    std::vector<mpz_class> diagonal() const;
};

SmithResult smith_normal_form(const ZMatrix& a);

struct AbelianMap {
    int k = 0;                    // rank of H
    std::vector<Monomial> images;  // image of each generator, length s, entries in Z^k

    Monomial word_image(const FreeWord& w) const;
    LaurentPoly word_monomial(const FreeWord& w, CoefficientRing ring) const;
};

// exponent-sum vector of a word
std::vector<mpz_class> abelian_exponents(const FreeWord& w, size_t ngens);

AbelianMap abelianize(const Presentation& p);

// relators map to zero and the images generate Z^k
bool validate_epimorphism(const AbelianMap& pi, const Presentation& p);

// the rank-one specialization sending every generator to t; requires every
// generator image to sum to 1 under the all-ones functional unless forced
AbelianMap sum_to_one_map(const AbelianMap& pi, const Presentation& p);

}  // namespace tnov
