#pragma once

/* Finite-dimensional representations of G over R and the entrywise
   substitution psi sending ZG-matrices to Laurent matrices.

   Input matrices form a plain group homomorphism under the standard matrix
   product (Wada's convention); psi(g) = pi(g) * M(g). */

#include "tnov/abelian.hpp"
#include "tnov/matrix.hpp"
#include "tnov/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnov {

using RMatrix = Matrix<Coeff>;

struct Representation {
    CoefficientRing ring;
    int n = 1;
    std::vector<RMatrix> matrices;  // one per generator

    static Representation trivial(CoefficientRing ring, int n, size_t ngens);
};

struct ViolationReport {
    std::string kind;  // "generator" or "relator"
    size_t index = 0;
    std::string message;
};

// determinant over the coefficient ring
Coeff rmatrix_det(const RMatrix& m, const CoefficientRing& ring);
RMatrix rmatrix_mul(const RMatrix& a, const RMatrix& b, const CoefficientRing& ring);
RMatrix rmatrix_identity(const CoefficientRing& ring, int n);
// inverse of an invertible matrix (adjugate / det)
RMatrix rmatrix_inverse(const RMatrix& m, const CoefficientRing& ring);

// ok iff every generator matrix is invertible over R and every relator maps
// to the identity; reports the first failure
std::optional<ViolationReport> validate(const Representation& rep, const Presentation& p);

// JSON: {"ring": "Z" | "Q" | {"Zp": p}, "n": int, "matrices": {"<gen>": [[..],..]}}
Representation parse_representation_json(const std::string& text, const Presentation& p);

class SubstitutionMap {
  public:
    SubstitutionMap(const Representation& rep, const AbelianMap& pi, const Presentation& p);

    const Representation& rep() const { return *rep_; }
    const AbelianMap& pi() const { return *pi_; }
    int n() const { return rep_->n; }
    int vars() const { return pi_->k; }
    CoefficientRing ring() const { return rep_->ring; }

    // psi(w) = pi(w) * M(w), an n x n Laurent matrix
    LMatrix word(const FreeWord& w) const;
    // additive extension to ZG
    LMatrix element(const GroupRingElement& el) const;
    // blockwise application; result is n*rows x n*cols
    LMatrix matrix(const std::vector<std::vector<GroupRingElement>>& m) const;
    LMatrix column(const std::vector<GroupRingElement>& col) const;

  private:
    const Representation* rep_;
    const AbelianMap* pi_;
    std::vector<RMatrix> inverses_;
};

}  // namespace tnov
