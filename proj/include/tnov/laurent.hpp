#pragma once

/* Exact arithmetic in Lambda = R[t1^±,...,tk^±] for R in {Z, Q, Z/p}.
   Terms live in a map sorted by descending graded-lex, so begin() is the
   leading term and iteration order is canonical. */

#include "tnov/ring.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace tnov {

using Monomial = std::vector<int64_t>;  // exponent vector, length k

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_neg(const Monomial& a);

// graded-lex: compare total degree, then lexicographically (t1 heaviest).
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Coeff, GrlexDesc>;

    LaurentPoly() : k_(0) {}
    LaurentPoly(CoefficientRing ring, int k) : ring_(ring), k_(k) {}

    static LaurentPoly zero(CoefficientRing ring, int k) { return LaurentPoly(ring, k); }
    static LaurentPoly constant(CoefficientRing ring, int k, const Coeff& c);
    static LaurentPoly one(CoefficientRing ring, int k) { return constant(ring, k, 1); }
    static LaurentPoly monomial(CoefficientRing ring, int k, const Monomial& m, const Coeff& c);
    // single variable t_i (0-based)
    static LaurentPoly variable(CoefficientRing ring, int k, int i, int64_t e = 1);

    const CoefficientRing& ring() const { return ring_; }
    int vars() const { return k_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    // the coefficient of the zero monomial (poly must be constant or zero)
    Coeff constant_value() const;

    const Monomial& leading_monomial() const;
    const Coeff& leading_coeff() const;

    void set_term(const Monomial& m, const Coeff& c);  // drops zeros
    Coeff coeff_at(const Monomial& m) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::set<Monomial> newton_support() const;

    // units of Lambda are c*m with c a unit of R
    bool is_unit() const;

    std::string to_string() const;

  private:
    CoefficientRing ring_;
    int k_;
    TermMap terms_;

    friend LaurentPoly add(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly sub(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly neg(const LaurentPoly&);
    friend LaurentPoly mul(const LaurentPoly&, const LaurentPoly&);
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul_term(const LaurentPoly& a, const Monomial& m, const Coeff& c);
LaurentPoly scale(const LaurentPoly& a, const Coeff& c);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a) { return neg(a); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

// q with b*q = a, or nullopt; over Z coefficient divisibility is checked at
// each elimination step.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

// GCD in the factorial ring Lambda, canonical form; gcd(0,0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Unit-normalized associate: minimal exponent 0 in each variable, grlex-leading
// coefficient positive over Z, equal to 1 over Q and Z/p.  Idempotent.
LaurentPoly canonical_form(const LaurentPoly& a);

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// --- text form: grlex-descending terms, variables t1..tk (t when k=1) ---
std::string render(const LaurentPoly& a);
LaurentPoly parse_laurent(const std::string& text, CoefficientRing ring, int k);

}  // namespace tnov
