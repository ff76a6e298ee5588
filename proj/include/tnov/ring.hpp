#pragma once

/* Coefficient rings: Z, Q, Z/p.  All three are factorial commutative domains;
   coefficients are exact (GMP-backed), values are kept normalized per ring. */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tnov {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { integers, rationals, prime_field };

using Coeff = mpq_class;

class CoefficientRing {
  public:
    CoefficientRing() : kind_(RingKind::integers) {}
    static CoefficientRing integers() { return CoefficientRing(RingKind::integers, 0); }
    static CoefficientRing rationals() { return CoefficientRing(RingKind::rationals, 0); }
    static CoefficientRing prime_field(unsigned long p);

    RingKind kind() const { return kind_; }
    unsigned long prime() const { return p_; }
    bool is_field() const { return kind_ != RingKind::integers; }
    bool operator==(const CoefficientRing& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoefficientRing& o) const { return !(*this == o); }

    // Bring an arbitrary rational into the ring (reduce mod p, check integrality).
    Coeff normalize(const Coeff& v) const;

    Coeff add(const Coeff& a, const Coeff& b) const { return normalize(a + b); }
    Coeff mul(const Coeff& a, const Coeff& b) const { return normalize(a * b); }
    Coeff neg(const Coeff& a) const { return normalize(-a); }
    bool is_zero(const Coeff& a) const { return a == 0; }
    bool is_unit(const Coeff& a) const;

    // q with b*q = a, if it exists in the ring.
    std::optional<Coeff> exact_div(const Coeff& a, const Coeff& b) const;

    // Inverse of a unit.
    Coeff inv(const Coeff& a) const;

    // gcd up to units; over a field: 1 unless both inputs are zero.
    Coeff gcd(const Coeff& a, const Coeff& b) const;

    // The unit u such that u*a is the canonical associate (positive over Z, 1 over fields).
    Coeff canonical_unit(const Coeff& a) const;

    std::string to_string(const Coeff& a) const;
    std::string name() const;

  private:
    CoefficientRing(RingKind k, unsigned long p) : kind_(k), p_(p) {}
    RingKind kind_;
    unsigned long p_;
};

Coeff parse_coeff(const std::string& text);

}  // namespace tnov
