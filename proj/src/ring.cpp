#include "tnov/ring.hpp"

namespace tnov {

CoefficientRing CoefficientRing::prime_field(unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw input_error("prime_field: " + std::to_string(p) + " is not prime");
    return CoefficientRing(RingKind::prime_field, p);
}

Coeff CoefficientRing::normalize(const Coeff& v) const {
    switch (kind_) {
        case RingKind::rationals:
            return v;
        case RingKind::integers:
            if (v.get_den() != 1)
                throw math_error("non-integer value in ring Z: " + v.get_str());
            return v;
        case RingKind::prime_field: {
            if (v.get_den() % p_ == 0) throw math_error("division by p in Z/p");
            mpz_class p(p_);
            mpz_class num = v.get_num() % p;
            if (num < 0) num += p;
            mpz_class den = v.get_den() % p;
            if (den < 0) den += p;
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw math_error("division by p in Z/p");
            mpz_class r = (num * dinv) % p;
            return Coeff(r);
        }
    }
    return v;
}

bool CoefficientRing::is_unit(const Coeff& a) const {
    switch (kind_) {
        case RingKind::integers:
            return a == 1 || a == -1;
        default:
            return a != 0;
    }
}

std::optional<Coeff> CoefficientRing::exact_div(const Coeff& a, const Coeff& b) const {
    if (b == 0) throw math_error("coefficient division by zero");
    if (kind_ == RingKind::integers) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
        if (r != 0) return std::nullopt;
        return Coeff(q);
    }
    return normalize(a / b);
}

Coeff CoefficientRing::inv(const Coeff& a) const {
    if (!is_unit(a)) throw math_error("inverse of a non-unit");
    return normalize(Coeff(1) / a);
}

Coeff CoefficientRing::gcd(const Coeff& a, const Coeff& b) const {
    if (a == 0 && b == 0) return Coeff(0);
    if (kind_ != RingKind::integers) return Coeff(1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    return Coeff(g);
}

Coeff CoefficientRing::canonical_unit(const Coeff& a) const {
    if (a == 0) throw math_error("canonical unit of zero");
    switch (kind_) {
        case RingKind::integers:
            return a < 0 ? Coeff(-1) : Coeff(1);
        default:
            return inv(a);
    }
}

std::string CoefficientRing::to_string(const Coeff& a) const {
    return a.get_str();
}

std::string CoefficientRing::name() const {
    switch (kind_) {
        case RingKind::integers:
            return "Z";
        case RingKind::rationals:
            return "Q";
        case RingKind::prime_field:
            return "Z/" + std::to_string(p_);
    }
    return "?";
}

Coeff parse_coeff(const std::string& text) {
    try {
        Coeff c(text);
        c.canonicalize();
        return c;
    } catch (const std::exception&) {
        throw input_error("bad coefficient: '" + text + "'");
    }
}

}  // namespace tnov
