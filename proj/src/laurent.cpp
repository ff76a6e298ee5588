#include "tnov/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tnov {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_neg(const Monomial& a) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    int64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

LaurentPoly LaurentPoly::constant(CoefficientRing ring, int k, const Coeff& c) {
    LaurentPoly p(ring, k);
    p.set_term(Monomial(k, 0), ring.normalize(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(CoefficientRing ring, int k, const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.size()) != k) throw math_error("monomial length mismatch");
    LaurentPoly p(ring, k);
    p.set_term(m, ring.normalize(c));
    return p;
}

LaurentPoly LaurentPoly::variable(CoefficientRing ring, int k, int i, int64_t e) {
    if (i < 0 || i >= k) throw math_error("variable index out of range");
    Monomial m(k, 0);
    m[i] = e;
    return monomial(ring, k, m, 1);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int64_t e) { return e == 0; });
}

Coeff LaurentPoly::constant_value() const {
    if (terms_.empty()) return Coeff(0);
    if (!is_constant()) throw math_error("constant_value of a non-constant polynomial");
    return terms_.begin()->second;
}

const Monomial& LaurentPoly::leading_monomial() const {
    if (terms_.empty()) throw math_error("leading term of zero");
    return terms_.begin()->first;
}

const Coeff& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw math_error("leading term of zero");
    return terms_.begin()->second;
}

void LaurentPoly::set_term(const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.size()) != k_) throw math_error("monomial length mismatch");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Coeff LaurentPoly::coeff_at(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && k_ == o.k_ && terms_ == o.terms_;
}

std::set<Monomial> LaurentPoly::newton_support() const {
    std::set<Monomial> s;
    for (auto& [m, c] : terms_) s.insert(m);
    return s;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && ring_.is_unit(terms_.begin()->second);
}

static void check_compat(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ring() != b.ring()) throw math_error("coefficient ring mismatch");
    if (a.vars() != b.vars()) throw math_error("variable count mismatch");
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    LaurentPoly r = a;
    for (auto& [m, c] : b.terms_) {
        Coeff s = r.ring_.add(r.coeff_at(m), c);
        r.set_term(m, s);
    }
    return r;
}

LaurentPoly neg(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.terms_) c = r.ring_.neg(c);
    return r;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, neg(b)); }

LaurentPoly mul_term(const LaurentPoly& a, const Monomial& m, const Coeff& c) {
    LaurentPoly r(a.ring(), a.vars());
    if (c == 0) return r;
    for (auto& [ma, ca] : a.terms())
        r.set_term(mono_mul(ma, m), a.ring().mul(ca, c));
    return r;
}

LaurentPoly scale(const LaurentPoly& a, const Coeff& c) {
    return mul_term(a, Monomial(a.vars(), 0), c);
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    LaurentPoly r(a.ring(), a.vars());
    for (auto& [mb, cb] : b.terms_) {
        for (auto& [ma, ca] : a.terms_) {
            Monomial m = mono_mul(ma, mb);
            r.set_term(m, r.ring().add(r.coeff_at(m), r.ring().mul(ca, cb)));
        }
    }
    return r;
}

// ---------------------------------------------------------------- division

namespace {

Monomial min_exponents(const LaurentPoly& p) {
    int k = p.vars();
    Monomial mn(k, 0);
    for (int i = 0; i < k; ++i) {
        int64_t m = INT64_MAX;
        for (auto& [mo, c] : p.terms()) m = std::min(m, mo[i]);
        mn[i] = m;
    }
    return mn;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    if (b.is_zero()) throw math_error("division by zero polynomial");
    if (a.is_zero()) return a;
    // Shift both to nonnegative exponents.  Per-variable minimal exponents are
    // additive under products in a domain, so a Laurent quotient of the shifted
    // pair is an ordinary polynomial and grlex descent terminates.
    Monomial sa = min_exponents(a), sb = min_exponents(b);
    LaurentPoly ra = mul_term(a, mono_neg(sa), Coeff(1));
    LaurentPoly rb = mul_term(b, mono_neg(sb), Coeff(1));
    const Monomial& lmb = rb.leading_monomial();
    const Coeff& lcb = rb.leading_coeff();
    LaurentPoly q(a.ring(), a.vars());
    LaurentPoly r = ra;
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        Monomial qm = mono_div(lmr, lmb);
        for (int64_t e : qm)
            if (e < 0) return std::nullopt;
        auto qc = a.ring().exact_div(r.leading_coeff(), lcb);
        if (!qc) return std::nullopt;
        q.set_term(qm, *qc);
        r = sub(r, mul_term(rb, qm, *qc));
    }
    // undo the shifts: a/b = t^(sa-sb) * (ra/rb)
    return mul_term(q, mono_div(sa, sb), Coeff(1));
}

// ---------------------------------------------------------------- canonical

LaurentPoly canonical_form(const LaurentPoly& a) {
    if (a.is_zero()) throw math_error("canonical form of zero");
    int k = a.vars();
    Monomial shift(k, 0);
    for (int i = 0; i < k; ++i) {
        int64_t mn = INT64_MAX;
        for (auto& [m, c] : a.terms()) mn = std::min(mn, m[i]);
        shift[i] = -mn;
    }
    LaurentPoly r = mul_term(a, shift, Coeff(1));
    Coeff u = a.ring().canonical_unit(r.leading_coeff());
    if (u != 1) r = scale(r, u);
    return r;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------- gcd

namespace {

// dense univariate view in the last variable; coefficients drop a variable
struct UniView {
    std::vector<LaurentPoly> c;  // c[d] = coefficient of x^d, a (k-1)-variable poly
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

LaurentPoly lift_last_var(const LaurentPoly& p, int64_t e) {
    LaurentPoly r(p.ring(), p.vars() + 1);
    for (auto& [m, co] : p.terms()) {
        Monomial m2 = m;
        m2.push_back(e);
        r.set_term(m2, co);
    }
    return r;
}

UniView to_uni(const LaurentPoly& p) {
    UniView v;
    if (p.is_zero()) return v;
    int k = p.vars();
    int64_t dmax = 0;
    for (auto& [m, c] : p.terms()) dmax = std::max(dmax, m[k - 1]);
    v.c.assign(static_cast<size_t>(dmax) + 1, LaurentPoly::zero(p.ring(), k - 1));
    for (auto& [m, c] : p.terms()) {
        Monomial m2(m.begin(), m.end() - 1);
        LaurentPoly& slot = v.c[static_cast<size_t>(m[k - 1])];
        slot = add(slot, LaurentPoly::monomial(p.ring(), k - 1, m2, c));
    }
    return v;
}

LaurentPoly from_uni(const UniView& v, CoefficientRing ring, int k) {
    LaurentPoly r(ring, k);
    for (size_t d = 0; d < v.c.size(); ++d)
        r = add(r, lift_last_var(v.c[d], static_cast<int64_t>(d)));
    return r;
}

LaurentPoly gcd_shifted(const LaurentPoly& a, const LaurentPoly& b);

// content of the univariate view = gcd of its coefficients
LaurentPoly uni_content(const UniView& v, CoefficientRing ring, int k) {
    LaurentPoly g = LaurentPoly::zero(ring, k - 1);
    for (const auto& ci : v.c) {
        if (ci.is_zero()) continue;
        g = g.is_zero() ? canonical_form(ci) : gcd_shifted(g, ci);
        if (g.is_unit()) break;
    }
    return g;
}

UniView uni_divide_content(const UniView& v, const LaurentPoly& content) {
    UniView r;
    r.c.reserve(v.c.size());
    for (const auto& ci : v.c) {
        if (ci.is_zero()) {
            r.c.push_back(ci);
        } else {
            auto q = exact_div(ci, content);
            if (!q) throw math_error("content division failed");
            r.c.push_back(*q);
        }
    }
    return r;
}

// pseudo-remainder of u by w in the last variable
UniView uni_prem(UniView u, const UniView& w) {
    int dw = w.deg();
    const LaurentPoly& lw = w.c.back();
    u.trim();
    while (!u.zero() && u.deg() >= dw) {
        int du = u.deg();
        LaurentPoly lu = u.c.back();
        // u := lw*u - lu * x^(du-dw) * w
        for (auto& ci : u.c) ci = mul(ci, lw);
        for (int i = 0; i <= dw; ++i) {
            size_t j = static_cast<size_t>(du - dw + i);
            u.c[j] = sub(u.c[j], mul(lu, w.c[static_cast<size_t>(i)]));
        }
        u.trim();
    }
    return u;
}

// gcd of polynomials with nonnegative exponents, recursive primitive PRS
LaurentPoly gcd_shifted(const LaurentPoly& a, const LaurentPoly& b) {
    const CoefficientRing& ring = a.ring();
    int k = a.vars();
    if (a.is_zero()) return b.is_zero() ? b : canonical_form(b);
    if (b.is_zero()) return canonical_form(a);
    if (k == 0)
        return LaurentPoly::constant(ring, 0, ring.gcd(a.constant_value(), b.constant_value()));

    UniView u = to_uni(a), w = to_uni(b);
    u.trim();
    w.trim();
    // contents over the subring in the remaining variables
    LaurentPoly ca = uni_content(u, ring, k);
    LaurentPoly cb = uni_content(w, ring, k);
    LaurentPoly cg = gcd_shifted(ca, cb);
    u = uni_divide_content(u, ca);
    w = uni_divide_content(w, cb);

    if (u.deg() < w.deg()) std::swap(u, w);
    while (!w.zero() && w.deg() > 0) {
        UniView r = uni_prem(u, w);
        if (!r.zero()) {
            LaurentPoly cr = uni_content(r, ring, k);
            r = uni_divide_content(r, cr);
        }
        u = w;
        w = r;
    }
    LaurentPoly lifted;
    if (w.zero()) {
        lifted = from_uni(u, ring, k);
    } else {
        // degree-0 remainder: primitive parts are coprime in the main variable
        lifted = LaurentPoly::one(ring, k);
    }
    LaurentPoly result = mul(lift_last_var(cg, 0), lifted);
    return canonical_form(result);
}

LaurentPoly shift_nonneg(const LaurentPoly& p) {
    int k = p.vars();
    Monomial shift(k, 0);
    for (int i = 0; i < k; ++i) {
        int64_t mn = INT64_MAX;
        for (auto& [m, c] : p.terms()) mn = std::min(mn, m[i]);
        shift[i] = -mn;
    }
    return mul_term(p, shift, Coeff(1));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return canonical_form(b);
    if (b.is_zero()) return canonical_form(a);
    return gcd_shifted(shift_nonneg(a), shift_nonneg(b));
}

// ---------------------------------------------------------------- text form

static std::string var_name(int k, int i) {
    return k == 1 ? "t" : "t" + std::to_string(i + 1);
}

static std::string term_string(int k, const Monomial& m, const Coeff& c, bool first) {
    std::ostringstream os;
    Coeff ca = c;
    bool negative = c < 0;
    if (negative) ca = -ca;
    if (first) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    bool any_var = std::any_of(m.begin(), m.end(), [](int64_t e) { return e != 0; });
    bool coeff_one = (ca == 1);
    if (!any_var || !coeff_one) os << ca.get_str();
    bool printed = !any_var || !coeff_one;
    for (int i = 0; i < k; ++i) {
        if (m[i] == 0) continue;
        if (printed) os << "*";
        os << var_name(k, i);
        if (m[i] != 1) os << "^" << m[i];
        printed = true;
    }
    return os.str();
}

std::string render(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : a.terms()) {
        os << term_string(a.vars(), m, c, first);
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::to_string() const { return render(*this); }

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("polynomial parse error at position " + std::to_string(pos) + ": " + msg);
    }
};

int64_t parse_int(Lexer& lx) {
    lx.skip_ws();
    size_t start = lx.pos;
    if (lx.pos < lx.s.size() && (lx.s[lx.pos] == '-' || lx.s[lx.pos] == '+')) ++lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start || (lx.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(lx.s[start]))))
        lx.fail("expected integer");
    return std::stoll(lx.s.substr(start, lx.pos - start));
}

Coeff parse_number(Lexer& lx) {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    std::string num = lx.s.substr(start, lx.pos - start);
    if (num.empty()) lx.fail("expected number");
    size_t save = lx.pos;
    lx.skip_ws();
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
        ++lx.pos;
        lx.skip_ws();
        size_t dstart = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
        std::string den = lx.s.substr(dstart, lx.pos - dstart);
        if (den.empty()) lx.fail("expected denominator");
        return parse_coeff(num + "/" + den);
    }
    lx.pos = save;
    return parse_coeff(num);
}

// factor := number | var [^int]
// term   := factor (* factor)*
// poly   := [+-] term ([+-] term)*
LaurentPoly parse_term(Lexer& lx, CoefficientRing ring, int k) {
    Coeff coeff(1);
    Monomial mono(k, 0);
    bool expect_factor = true;
    while (true) {
        char c = lx.peek();
        if (expect_factor) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number(lx);
            } else if (c == 't') {
                lx.get();
                int idx = 0;
                if (k != 1) {
                    lx.skip_ws();
                    size_t start = lx.pos;
                    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                        ++lx.pos;
                    if (lx.pos == start) lx.fail("expected variable index");
                    idx = std::stoi(lx.s.substr(start, lx.pos - start)) - 1;
                    if (idx < 0 || idx >= k) lx.fail("variable index out of range");
                } else if (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
                    // allow t1 for k=1 as well
                    size_t start = lx.pos;
                    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                        ++lx.pos;
                    idx = std::stoi(lx.s.substr(start, lx.pos - start)) - 1;
                    if (idx != 0) lx.fail("variable index out of range");
                }
                int64_t e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    e = parse_int(lx);
                }
                mono[idx] += e;
            } else {
                lx.fail("expected coefficient or variable");
            }
            expect_factor = false;
        } else if (c == '*') {
            lx.get();
            expect_factor = true;
        } else {
            break;
        }
    }
    return LaurentPoly::monomial(ring, k, mono, ring.normalize(coeff));
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, CoefficientRing ring, int k) {
    Lexer lx(text);
    LaurentPoly result(ring, k);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        LaurentPoly term = parse_term(lx, ring, k);
        result = add(result, sign == 1 ? term : neg(term));
        first = false;
    }
    if (first) throw input_error("empty polynomial text");
    return result;
}

}  // namespace tnov
