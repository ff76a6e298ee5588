#include "tnov/fitting.hpp"

#include <json.hpp>

#include <atomic>
#include <thread>

namespace tnov {

using nlohmann::json;

namespace {

// next k-combination in lexicographic order; false when exhausted
bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    if (k == 0) return false;
    size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<size_t> first_combination(size_t k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

struct GcdAccumulator {
    LaurentPoly g;       // canonical running gcd, zero initially
    bool any_nonzero = false;

    void feed(const LaurentPoly& d) {
        if (d.is_zero()) return;
        any_nonzero = true;
        g = g.is_zero() ? canonical_form(d) : gcd(g, d);
    }
    void merge(const GcdAccumulator& o) {
        if (!o.any_nonzero) return;
        any_nonzero = true;
        g = g.is_zero() ? o.g : gcd(g, o.g);
    }
    bool unit() const { return any_nonzero && g.is_unit(); }
};

}  // namespace

IdealValue minor_ideal_gcd(const LMatrix& m, long s, const MinorBudget& budget) {
    CoefficientRing ring = m.exemplar().ring();
    int k = m.exemplar().vars();
    if (s <= 0) return IdealValue{IdealClass::whole_ring, LaurentPoly::one(ring, k)};
    size_t su = static_cast<size_t>(s);
    if (su > std::min(m.rows(), m.cols()))
        return IdealValue{IdealClass::zero, LaurentPoly::zero(ring, k)};

    // row-major enumeration of (row set, column set) pairs
    std::vector<std::vector<size_t>> row_sets;
    {
        auto rs = first_combination(su);
        do {
            row_sets.push_back(rs);
            if (row_sets.size() > budget.max_minors) break;
        } while (next_combination(rs, m.rows()));
    }

    std::atomic<uint64_t> counter{0};
    std::atomic<bool> stop{false};
    int nth = std::max(1, budget.threads);
    size_t chunks = row_sets.size();
    std::vector<GcdAccumulator> acc(chunks);
    std::vector<bool> over_budget(chunks, false);

    auto work = [&](size_t chunk) {
        const auto& rows = row_sets[chunk];
        auto cols = first_combination(su);
        do {
            if (stop.load(std::memory_order_relaxed)) return;
            if (counter.fetch_add(1, std::memory_order_relaxed) >= budget.max_minors) {
                over_budget[chunk] = true;
                stop.store(true, std::memory_order_relaxed);
                return;
            }
            LaurentPoly d = determinant(m.select(rows, cols));
            acc[chunk].feed(d);
            if (acc[chunk].unit()) {
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        } while (next_combination(cols, m.cols()));
    };

    if (nth <= 1 || chunks <= 1) {
        for (size_t c = 0; c < chunks && !stop.load(); ++c) work(c);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nth; ++t)
            pool.emplace_back([&] {
                while (true) {
                    size_t c = next.fetch_add(1);
                    if (c >= chunks) return;
                    work(c);
                }
            });
        for (auto& th : pool) th.join();
    }

    // a unit running GCD anywhere already decides the classification: the GCD
    // of all minors divides the GCD of any evaluated subset
    GcdAccumulator total;
    for (const auto& a : acc) {
        total.merge(a);
        if (total.unit()) break;
    }
    if (total.unit()) return IdealValue{IdealClass::whole_ring, LaurentPoly::one(ring, k)};
    for (size_t c = 0; c < chunks; ++c)
        if (over_budget[c]) throw budget_exceeded("minor budget exceeded");
    if (!total.any_nonzero) return IdealValue{IdealClass::zero, LaurentPoly::zero(ring, k)};
    return IdealValue{IdealClass::proper, total.g};
}

// ------------------------------------------------------------- chain complexes

LMatrix ChainComplex::boundary_into(int d) const {
    if (d >= 0 && d < static_cast<int>(boundaries.size())) return boundaries[static_cast<size_t>(d)];
    return lmatrix_zero(ring, vars, static_cast<size_t>(rank_at(d + 1)),
                        static_cast<size_t>(rank_at(d)));
}

void ChainComplex::validate() const {
    if (boundaries.size() + 1 != ranks.size() && !(ranks.size() <= 1 && boundaries.empty()))
        throw math_error("chain complex: boundary count does not match rank count");
    for (size_t d = 0; d < boundaries.size(); ++d) {
        const LMatrix& b = boundaries[d];
        if (b.rows() != static_cast<size_t>(ranks[d + 1]) ||
            b.cols() != static_cast<size_t>(ranks[d]))
            throw math_error("chain complex: boundary " + std::to_string(d + 1) + " has wrong shape");
    }
    for (size_t d = 0; d + 1 < boundaries.size(); ++d) {
        // rows of d_{d+2} times d_{d+1}: composite C_{d+2} -> C_d must vanish
        LMatrix prod = lmatrix_mul(boundaries[d + 1], boundaries[d]);
        if (!lmatrix_is_zero(prod))
            throw math_error("chain complex: dd != 0 at degree " + std::to_string(d));
    }
}

ChainComplex trivial_complex(CoefficientRing ring, int vars, int degree, long rank) {
    if (degree < 0) throw math_error("trivial complex degree must be >= 0");
    ChainComplex c;
    c.ring = ring;
    c.vars = vars;
    c.ranks.assign(static_cast<size_t>(degree) + 2, 0);
    c.ranks[static_cast<size_t>(degree)] = rank;
    c.ranks[static_cast<size_t>(degree) + 1] = rank;
    for (int d = 0; d <= degree; ++d) {
        if (d == degree)
            c.boundaries.push_back(lmatrix_identity(ring, vars, static_cast<size_t>(rank)));
        else
            c.boundaries.push_back(lmatrix_zero(ring, vars, static_cast<size_t>(c.ranks[static_cast<size_t>(d) + 1]),
                                                static_cast<size_t>(c.ranks[static_cast<size_t>(d)])));
    }
    return c;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring != b.ring || a.vars != b.vars) throw math_error("direct sum: ring mismatch");
    ChainComplex c;
    c.ring = a.ring;
    c.vars = a.vars;
    int top = std::max(a.top_degree(), b.top_degree());
    c.ranks.resize(static_cast<size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d)
        c.ranks[static_cast<size_t>(d)] = a.rank_at(d) + b.rank_at(d);
    for (int d = 0; d < top; ++d) {
        LMatrix ba = a.boundary_into(d);
        LMatrix bb = b.boundary_into(d);
        LMatrix m = lmatrix_zero(c.ring, c.vars, static_cast<size_t>(c.rank_at(d + 1)),
                                 static_cast<size_t>(c.rank_at(d)));
        for (size_t i = 0; i < ba.rows(); ++i)
            for (size_t j = 0; j < ba.cols(); ++j) m.at(i, j) = ba.at(i, j);
        for (size_t i = 0; i < bb.rows(); ++i)
            for (size_t j = 0; j < bb.cols(); ++j)
                m.at(ba.rows() + i, ba.cols() + j) = bb.at(i, j);
        c.boundaries.push_back(m);
    }
    return c;
}

ChainComplex parse_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("chain complex JSON: ") + e.what());
    }
    ChainComplex c;
    c.ring = CoefficientRing::integers();
    if (j.contains("ring")) {
        const json& jr = j["ring"];
        if (jr.is_string() && jr == "Z")
            c.ring = CoefficientRing::integers();
        else if (jr.is_string() && jr == "Q")
            c.ring = CoefficientRing::rationals();
        else if (jr.is_object() && jr.contains("Zp"))
            c.ring = CoefficientRing::prime_field(jr["Zp"].get<unsigned long>());
        else
            throw input_error("chain complex JSON: bad 'ring'");
    }
    if (!j.contains("ranks") || !j["ranks"].is_array())
        throw input_error("chain complex JSON: missing 'ranks'");
    for (const auto& r : j["ranks"]) c.ranks.push_back(r.get<long>());
    c.vars = j.value("vars", 0);
    if (!j.contains("boundaries") || !j["boundaries"].is_array())
        throw input_error("chain complex JSON: missing 'boundaries'");
    const json& jb = j["boundaries"];
    for (size_t d = 0; d < jb.size(); ++d) {
        if (d + 1 >= c.ranks.size()) throw input_error("chain complex JSON: too many boundaries");
        size_t rows = static_cast<size_t>(c.ranks[d + 1]);
        size_t cols = static_cast<size_t>(c.ranks[d]);
        if (!jb[d].is_array() || jb[d].size() != rows * cols)
            throw input_error("chain complex JSON: boundary " + std::to_string(d + 1) +
                              " needs " + std::to_string(rows * cols) + " entries");
        LMatrix m = lmatrix_zero(c.ring, c.vars, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t jj = 0; jj < cols; ++jj) {
                const json& cell = jb[d][i * cols + jj];
                if (cell.is_number_integer())
                    m.at(i, jj) = LaurentPoly::constant(c.ring, c.vars, Coeff(cell.get<long>()));
                else
                    m.at(i, jj) = parse_laurent(cell.get<std::string>(), c.ring, c.vars);
            }
        c.boundaries.push_back(m);
    }
    c.validate();
    return c;
}

std::string complex_to_json(const ChainComplex& c) {
    json j;
    j["ranks"] = c.ranks;
    j["vars"] = c.vars;
    if (c.ring.kind() == RingKind::integers)
        j["ring"] = "Z";
    else if (c.ring.kind() == RingKind::rationals)
        j["ring"] = "Q";
    else
        j["ring"] = json{{"Zp", c.ring.prime()}};
    json jb = json::array();
    for (const LMatrix& m : c.boundaries) {
        json e = json::array();
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t jj = 0; jj < m.cols(); ++jj) e.push_back(render(m.at(i, jj)));
        jb.push_back(e);
    }
    j["boundaries"] = jb;
    return j.dump(2);
}

// ------------------------------------------------------------ Fitting sequences

IdealValue FittingSequence::ideal_at(long m) const {
    long s = minor_size(m);
    if (s <= 0) return IdealValue{IdealClass::whole_ring, LaurentPoly::one(ring, vars)};
    for (const FittingEntry& e : window)
        if (e.m == m) return e.ideal;
    return IdealValue{IdealClass::zero, LaurentPoly::zero(ring, vars)};
}

FittingSequence fitting_sequence(const ChainComplex& c, int degree, const MinorBudget& budget) {
    if (degree < 0 || degree > c.top_degree())
        throw math_error("fitting_sequence: degree out of range");
    FittingSequence fs;
    fs.ring = c.ring;
    fs.vars = c.vars;
    fs.degree = degree;
    fs.gamma_k = c.rank_at(degree);
    fs.sigma_k = 0;
    for (int d = degree, sign = 1; d >= 0; --d, sign = -sign) fs.sigma_k += sign * c.rank_at(d);
    LMatrix b = c.boundary_into(degree);  // d_{degree+1}
    fs.a_k = fs.gamma_k - static_cast<long>(rank_over_fractions(b));
    long smax = std::min<long>(static_cast<long>(b.rows()), static_cast<long>(b.cols()));
    // window: m with 1 <= s(m) <= smax, increasing m means decreasing s
    for (long s = smax; s >= 1; --s) {
        long m = fs.sigma_k - s + 1;
        FittingEntry e;
        e.m = m;
        e.ideal = minor_ideal_gcd(b, s, budget);
        fs.window.push_back(e);
    }
    for (const FittingEntry& e : fs.window)
        if (e.ideal.nontrivial()) fs.reduced.push_back(e.ideal.gcd);
    return fs;
}

// --------------------------------------------------------- homology over a PID

HomologySummary homology_over_pid(const ChainComplex& c, const MinorBudget& budget) {
    if (c.vars != 0 || c.ring.kind() != RingKind::integers)
        throw math_error("homology_over_pid expects an integer complex");
    int top = c.top_degree();
    std::vector<FittingSequence> fs;
    for (int d = 0; d <= top; ++d) fs.push_back(fitting_sequence(c, d, budget));
    HomologySummary h;
    for (int d = 0; d <= top; ++d) {
        long a_km1 = d > 0 ? fs[static_cast<size_t>(d) - 1].a_k : 0;
        long gamma_km1 = c.rank_at(d - 1);
        h.betti.push_back(fs[static_cast<size_t>(d)].a_k + a_km1 - gamma_km1);
        const auto& red = fs[static_cast<size_t>(d)].reduced;
        h.torsion_number.push_back(static_cast<long>(red.size()));
        std::vector<mpz_class> orders;
        for (size_t i = 0; i < red.size(); ++i) {
            LaurentPoly next = (i + 1 < red.size()) ? red[i + 1] : LaurentPoly::one(c.ring, 0);
            auto q = exact_div(red[i], next);
            if (!q) throw math_error("torsion quotient division failed (internal)");
            mpz_class tau = abs(canonical_form(*q).constant_value().get_num());
            orders.push_back(tau);
        }
        h.torsion_orders.push_back(orders);
    }
    return h;
}

// --------------------------------------------- resolutions and twisted Fitting

ResolutionFront resolution_from_presentation(const Presentation& p) {
    ResolutionFront f;
    f.presentation = &p;
    f.alpha = fundamental_column(p);
    f.alex = alexander_matrix(p);
    return f;
}

ChainComplex twisted_front(const Presentation& p, const SubstitutionMap& subst) {
    ResolutionFront f = resolution_from_presentation(p);
    long n = subst.n();
    ChainComplex c;
    c.ring = subst.ring();
    c.vars = subst.vars();
    c.ranks = {n, n * static_cast<long>(p.num_generators()),
               n * static_cast<long>(p.num_relators())};
    c.boundaries.push_back(subst.column(f.alpha));  // d1: ns x n
    c.boundaries.push_back(subst.matrix(f.alex));   // d2: nl x ns
    return c;
}

IdealValue twisted_fitting(const Presentation& p, const SubstitutionMap& subst, long m,
                           const MinorBudget& budget) {
    long n = subst.n();
    long s = static_cast<long>(p.num_generators());
    LMatrix b = subst.matrix(alexander_matrix(p));
    long size = n * (s - 1) - m + 1;
    return minor_ideal_gcd(b, size, budget);
}

}  // namespace tnov
