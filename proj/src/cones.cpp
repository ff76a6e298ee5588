#include "tnov/cones.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tnov {

using nlohmann::json;

std::string tag_name(ConeTag t) {
    switch (t) {
        case ConeTag::empty: return "empty";
        case ConeTag::all_nonzero: return "all-nonzero";
        case ConeTag::complement_of_hyperplanes: return "complement-of-hyperplanes";
        case ConeTag::generic: return "generic";
    }
    return "?";
}

namespace {

struct Constraint {
    std::vector<mpq_class> c;
    bool strict = true;
};

bool all_zero(const std::vector<mpq_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

// Fourier-Motzkin with strict/weak constraints; returns a witness when feasible
std::optional<std::vector<mpq_class>> fm_feasible(std::vector<Constraint> cons, int dim) {
    std::vector<std::vector<Constraint>> levels;  // system before eliminating var v
    for (int v = dim - 1; v >= 0; --v) {
        for (const Constraint& k : cons) {
            if (all_zero(k.c) && k.strict) return std::nullopt;  // 0 > 0
        }
        levels.push_back(cons);
        std::vector<Constraint> next;
        std::vector<const Constraint*> pos, negs;
        for (const Constraint& k : cons) {
            if (k.c[static_cast<size_t>(v)] > 0)
                pos.push_back(&k);
            else if (k.c[static_cast<size_t>(v)] < 0)
                negs.push_back(&k);
            else
                next.push_back(k);
        }
        for (const Constraint* p : pos)
            for (const Constraint* n : negs) {
                Constraint comb;
                comb.c.resize(static_cast<size_t>(dim), 0);
                mpq_class cp = p->c[static_cast<size_t>(v)];
                mpq_class cn = -n->c[static_cast<size_t>(v)];
                for (size_t i = 0; i < comb.c.size(); ++i)
                    comb.c[i] = cn * p->c[i] + cp * n->c[i];
                comb.strict = p->strict || n->strict;
                next.push_back(comb);
            }
        cons = std::move(next);
    }
    for (const Constraint& k : cons)
        if (k.strict) return std::nullopt;  // leftover 0 > 0

    // back-substitute a witness: var 0 was eliminated last, so the system just
    // before its elimination involves var 0 alone; solve upward from there
    std::vector<mpq_class> w(static_cast<size_t>(dim), 0);
    for (int v = 0; v < dim; ++v) {
        const auto& level = levels[static_cast<size_t>(dim - 1 - v)];
        bool has_lo = false, has_hi = false;
        mpq_class lo, hi;
        for (const Constraint& k : level) {
            mpq_class cv = k.c[static_cast<size_t>(v)];
            if (cv == 0) continue;
            mpq_class rest(0);
            for (int i = 0; i < v; ++i)
                rest += k.c[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
            mpq_class bound = -rest / cv;
            if (cv > 0) {  // x_v > bound (or >=)
                if (!has_lo || bound > lo) {
                    lo = bound;
                    has_lo = true;
                }
            } else {
                if (!has_hi || bound < hi) {
                    hi = bound;
                    has_hi = true;
                }
            }
        }
        mpq_class x;
        if (has_lo && has_hi) {
            x = (lo + hi) / 2;
            if (lo == hi) x = lo;  // only possible when both bounds are weak
        } else if (has_lo) {
            x = lo + 1;
        } else if (has_hi) {
            x = hi - 1;
        } else {
            x = 0;
        }
        w[static_cast<size_t>(v)] = x;
    }
    return w;
}

IneqVector normalize_ineq(const IneqVector& d) {
    mpz_class g(0);
    for (const auto& e : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 0) return d;
    IneqVector r = d;
    for (auto& e : r) e /= g;
    return r;
}

IneqVector normalize_wall(const IneqVector& d) {
    IneqVector r = normalize_ineq(d);
    for (const auto& e : r) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& x : r) x = -x;
        break;
    }
    return r;
}

std::vector<Constraint> to_constraints(const std::vector<IneqVector>& sys, int dim) {
    std::vector<Constraint> cons;
    cons.reserve(sys.size());
    for (const IneqVector& d : sys) {
        Constraint k;
        k.c.reserve(static_cast<size_t>(dim));
        for (const auto& e : d) k.c.emplace_back(e);
        k.strict = true;
        cons.push_back(std::move(k));
    }
    return cons;
}

}  // namespace

std::optional<std::vector<mpq_class>> strict_feasible(const std::vector<IneqVector>& system,
                                                      int dim) {
    return fm_feasible(to_constraints(system, dim), dim);
}

ConeSystem acyclicity_cones(const LaurentPoly& a) {
    ConeSystem sys;
    sys.dim = a.vars();
    if (a.is_zero()) {
        sys.tag = ConeTag::empty;
        return sys;
    }
    auto support = a.newton_support();
    if (support.size() == 1) {
        if (a.ring().is_unit(a.leading_coeff())) {
            sys.tag = ConeTag::all_nonzero;
            Cone c;
            c.vertex = *support.begin();
            c.witness.assign(static_cast<size_t>(sys.dim), 0);
            if (sys.dim > 0) c.witness[0] = 1;
            sys.cones.push_back(c);
        } else {
            sys.tag = ConeTag::empty;
        }
        return sys;
    }
    std::vector<Monomial> vertices;  // feasible normal cones, unit or not
    for (const Monomial& v : support) {
        std::vector<IneqVector> ineqs;
        for (const Monomial& p : support) {
            if (p == v) continue;
            IneqVector d(v.size());
            for (size_t i = 0; i < v.size(); ++i) d[i] = mpz_class(static_cast<long>(v[i] - p[i]));
            IneqVector nd = normalize_ineq(d);
            if (std::find(ineqs.begin(), ineqs.end(), nd) == ineqs.end()) ineqs.push_back(nd);
        }
        auto witness = strict_feasible(ineqs, sys.dim);
        if (!witness) continue;
        vertices.push_back(v);
        if (!a.ring().is_unit(a.coeff_at(v))) continue;
        Cone c;
        c.vertex = v;
        c.gt = ineqs;
        c.witness = *witness;
        sys.cones.push_back(c);
    }
    if (a.ring().is_field()) {
        sys.tag = ConeTag::complement_of_hyperplanes;
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j) {
                IneqVector d(vertices[i].size());
                for (size_t l = 0; l < d.size(); ++l)
                    d[l] = mpz_class(static_cast<long>(vertices[i][l] - vertices[j][l]));
                IneqVector w = normalize_wall(d);
                if (std::find(sys.walls.begin(), sys.walls.end(), w) == sys.walls.end())
                    sys.walls.push_back(w);
            }
        std::sort(sys.walls.begin(), sys.walls.end());
    } else {
        sys.tag = ConeTag::generic;
    }
    if (sys.cones.empty()) sys.tag = ConeTag::empty;
    return sys;
}

MembershipResult membership(const ConeSystem& sys, const CohomologyClass& xi) {
    if (static_cast<int>(xi.dim()) != sys.dim) throw math_error("membership: dimension mismatch");
    if (xi.is_zero()) throw math_error("membership: xi must be non-zero");
    for (size_t i = 0; i < sys.cones.size(); ++i) {
        bool ok = true;
        for (const IneqVector& d : sys.cones[i].gt) {
            mpq_class s(0);
            for (size_t l = 0; l < d.size(); ++l) s += xi.xi[l] * mpq_class(d[l]);
            if (!(s > 0)) {
                ok = false;
                break;
            }
        }
        if (ok) return MembershipResult{true, static_cast<int>(i)};
    }
    return MembershipResult{false, -1};
}

ConeSystem intersect(const std::vector<ConeSystem>& systems) {
    if (systems.empty()) throw math_error("intersect: no systems");
    for (const ConeSystem& s : systems)
        if (s.dim != systems[0].dim) throw math_error("intersect: dimension mismatch");
    ConeSystem acc = systems[0];
    for (size_t si = 1; si < systems.size(); ++si) {
        const ConeSystem& b = systems[si];
        ConeSystem out;
        out.dim = acc.dim;
        for (const Cone& ca : acc.cones)
            for (const Cone& cb : b.cones) {
                Cone c;
                c.vertex = mono_mul(ca.vertex, cb.vertex);
                c.gt = ca.gt;
                for (const IneqVector& d : cb.gt)
                    if (std::find(c.gt.begin(), c.gt.end(), d) == c.gt.end()) c.gt.push_back(d);
                auto witness = strict_feasible(c.gt, out.dim);
                if (!witness) continue;
                c.witness = *witness;
                out.cones.push_back(c);
            }
        if (out.cones.empty())
            out.tag = ConeTag::empty;
        else if (acc.tag == ConeTag::all_nonzero)
            out.tag = b.tag;
        else if (b.tag == ConeTag::all_nonzero)
            out.tag = acc.tag;
        else
            out.tag = ConeTag::generic;
        acc = std::move(out);
    }
    return acc;
}

ConeSystem minimize(const ConeSystem& sys) {
    ConeSystem out = sys;
    for (Cone& c : out.cones) {
        std::vector<IneqVector> kept = c.gt;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < kept.size(); ++i) {
                if (kept.size() == 1) break;
                std::vector<Constraint> cons;
                for (size_t j = 0; j < kept.size(); ++j) {
                    if (j == i) continue;
                    Constraint k;
                    for (const auto& e : kept[j]) k.c.emplace_back(e);
                    k.strict = true;
                    cons.push_back(std::move(k));
                }
                Constraint negated;  // <xi, -d> >= 0
                for (const auto& e : kept[i]) negated.c.emplace_back(-mpq_class(e));
                negated.strict = false;
                cons.push_back(std::move(negated));
                if (!fm_feasible(cons, out.dim)) {  // implied by the rest
                    kept.erase(kept.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
        c.gt = kept;
    }
    return out;
}

// ------------------------------------------------------------------------ JSON

static json ineq_to_json(const IneqVector& d) {
    json a = json::array();
    for (const auto& e : d) {
        if (!e.fits_slong_p()) throw math_error("inequality coefficient too large for JSON");
        a.push_back(e.get_si());
    }
    return a;
}

std::string cones_to_json(const ConeSystem& sys) {
    json j;
    j["dim"] = sys.dim;
    j["tag"] = tag_name(sys.tag);
    json cones = json::array();
    for (const Cone& c : sys.cones) {
        json jc;
        json v = json::array();
        for (int64_t e : c.vertex) v.push_back(e);
        jc["vertex"] = v;
        json gt = json::array();
        for (const IneqVector& d : c.gt) gt.push_back(ineq_to_json(d));
        jc["gt"] = gt;
        cones.push_back(jc);
    }
    j["cones"] = cones;
    if (sys.tag == ConeTag::complement_of_hyperplanes) {
        json walls = json::array();
        for (const IneqVector& d : sys.walls) walls.push_back(ineq_to_json(d));
        j["walls"] = walls;
    }
    return j.dump(2);
}

ConeSystem cones_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("cone JSON: ") + e.what());
    }
    ConeSystem sys;
    sys.dim = j.at("dim").get<int>();
    std::string tag = j.at("tag").get<std::string>();
    if (tag == "empty")
        sys.tag = ConeTag::empty;
    else if (tag == "all-nonzero")
        sys.tag = ConeTag::all_nonzero;
    else if (tag == "complement-of-hyperplanes")
        sys.tag = ConeTag::complement_of_hyperplanes;
    else
        sys.tag = ConeTag::generic;
    for (const auto& jc : j.at("cones")) {
        Cone c;
        for (const auto& e : jc.at("vertex")) c.vertex.push_back(e.get<int64_t>());
        for (const auto& jd : jc.at("gt")) {
            IneqVector d;
            for (const auto& e : jd) d.emplace_back(e.get<long>());
            c.gt.push_back(d);
        }
        auto w = strict_feasible(c.gt, sys.dim);
        if (w) c.witness = *w;
        sys.cones.push_back(c);
    }
    if (j.contains("walls"))
        for (const auto& jd : j["walls"]) {
            IneqVector d;
            for (const auto& e : jd) d.emplace_back(e.get<long>());
            sys.walls.push_back(d);
        }
    return sys;
}

std::vector<std::string> sweep_table(const ConeSystem& sys, int samples) {
    if (sys.dim != 2) throw math_error("sweep table needs dimension 2");
    std::vector<std::string> rows;
    for (int i = 0; i < samples; ++i) {
        double theta = 2.0 * M_PI * i / samples;
        // exact rational sample approximating the angle
        long px = std::lround(std::cos(theta) * 1000000.0);
        long py = std::lround(std::sin(theta) * 1000000.0);
        if (px == 0 && py == 0) px = 1;
        CohomologyClass xi;
        mpq_class qx(px, 1000000), qy(py, 1000000);
        qx.canonicalize();
        qy.canonicalize();
        xi.xi = {qx, qy};
        MembershipResult m = membership(sys, xi);
        std::ostringstream os;
        os << i << " " << xi.xi[0].get_str() << " " << xi.xi[1].get_str() << " "
           << (m.inside ? 1 : 0) << " " << m.cone_index;
        rows.push_back(os.str());
    }
    return rows;
}

}  // namespace tnov
