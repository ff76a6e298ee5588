#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tnov/cones.hpp"

#include <random>

using namespace tnov;
using testutil::lp;

namespace {

CohomologyClass xi_of(std::vector<mpq_class> v) {
    CohomologyClass c;
    c.xi = std::move(v);
    return c;
}

LaurentPoly random_small(std::mt19937_64& rng, int k, CoefficientRing ring) {
    LaurentPoly p(ring, k);
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)] = static_cast<int64_t>(rng() % 7) - 3;
        long c = static_cast<long>(rng() % 5) - 2;
        if (c == 0) c = 1;
        p = add(p, LaurentPoly::monomial(ring, k, m, Coeff(c)));
    }
    return p;
}

}  // namespace

TEST_CASE("strict feasibility by exact Fourier-Motzkin") {
    // x > 0, y > 0, x > y is feasible
    std::vector<IneqVector> sys = {{1, 0}, {0, 1}, {1, -1}};
    auto w = strict_feasible(sys, 2);
    REQUIRE(w.has_value());
    CHECK((*w)[0] > 0);
    CHECK((*w)[1] > 0);
    CHECK((*w)[0] > (*w)[1]);
    // x > 0, -x > 0 is not
    CHECK_FALSE(strict_feasible({{1}, {-1}}, 1).has_value());
    // a wall: x > 0, -x > -0 ... 0-vector is a contradiction for strict
    CHECK_FALSE(strict_feasible({{0, 0}}, 2).has_value());
    // redundancy does not break anything
    CHECK(strict_feasible({{1, 0}, {2, 0}, {1, 1}}, 2).has_value());
}

TEST_CASE("acyclicity cones of 1 + t1 + t2") {
    ConeSystem sys = acyclicity_cones(lp("1 + t1 + t2", 2));
    CHECK(sys.tag == ConeTag::generic);
    REQUIRE(sys.cones.size() == 3);
    // vertices sorted: (0,0), (0,1), (1,0)
    CHECK(sys.cones[0].vertex == Monomial{0, 0});
    CHECK(sys.cones[1].vertex == Monomial{0, 1});
    CHECK(sys.cones[2].vertex == Monomial{1, 0});
    // the inequality systems themselves: {xi1<0, xi2<0}, {xi2>0, xi2>xi1},
    // {xi1>0, xi1>xi2}
    auto has = [](const Cone& c, const IneqVector& d) {
        return std::find(c.gt.begin(), c.gt.end(), d) != c.gt.end();
    };
    CHECK(sys.cones[0].gt.size() == 2);
    CHECK(has(sys.cones[0], IneqVector{-1, 0}));
    CHECK(has(sys.cones[0], IneqVector{0, -1}));
    CHECK(has(sys.cones[1], IneqVector{0, 1}));
    CHECK(has(sys.cones[1], IneqVector{-1, 1}));
    CHECK(has(sys.cones[2], IneqVector{1, 0}));
    CHECK(has(sys.cones[2], IneqVector{1, -1}));
    CHECK(membership(sys, xi_of({2, 1})).inside);
    CHECK(membership(sys, xi_of({2, 1})).cone_index == 2);
    CHECK_FALSE(membership(sys, xi_of({1, 1})).inside);  // wall
    CHECK(membership(sys, xi_of({-1, -1})).inside);      // interior of the (0,0) cone
    CHECK(membership(sys, xi_of({-1, -1})).cone_index == 0);
}

TEST_CASE("degenerate cases match the case analysis") {
    ConeSystem zero = acyclicity_cones(LaurentPoly::zero(CoefficientRing::integers(), 2));
    CHECK(zero.tag == ConeTag::empty);
    CHECK(zero.is_empty());

    ConeSystem twot = acyclicity_cones(lp("2*t"));
    CHECK(twot.tag == ConeTag::empty);

    ConeSystem twot_q = acyclicity_cones(lp("2*t", 1, CoefficientRing::rationals()));
    CHECK(twot_q.tag == ConeTag::all_nonzero);
    CHECK(membership(twot_q, xi_of({testutil::rat(5, 3)})).inside);

    ConeSystem unit = acyclicity_cones(lp("-t1*t2^2", 2));
    CHECK(unit.tag == ConeTag::all_nonzero);

    ConeSystem field = acyclicity_cones(lp("1 + t1 + t2", 2, CoefficientRing::rationals()));
    CHECK(field.tag == ConeTag::complement_of_hyperplanes);
    CHECK(field.walls.size() == 3);
    CHECK(field.cones.size() == 3);
}

TEST_CASE("non-vertex support points are pruned") {
    // 1 + t + t^2: the middle point (1) is not a vertex of [0,2]
    ConeSystem sys = acyclicity_cones(lp("1 + t + t^2"));
    REQUIRE(sys.cones.size() == 2);
    CHECK(sys.cones[0].vertex == Monomial{0});
    CHECK(sys.cones[1].vertex == Monomial{2});
    // non-unit coefficient at a vertex kills its cone
    ConeSystem sys2 = acyclicity_cones(lp("2 + t"));
    REQUIRE(sys2.cones.size() == 1);
    CHECK(sys2.cones[0].vertex == Monomial{1});
}

TEST_CASE("membership equals monicity on random polynomials and classes") {
    std::mt19937_64 rng(987654);
    int checked = 0;
    for (int round = 0; round < 25; ++round) {
        int k = 2 + static_cast<int>(rng() % 2);
        CoefficientRing ring = (round % 4 == 0) ? CoefficientRing::rationals()
                                                : CoefficientRing::integers();
        LaurentPoly a = random_small(rng, k, ring);
        ConeSystem sys = acyclicity_cones(a);
        for (int trial = 0; trial < 200; ++trial) {
            CohomologyClass xi;
            bool zero = true;
            for (int i = 0; i < k; ++i) {
                mpq_class v = testutil::rat(static_cast<long>(rng() % 21) - 10, static_cast<long>(1 + rng() % 4));
                if (v != 0) zero = false;
                xi.xi.push_back(v);
            }
            if (zero) continue;
            MembershipResult m = membership(sys, xi);
            CHECK(m.inside == is_xi_monic(a, xi));
            ++checked;
            // disjointness: no second cone may contain xi
            if (m.inside) {
                int hits = 0;
                for (size_t ci = 0; ci < sys.cones.size(); ++ci) {
                    bool ok = true;
                    for (const IneqVector& d : sys.cones[ci].gt) {
                        mpq_class s(0);
                        for (size_t l = 0; l < d.size(); ++l) s += xi.xi[l] * mpq_class(d[l]);
                        if (!(s > 0)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) ++hits;
                }
                CHECK(hits == 1);
            }
        }
    }
    CHECK(checked > 2000);
}

TEST_CASE("intersection of cone systems") {
    ConeSystem s1 = acyclicity_cones(lp("1 + t1 + t2", 2));
    ConeSystem all = acyclicity_cones(lp("t1", 2));
    ConeSystem none = acyclicity_cones(LaurentPoly::zero(CoefficientRing::integers(), 2));

    ConeSystem inter_all = intersect({all, s1});
    CHECK(inter_all.cones.size() == s1.cones.size());
    ConeSystem inter_none = intersect({s1, none});
    CHECK(inter_none.is_empty());
    CHECK(inter_none.tag == ConeTag::empty);

    // 1 + t1 cones: {xi1 > 0} and {xi1 < 0}
    ConeSystem s2 = acyclicity_cones(lp("1 + t1", 2));
    CHECK(s2.cones.size() == 2);
    ConeSystem inter = intersect({s1, s2});
    // sampled membership oracle: xi in the intersection iff in both systems
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 800; ++trial) {
        CohomologyClass xi;
        bool zero = true;
        for (int i = 0; i < 2; ++i) {
            mpq_class v = testutil::rat(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 3));
            if (v != 0) zero = false;
            xi.xi.push_back(v);
        }
        if (zero) continue;
        bool both = membership(s1, xi).inside && membership(s2, xi).inside;
        CHECK(membership(inter, xi).inside == both);
    }
}

TEST_CASE("minimize keeps the cone pointwise equal") {
    // build something with redundant inequalities directly
    Cone c;
    c.vertex = {0, 0};
    c.gt = {{1, 0}, {2, 0}, {1, 1}, {2, 1}};
    auto w = strict_feasible(c.gt, 2);
    REQUIRE(w.has_value());
    c.witness = *w;
    ConeSystem manual;
    manual.dim = 2;
    manual.tag = ConeTag::generic;
    manual.cones = {c};
    ConeSystem slim = minimize(manual);
    CHECK(slim.cones[0].gt.size() < c.gt.size());
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        CohomologyClass xi;
        bool zero = true;
        for (int i = 0; i < 2; ++i) {
            mpq_class v = testutil::rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3));
            if (v != 0) zero = false;
            xi.xi.push_back(v);
        }
        if (zero) continue;
        CHECK(membership(manual, xi).inside == membership(slim, xi).inside);
    }
}

TEST_CASE("cone JSON round trip and sweep table") {
    ConeSystem sys = acyclicity_cones(lp("1 + t1 + t2", 2));
    std::string text = cones_to_json(sys);
    ConeSystem back = cones_from_json(text);
    CHECK(back.dim == sys.dim);
    CHECK(back.tag == sys.tag);
    REQUIRE(back.cones.size() == sys.cones.size());
    for (size_t i = 0; i < sys.cones.size(); ++i) {
        CHECK(back.cones[i].vertex == sys.cones[i].vertex);
        CHECK(back.cones[i].gt == sys.cones[i].gt);
    }
    auto rows = sweep_table(sys, 16);
    CHECK(rows.size() == 16);
    // determinism
    CHECK(sweep_table(sys, 16) == rows);
    CHECK(cones_to_json(sys) == text);
}
