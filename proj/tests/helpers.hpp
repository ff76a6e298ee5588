#pragma once

// Shared corpus and test oracles.  The oracles here are independent of the
// code paths they check: cofactor determinants, Smith-normal-form homology,
// and direct minor enumeration.

#include "tnov/abelian.hpp"
#include "tnov/fitting.hpp"
#include "tnov/representation.hpp"

#include <random>
#include <string>

namespace testutil {

using namespace tnov;

// ------------------------------------------------------------------- corpus

inline Presentation trefoil() {
    return parse_presentation("gens: x y\nrel: x y x Y X Y\n");
}

inline Presentation figure_eight() {
    return parse_presentation("gens: x y\nrel: x Y X y x Y x y X Y\n");
}

inline Presentation knot_5_2() {
    return parse_presentation("gens: x y\nrel: x y x Y X y x Y X Y x y X Y\n");
}

inline Presentation unknot() { return parse_presentation("gens: x\n"); }

inline Presentation hopf_link() {
    return parse_presentation("gens: x y\nrel: x y X Y\n");
}

inline Presentation free_group(int n) {
    std::string text = "gens:";
    for (int i = 0; i < n; ++i) text += " " + std::string(1, static_cast<char>('x' + i));
    return parse_presentation(text + "\n");
}

inline Representation trefoil_sl2() {
    Presentation p = trefoil();
    return parse_representation_json(
        R"({"ring":"Z","n":2,"matrices":{"x":[[1,1],[0,1]],"y":[[1,0],[-1,1]]}})", p);
}

inline LaurentPoly lp(const std::string& text, int k = 1,
                      CoefficientRing ring = CoefficientRing::integers()) {
    return parse_laurent(text, ring, k);
}

// mpq_class(num, den) does not canonicalize; this does
inline mpq_class rat(long num, long den = 1) {
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

// ------------------------------------------------------------------- oracles

// Laplace cofactor expansion, an independent determinant oracle
inline LaurentPoly det_cofactor(const LMatrix& m) {
    size_t n = m.rows();
    CoefficientRing ring = m.at(0, 0).ring();
    int k = m.at(0, 0).vars();
    if (n == 1) return m.at(0, 0);
    LaurentPoly acc = LaurentPoly::zero(ring, k);
    std::vector<size_t> cols(n - 1);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        size_t t = 0;
        for (size_t c = 0; c < n; ++c)
            if (c != j) cols[t++] = c;
        std::vector<size_t> rows(n - 1);
        for (size_t r = 1; r < n; ++r) rows[r - 1] = r;
        LaurentPoly minor = det_cofactor(m.select(rows, cols));
        LaurentPoly term = mul(m.at(0, j), minor);
        acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

// homology of an integer complex straight from Smith normal forms
struct SnfHomology {
    std::vector<long> betti;
    std::vector<long> torsion_number;
    std::vector<std::vector<mpz_class>> torsion_orders;
};

inline ZMatrix to_zmatrix(const LMatrix& m) {
    ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) z[i][j] = m.at(i, j).constant_value().get_num();
    return z;
}

inline long z_rank(const ZMatrix& m) {
    if (m.empty() || m[0].empty()) return 0;
    auto d = smith_normal_form(m).diagonal();
    long r = 0;
    for (const auto& v : d)
        if (v != 0) ++r;
    return r;
}

inline SnfHomology snf_homology(const ChainComplex& c) {
    SnfHomology h;
    for (int d = 0; d <= c.top_degree(); ++d) {
        ZMatrix bd_in = to_zmatrix(c.boundary_into(d));        // d_{d+1}
        ZMatrix bd_out = to_zmatrix(c.boundary_into(d - 1));   // d_d
        long rank_in = z_rank(bd_in);
        long rank_out = z_rank(bd_out);
        h.betti.push_back(c.rank_at(d) - rank_in - rank_out);
        std::vector<mpz_class> torsion;
        if (!bd_in.empty() && !bd_in[0].empty()) {
            auto diag = smith_normal_form(bd_in).diagonal();
            for (const auto& v : diag) {
                mpz_class a = abs(v);
                if (a > 1) torsion.push_back(a);
            }
        }
        std::sort(torsion.begin(), torsion.end());
        h.torsion_number.push_back(static_cast<long>(torsion.size()));
        h.torsion_orders.push_back(torsion);
    }
    return h;
}

// ------------------------------------------------- random integer complexes

// direct sums of elementary pieces 0 <- Z <-(m) Z <- 0 and isolated free
// generators, randomized by entry-bounded elementary basis changes;
// dd = 0 by construction, ranks <= 5, |entries| <= 4
inline ChainComplex random_z_complex(std::mt19937_64& rng, int max_degree = 3, long max_rank = 5) {
    CoefficientRing ring = CoefficientRing::integers();
    int top = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_degree));
    std::vector<long> ranks(static_cast<size_t>(top) + 1, 0);
    struct Piece {
        int degree;
        long row, col;
        int entry;
    };
    std::vector<Piece> pieces;
    for (int d = 0; d < top; ++d) {
        int npieces = static_cast<int>(rng() % 3);
        for (int i = 0; i < npieces; ++i) {
            if (ranks[static_cast<size_t>(d)] >= max_rank ||
                ranks[static_cast<size_t>(d) + 1] >= max_rank)
                break;
            Piece pc;
            pc.degree = d;
            pc.col = ranks[static_cast<size_t>(d)]++;
            pc.row = ranks[static_cast<size_t>(d) + 1]++;
            pc.entry = static_cast<int>(rng() % 9) - 4;  // in [-4, 4], 0 = free pair
            pieces.push_back(pc);
        }
    }
    for (int d = 0; d <= top; ++d)
        if (ranks[static_cast<size_t>(d)] < max_rank && rng() % 2)
            ++ranks[static_cast<size_t>(d)];  // isolated free generator

    ChainComplex c;
    c.ring = ring;
    c.vars = 0;
    c.ranks = ranks;
    for (int d = 0; d < top; ++d)
        c.boundaries.push_back(lmatrix_zero(ring, 0, static_cast<size_t>(ranks[static_cast<size_t>(d) + 1]),
                                            static_cast<size_t>(ranks[static_cast<size_t>(d)])));
    for (const Piece& pc : pieces)
        c.boundaries[static_cast<size_t>(pc.degree)].at(static_cast<size_t>(pc.row),
                                                        static_cast<size_t>(pc.col)) =
            LaurentPoly::constant(ring, 0, Coeff(pc.entry));

    // randomize by elementary basis changes, rejecting any that push an entry
    // beyond |4|
    std::uniform_int_distribution<int> pm(0, 1);
    for (int step = 0; step < 16; ++step) {
        int d = static_cast<int>(rng() % static_cast<uint64_t>(top + 1));
        long n = c.ranks[static_cast<size_t>(d)];
        if (n < 2) continue;
        size_t i = rng() % static_cast<uint64_t>(n);
        size_t j = rng() % static_cast<uint64_t>(n);
        if (i == j) continue;
        int sgn = pm(rng) ? 1 : -1;
        // basis change e_i <- e_i + sgn e_j in degree d acts on columns of
        // d_{d+1} and rows of d_d
        ChainComplex t = c;
        if (d < top) {
            LMatrix& b = t.boundaries[static_cast<size_t>(d)];
            for (size_t r = 0; r < b.rows(); ++r)
                b.at(r, j) = sub(b.at(r, j), scale(b.at(r, i), Coeff(sgn)));
        }
        if (d > 0) {
            LMatrix& b = t.boundaries[static_cast<size_t>(d) - 1];
            for (size_t col = 0; col < b.cols(); ++col)
                b.at(i, col) = add(b.at(i, col), scale(b.at(j, col), Coeff(sgn)));
        }
        bool small = true;
        for (const LMatrix& b : t.boundaries)
            for (size_t r = 0; r < b.rows() && small; ++r)
                for (size_t col = 0; col < b.cols() && small; ++col)
                    if (!b.at(r, col).is_zero() &&
                        abs(b.at(r, col).constant_value().get_num()) > 4)
                        small = false;
        if (small) c = t;
    }
    c.validate();
    return c;
}

}  // namespace testutil
