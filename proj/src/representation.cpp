#include "tnov/representation.hpp"

#include <json.hpp>

namespace tnov {

using nlohmann::json;

Representation Representation::trivial(CoefficientRing ring, int n, size_t ngens) {
    Representation r;
    r.ring = ring;
    r.n = n;
    RMatrix id(static_cast<size_t>(n), static_cast<size_t>(n), Coeff(0));
    for (int i = 0; i < n; ++i) id.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;
    r.matrices.assign(ngens, id);
    return r;
}

RMatrix rmatrix_identity(const CoefficientRing& ring, int n) {
    RMatrix id(static_cast<size_t>(n), static_cast<size_t>(n), Coeff(0));
    for (int i = 0; i < n; ++i) id.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;
    (void)ring;
    return id;
}

RMatrix rmatrix_mul(const RMatrix& a, const RMatrix& b, const CoefficientRing& ring) {
    if (a.cols() != b.rows()) throw math_error("matrix shape mismatch");
    RMatrix r(a.rows(), b.cols(), Coeff(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            Coeff s(0);
            for (size_t l = 0; l < a.cols(); ++l) s += a.at(i, l) * b.at(l, j);
            r.at(i, j) = ring.normalize(s);
        }
    return r;
}

Coeff rmatrix_det(const RMatrix& m, const CoefficientRing& ring) {
    if (m.rows() != m.cols()) throw math_error("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Coeff(1);
    // cofactor-free: rational Gaussian elimination, normalized at the end
    std::vector<std::vector<Coeff>> a(n, std::vector<Coeff>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Coeff det(1);
    for (size_t p = 0; p < n; ++p) {
        size_t piv = p;
        while (piv < n && a[piv][p] == 0) ++piv;
        if (piv == n) return ring.normalize(Coeff(0));
        if (piv != p) {
            std::swap(a[piv], a[p]);
            det = -det;
        }
        det *= a[p][p];
        for (size_t i = p + 1; i < n; ++i) {
            Coeff f = a[i][p] / a[p][p];
            for (size_t j = p; j < n; ++j) a[i][j] -= f * a[p][j];
        }
    }
    return ring.normalize(det);
}

RMatrix rmatrix_inverse(const RMatrix& m, const CoefficientRing& ring) {
    size_t n = m.rows();
    if (n != m.cols()) throw math_error("inverse of non-square matrix");
    Coeff det = rmatrix_det(m, ring);
    if (!ring.is_unit(det)) throw math_error("matrix is not invertible over the ring");
    // Gauss-Jordan over the fraction field, then normalize into the ring
    std::vector<std::vector<Coeff>> a(n, std::vector<Coeff>(2 * n, Coeff(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    for (size_t p = 0; p < n; ++p) {
        size_t piv = p;
        while (piv < n && a[piv][p] == 0) ++piv;
        if (piv == n) throw math_error("matrix is not invertible");
        std::swap(a[piv], a[p]);
        Coeff f = a[p][p];
        for (size_t j = 0; j < 2 * n; ++j) a[p][j] /= f;
        for (size_t i = 0; i < n; ++i) {
            if (i == p || a[i][p] == 0) continue;
            Coeff g = a[i][p];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= g * a[p][j];
        }
    }
    RMatrix inv(n, n, Coeff(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = ring.normalize(a[i][n + j]);
    return inv;
}

std::optional<ViolationReport> validate(const Representation& rep, const Presentation& p) {
    if (rep.matrices.size() != p.num_generators())
        return ViolationReport{"generator", 0, "matrix count does not match generator count"};
    for (size_t g = 0; g < rep.matrices.size(); ++g) {
        const RMatrix& m = rep.matrices[g];
        if (m.rows() != static_cast<size_t>(rep.n) || m.cols() != static_cast<size_t>(rep.n))
            return ViolationReport{"generator", g, "matrix has wrong dimensions"};
        Coeff det = rmatrix_det(m, rep.ring);
        if (!rep.ring.is_unit(det))
            return ViolationReport{"generator", g,
                                   "matrix for '" + p.generators[g] + "' is not invertible (det " +
                                       rep.ring.to_string(det) + ")"};
    }
    std::vector<RMatrix> inv;
    inv.reserve(rep.matrices.size());
    for (const RMatrix& m : rep.matrices) inv.push_back(rmatrix_inverse(m, rep.ring));
    RMatrix id = rmatrix_identity(rep.ring, rep.n);
    for (size_t r = 0; r < p.relators.size(); ++r) {
        RMatrix acc = id;
        for (const Letter& l : p.relators[r].letters()) {
            const RMatrix& f = l.exp == 1 ? rep.matrices[static_cast<size_t>(l.gen)]
                                          : inv[static_cast<size_t>(l.gen)];
            acc = rmatrix_mul(acc, f, rep.ring);
        }
        if (!(acc == id))
            return ViolationReport{"relator", r,
                                   "relator " + std::to_string(r + 1) + " does not map to the identity"};
    }
    return std::nullopt;
}

Representation parse_representation_json(const std::string& text, const Presentation& p) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("representation JSON: ") + e.what());
    }
    Representation rep;
    if (!j.contains("ring")) throw input_error("representation JSON: missing 'ring'");
    const json& jr = j["ring"];
    if (jr.is_string()) {
        std::string s = jr.get<std::string>();
        if (s == "Z")
            rep.ring = CoefficientRing::integers();
        else if (s == "Q")
            rep.ring = CoefficientRing::rationals();
        else
            throw input_error("representation JSON: unknown ring '" + s + "'");
    } else if (jr.is_object() && jr.contains("Zp")) {
        rep.ring = CoefficientRing::prime_field(jr["Zp"].get<unsigned long>());
    } else {
        throw input_error("representation JSON: bad 'ring'");
    }
    if (!j.contains("n")) throw input_error("representation JSON: missing 'n'");
    rep.n = j["n"].get<int>();
    if (rep.n < 1) throw input_error("representation JSON: n must be >= 1");
    if (!j.contains("matrices") || !j["matrices"].is_object())
        throw input_error("representation JSON: missing 'matrices'");
    const json& jm = j["matrices"];
    rep.matrices.assign(p.num_generators(),
                        RMatrix(static_cast<size_t>(rep.n), static_cast<size_t>(rep.n), Coeff(0)));
    std::vector<bool> seen(p.num_generators(), false);
    for (auto it = jm.begin(); it != jm.end(); ++it) {
        int g = p.generator_index(it.key());
        if (g < 0) throw input_error("representation JSON: unknown generator '" + it.key() + "'");
        const json& rowsj = it.value();
        if (!rowsj.is_array() || rowsj.size() != static_cast<size_t>(rep.n))
            throw input_error("representation JSON: matrix for '" + it.key() + "' has wrong shape");
        RMatrix m(static_cast<size_t>(rep.n), static_cast<size_t>(rep.n), Coeff(0));
        for (size_t i = 0; i < rowsj.size(); ++i) {
            if (!rowsj[i].is_array() || rowsj[i].size() != static_cast<size_t>(rep.n))
                throw input_error("representation JSON: matrix for '" + it.key() + "' has wrong shape");
            for (size_t jj = 0; jj < rowsj[i].size(); ++jj) {
                const json& cell = rowsj[i][jj];
                Coeff c;
                if (cell.is_number_integer())
                    c = Coeff(cell.get<long>());
                else if (cell.is_string())
                    c = parse_coeff(cell.get<std::string>());
                else
                    throw input_error("representation JSON: bad matrix entry");
                m.at(i, jj) = rep.ring.normalize(c);
            }
        }
        rep.matrices[static_cast<size_t>(g)] = m;
        seen[static_cast<size_t>(g)] = true;
    }
    for (size_t g = 0; g < seen.size(); ++g)
        if (!seen[g])
            throw input_error("representation JSON: no matrix for generator '" + p.generators[g] + "'");
    return rep;
}

SubstitutionMap::SubstitutionMap(const Representation& rep, const AbelianMap& pi,
                                 const Presentation& p)
    : rep_(&rep), pi_(&pi) {
    if (rep.matrices.size() != p.num_generators())
        throw math_error("representation does not match presentation");
    if (pi.images.size() != p.num_generators())
        throw math_error("abelianization does not match presentation");
    inverses_.reserve(rep.matrices.size());
    for (const RMatrix& m : rep.matrices) inverses_.push_back(rmatrix_inverse(m, rep.ring));
}

LMatrix SubstitutionMap::word(const FreeWord& w) const {
    int nn = n();
    CoefficientRing rg = ring();
    RMatrix acc = rmatrix_identity(rg, nn);
    for (const Letter& l : w.letters()) {
        const RMatrix& f = l.exp == 1 ? rep_->matrices[static_cast<size_t>(l.gen)]
                                      : inverses_[static_cast<size_t>(l.gen)];
        acc = rmatrix_mul(acc, f, rg);
    }
    Monomial m = pi_->word_image(w);
    LMatrix out = lmatrix_zero(rg, pi_->k, static_cast<size_t>(nn), static_cast<size_t>(nn));
    for (size_t i = 0; i < out.rows(); ++i)
        for (size_t j = 0; j < out.cols(); ++j)
            if (acc.at(i, j) != 0)
                out.at(i, j) = LaurentPoly::monomial(rg, pi_->k, m, acc.at(i, j));
    return out;
}

LMatrix SubstitutionMap::element(const GroupRingElement& el) const {
    size_t nn = static_cast<size_t>(n());
    LMatrix out = lmatrix_zero(ring(), vars(), nn, nn);
    for (auto& [w, c] : el.terms()) {
        LMatrix mw = word(w);
        Coeff coeff(c);
        for (size_t i = 0; i < nn; ++i)
            for (size_t j = 0; j < nn; ++j)
                out.at(i, j) = add(out.at(i, j), scale(mw.at(i, j), coeff));
    }
    return out;
}

LMatrix SubstitutionMap::matrix(const std::vector<std::vector<GroupRingElement>>& m) const {
    size_t nn = static_cast<size_t>(n());
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    LMatrix out = lmatrix_zero(ring(), vars(), nn * rows, nn * cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            LMatrix blk = element(m[i][j]);
            for (size_t a = 0; a < nn; ++a)
                for (size_t b = 0; b < nn; ++b) out.at(nn * i + a, nn * j + b) = blk.at(a, b);
        }
    return out;
}

LMatrix SubstitutionMap::column(const std::vector<GroupRingElement>& col) const {
    std::vector<std::vector<GroupRingElement>> m;
    m.reserve(col.size());
    for (const GroupRingElement& e : col) m.push_back({e});
    return matrix(m);
}

}  // namespace tnov
