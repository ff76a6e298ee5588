#include "tnov/matrix.hpp"

namespace tnov {

LMatrix lmatrix_zero(CoefficientRing ring, int k, size_t rows, size_t cols) {
    return LMatrix(rows, cols, LaurentPoly::zero(ring, k));
}

LMatrix lmatrix_identity(CoefficientRing ring, int k, size_t n) {
    LMatrix m = lmatrix_zero(ring, k, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(ring, k);
    return m;
}

LMatrix lmatrix_mul(const LMatrix& a, const LMatrix& b) {
    if (a.cols() != b.rows()) throw math_error("matrix shape mismatch in product");
    LaurentPoly z = a.exemplar();
    LMatrix r(a.rows(), b.cols(), z);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            LaurentPoly s = z;
            for (size_t l = 0; l < a.cols(); ++l) s = add(s, mul(a.at(i, l), b.at(l, j)));
            r.at(i, j) = s;
        }
    return r;
}

LMatrix lmatrix_add(const LMatrix& a, const LMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw math_error("matrix shape mismatch");
    LMatrix r = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = add(a.at(i, j), b.at(i, j));
    return r;
}

bool lmatrix_is_zero(const LMatrix& a) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

LaurentPoly determinant(const LMatrix& m) {
    if (m.rows() != m.cols()) throw math_error("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) throw math_error("determinant needs ring context; use 1 for empty selections");
    CoefficientRing ring = m.at(0, 0).ring();
    int k = m.at(0, 0).vars();
    LMatrix a = m;
    LaurentPoly prev = LaurentPoly::one(ring, k);
    int sign = 1;
    for (size_t p = 0; p + 1 < n; ++p) {
        size_t piv = p;
        while (piv < n && a.at(piv, p).is_zero()) ++piv;
        if (piv == n) return LaurentPoly::zero(ring, k);
        if (piv != p) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(p, j));
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i)
            for (size_t j = p + 1; j < n; ++j) {
                LaurentPoly num = sub(mul(a.at(p, p), a.at(i, j)), mul(a.at(i, p), a.at(p, j)));
                auto q = exact_div(num, prev);
                if (!q) throw math_error("Bareiss division failed (internal)");
                a.at(i, j) = *q;
            }
        prev = a.at(p, p);
    }
    LaurentPoly d = a.at(n - 1, n - 1);
    return sign == 1 ? d : neg(d);
}

size_t rank_over_fractions(const LMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    CoefficientRing ring = m.at(0, 0).ring();
    int k = m.at(0, 0).vars();
    LMatrix a = m;
    LaurentPoly prev = LaurentPoly::one(ring, k);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        for (size_t i = r + 1; i < rows; ++i)
            for (size_t j = c + 1; j < cols; ++j) {
                LaurentPoly num = sub(mul(a.at(r, c), a.at(i, j)), mul(a.at(i, c), a.at(r, j)));
                auto q = exact_div(num, prev);
                if (!q) throw math_error("fraction-free elimination division failed (internal)");
                a.at(i, j) = *q;
            }
        for (size_t i = r + 1; i < rows; ++i) a.at(i, c) = LaurentPoly::zero(ring, k);
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

}  // namespace tnov
