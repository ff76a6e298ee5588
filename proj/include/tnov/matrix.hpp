#pragma once

/* Dense matrices over the Laurent ring (k = 0 gives plain ring matrices).
   Determinants and ranks use fraction-free elimination; all divisions are
   exact in the domain. */

#include "tnov/laurent.hpp"

#include <functional>
#include <vector>

namespace tnov {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), zero_(fill), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    // a zero element carrying the ring context, valid even for empty shapes
    const T& exemplar() const { return zero_; }

    Matrix select(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
        Matrix m(rs.size(), cs.size(), zero_);
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(rs[i], cs[j]);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    size_t rows_, cols_;
    T zero_;
    std::vector<T> data_;
};

using LMatrix = Matrix<LaurentPoly>;

LMatrix lmatrix_zero(CoefficientRing ring, int k, size_t rows, size_t cols);
LMatrix lmatrix_identity(CoefficientRing ring, int k, size_t n);
LMatrix lmatrix_mul(const LMatrix& a, const LMatrix& b);
LMatrix lmatrix_add(const LMatrix& a, const LMatrix& b);
bool lmatrix_is_zero(const LMatrix& a);

// exact determinant, fraction-free (Bareiss)
LaurentPoly determinant(const LMatrix& m);

// rank over the field of fractions
size_t rank_over_fractions(const LMatrix& m);

}  // namespace tnov
