#pragma once

#include "chowform/error.hpp"
#include "chowform/poly.hpp"
#include "chowform/rational.hpp"

#include <string>
#include <vector>

namespace chowform {

/// Dense rectangular matrix with optional row/column labels.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t r, size_t c) {
        check(r, c);
        return data_[r * cols_ + c];
    }
    const T& at(size_t r, size_t c) const {
        check(r, c);
        return data_[r * cols_ + c];
    }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n, T(0));
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = T(1);
        return m;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
    void check(size_t r, size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw error("matrix index out of range");
    }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<Poly>;

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by Laplace expansion over column subsets with memoized
/// minors; deterministic canonical result. Requires a square matrix, size >= 1.
Poly det_poly_matrix(const PolyMatrix& m);

/// Fraction-free Gaussian elimination (integer matrices). Independent of the
/// subset-expansion path; also used for rank and unimodularity checks.
Int det_bareiss(IntMatrix a);

Rat det_rat(RatMatrix a);

struct SmithDecomposition {
    IntMatrix u; // unimodular, rows x rows
    IntMatrix d; // diagonal, nonnegative, divisibility chain d1 | d2 | ...
    IntMatrix v; // unimodular, cols x cols
};

/// U * A * V = D with |det U| = |det V| = 1.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Basis of the integer kernel {w : A w = 0}; cols - rank(A) vectors.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

} // namespace chowform
