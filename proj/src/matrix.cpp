#include "chowform/matrix.hpp"

#include <algorithm>
#include <bit>

namespace chowform {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw error("matrix product dimension mismatch");
    IntMatrix r(a.rows(), b.cols(), Int(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Poly det_poly_matrix(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw error("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0)
        throw error("determinant of an empty matrix");
    if (n > 20)
        throw error("matrix too large for subset expansion");
    // memo[mask] = det of the submatrix on rows 0..popcount(mask)-1 and the
    // column set encoded by mask.
    std::vector<Poly> memo(size_t(1) << n);
    memo[0] = Poly(1);
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int r = std::popcount(mask) - 1;
        Poly acc;
        int pos = 0;
        for (uint32_t j = 0; j < n; ++j) {
            if (!(mask & (uint32_t(1) << j)))
                continue;
            const Poly& entry = m.at(static_cast<size_t>(r), j);
            if (!entry.is_zero()) {
                const Poly& sub = memo[mask ^ (uint32_t(1) << j)];
                if (!sub.is_zero()) {
                    Poly t = entry * sub;
                    if ((r + pos) % 2)
                        acc -= t;
                    else
                        acc += t;
                }
            }
            ++pos;
        }
        memo[mask] = std::move(acc);
    }
    return memo[(size_t(1) << n) - 1];
}

Int det_bareiss(IntMatrix a) {
    if (a.rows() != a.cols())
        throw error("determinant of a non-square matrix");
    size_t n = a.rows();
    if (n == 0)
        throw error("determinant of an empty matrix");
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t r = k + 1;
            while (r < n && a.at(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

Rat det_rat(RatMatrix a) {
    if (a.rows() != a.cols())
        throw error("determinant of a non-square matrix");
    size_t n = a.rows();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a.at(piv, k) == 0)
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(k, k);
        Rat inv = 1 / a.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0)
                continue;
            Rat f = a.at(i, k) * inv;
            for (size_t j = k; j < n; ++j)
                a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

namespace {

struct SnfState {
    IntMatrix a, u, v;

    void swap_rows(size_t i, size_t j) {
        if (i == j)
            return;
        for (size_t c = 0; c < a.cols(); ++c)
            std::swap(a.at(i, c), a.at(j, c));
        for (size_t c = 0; c < u.cols(); ++c)
            std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j)
            return;
        for (size_t r = 0; r < a.rows(); ++r)
            std::swap(a.at(r, i), a.at(r, j));
        for (size_t r = 0; r < v.rows(); ++r)
            std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void row_sub(size_t i, size_t j, const Int& q) {
        if (q == 0)
            return;
        for (size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) -= q * a.at(j, c);
        for (size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) -= q * u.at(j, c);
    }
    void col_sub(size_t i, size_t j, const Int& q) {
        if (q == 0)
            return;
        for (size_t r = 0; r < a.rows(); ++r)
            a.at(r, i) -= q * a.at(r, j);
        for (size_t r = 0; r < v.rows(); ++r)
            v.at(r, i) -= q * v.at(r, j);
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) = -a.at(i, c);
        for (size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) = -u.at(i, c);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a_in) {
    size_t m = a_in.rows(), n = a_in.cols();
    SnfState s{a_in, IntMatrix::identity(m), IntMatrix::identity(n)};

    size_t t = 0;
    while (t < m && t < n) {
        // pick the nonzero entry of minimal absolute value in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (s.a.at(i, j) == 0)
                    continue;
                Int v = abs(s.a.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found)
            break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (s.a.at(i, t) == 0)
                    continue;
                Int q = s.a.at(i, t) / s.a.at(t, t); // trunc toward zero
                s.row_sub(i, t, q);
                if (s.a.at(i, t) != 0) {
                    s.swap_rows(t, i); // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (s.a.at(t, j) == 0)
                    continue;
                Int q = s.a.at(t, j) / s.a.at(t, t);
                s.col_sub(j, t, q);
                if (s.a.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // enforce divisibility of the trailing block by the pivot
            bool fixed = false;
            for (size_t i = t + 1; i < m && !fixed; ++i)
                for (size_t j = t + 1; j < n && !fixed; ++j)
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.row_sub(t, i, Int(-1)); // row t += row i
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (s.a.at(t, t) < 0)
            s.negate_row(t);
        ++t;
    }
    return {s.u, s.a, s.v};
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    size_t rank = 0;
    size_t lim = std::min(a.rows(), a.cols());
    for (size_t i = 0; i < lim; ++i)
        if (snf.d.at(i, i) != 0)
            ++rank;
    std::vector<std::vector<Int>> basis;
    for (size_t j = rank; j < a.cols(); ++j) {
        std::vector<Int> w(a.cols());
        for (size_t r = 0; r < a.cols(); ++r)
            w[r] = snf.v.at(r, j);
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace chowform
