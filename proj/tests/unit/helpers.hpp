#pragma once

#include "chowform/choworbit.hpp"
#include "chowform/document.hpp"
#include "chowform/fixtures.hpp"
#include "chowform/matrix.hpp"
#include "chowform/poly.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testing {

using namespace chowform;

inline IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = Int(rows[r][c]);
    return m;
}

inline RatMatrix rat_matrix(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = Rat(rows[r][c]);
    return m;
}

inline std::vector<Int> int_vec(const std::vector<long>& v) {
    std::vector<Int> out;
    for (long x : v)
        out.push_back(Int(x));
    return out;
}

inline std::vector<Rat> rat_vec(const std::vector<long>& v) {
    std::vector<Rat> out;
    for (long x : v)
        out.push_back(Rat(x));
    return out;
}

inline Poly P(const std::string& text) {
    return Poly::from_text(text);
}

inline ProblemDocument fixture_document(const std::string& name) {
    return parse_document(fixture_json(name));
}

inline ProblemInstance fixture_instance(const std::string& name) {
    return instance_from_document(fixture_document(name));
}

// deterministic RNG for property tests
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long roll(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat rat(long lo = -9, long hi = 9) {
        long num = roll(lo, hi);
        long den = roll(1, 9);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat nonzero_rat(long lo = -9, long hi = 9) {
        for (;;) {
            Rat r = rat(lo, hi);
            if (r != 0)
                return r;
        }
    }
    Monomial monomial(const std::vector<VarId>& vars, int max_exp = 3) {
        Monomial m;
        for (const VarId& v : vars) {
            int e = static_cast<int>(roll(0, max_exp));
            if (e > 0)
                m = m * Monomial::var(v, e);
        }
        return m;
    }
    Poly poly(const std::vector<VarId>& vars, int max_terms = 4, int max_exp = 3) {
        Poly p;
        long terms = roll(0, max_terms);
        for (long i = 0; i < terms; ++i)
            p += Poly::term(rat(), monomial(vars, max_exp));
        return p;
    }
};

// Leibniz-formula determinant; the independent oracle for small matrices.
inline Poly det_leibniz(const PolyMatrix& m) {
    size_t n = m.rows();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i)
        perm[i] = i;
    Poly det;
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Poly prod(1);
        for (size_t i = 0; i < n; ++i)
            prod = prod * m.at(i, perm[i]);
        if (inversions % 2)
            det -= prod;
        else
            det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace testing
