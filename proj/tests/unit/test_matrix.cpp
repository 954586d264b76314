#include "helpers.hpp"

#include <doctest.h>

using namespace chowform;
using testing::int_matrix;
using testing::P;
using testing::Rng;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("1x1 determinant is the entry") {
    PolyMatrix m(1, 1);
    m.at(0, 0) = P("+ 1 * z1 u1 u2 + 1 * z2 u2 u3 + 1 * z3 u3 u1");
    CHECK(det_poly_matrix(m) == m.at(0, 0));
}

TEST_CASE("determinant rejects non-square input") {
    PolyMatrix m(2, 3);
    CHECK_THROWS_AS(det_poly_matrix(m), error);
}

TEST_CASE("subset expansion matches the Leibniz formula on monomial entries") {
    Rng rng(42);
    std::vector<VarId> vars{VarId::z(1), VarId::z(2), VarId::u(1), VarId::u(2)};
    for (size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 20; ++it) {
            PolyMatrix m(n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    m.at(r, c) = Poly::term(rng.rat(), rng.monomial(vars, 2));
            CHECK(det_poly_matrix(m) == testing::det_leibniz(m));
        }
}

TEST_CASE("subset expansion matches fraction-free elimination on integer matrices") {
    Rng rng(43);
    for (int it = 0; it < 25; ++it) {
        size_t n = static_cast<size_t>(rng.roll(1, 4));
        IntMatrix a(n, n);
        PolyMatrix pm(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                long v = rng.roll(-9, 9);
                a.at(r, c) = Int(v);
                pm.at(r, c) = Poly(Rat(v));
            }
        Poly det = det_poly_matrix(pm);
        Int b = det_bareiss(a);
        if (b == 0)
            CHECK(det.is_zero());
        else
            CHECK(det == Poly(Rat(b)));
    }
}

TEST_CASE("smith normal form of the identity") {
    SmithDecomposition snf = smith_normal_form(IntMatrix::identity(2));
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 1);
}

TEST_CASE("diag(2,4) is already in normal form") {
    SmithDecomposition snf = smith_normal_form(int_matrix({{2, 0}, {0, 4}}));
    CHECK(snf.d.at(0, 0) == 2);
    CHECK(snf.d.at(1, 1) == 4);
}

TEST_CASE("dp3 presentation has invariant factors (1,1)") {
    SmithDecomposition snf =
        smith_normal_form(int_matrix({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}}));
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 1);
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(44);
    for (int it = 0; it < 40; ++it) {
        size_t rows = static_cast<size_t>(rng.roll(1, 4));
        size_t cols = static_cast<size_t>(rng.roll(1, 5));
        IntMatrix a(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                a.at(r, c) = Int(rng.roll(-12, 12));
        SmithDecomposition snf = smith_normal_form(a);

        CHECK(mat_mul(mat_mul(snf.u, a), snf.v) == snf.d);
        CHECK(abs(det_bareiss(snf.u)) == 1);
        CHECK(abs(det_bareiss(snf.v)) == 1);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (i != j)
                    CHECK(snf.d.at(i, j) == 0);
        size_t lim = std::min(rows, cols);
        for (size_t i = 0; i < lim; ++i) {
            CHECK(snf.d.at(i, i) >= 0);
            if (i + 1 < lim && snf.d.at(i + 1, i + 1) != 0) {
                CHECK(snf.d.at(i, i) != 0);
                CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
            }
        }
    }
}

TEST_CASE("integer kernel of the dp3 presentation") {
    IntMatrix b = int_matrix({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}});
    auto basis = integer_kernel(b);
    REQUIRE(basis.size() == 4);
    for (const auto& w : basis)
        for (size_t r = 0; r < 2; ++r) {
            Int s = 0;
            for (size_t j = 0; j < 6; ++j)
                s += b.at(r, j) * w[j];
            CHECK(s == 0);
        }
}

TEST_SUITE_END();
