#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace chowform;
using testing::int_matrix;
using testing::int_vec;
using testing::Rng;

TEST_SUITE_BEGIN("lattice");

namespace {

IntMatrix dp3_rows() {
    return int_matrix({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}});
}

IntMatrix triangle_rows() {
    return int_matrix({{1, -1, 0}, {0, 1, -1}});
}

// independent cone-membership oracle: solves c = alpha b_i + beta b_j over Q
bool in_cone_oracle(const Lattice& L, int i, int j, const std::array<Int, 2>& c) {
    Rat bi0(L.b().at(0, static_cast<size_t>(i - 1))), bi1(L.b().at(1, static_cast<size_t>(i - 1)));
    Rat bj0(L.b().at(0, static_cast<size_t>(j - 1))), bj1(L.b().at(1, static_cast<size_t>(j - 1)));
    Rat det = bi0 * bj1 - bi1 * bj0;
    if (det == 0)
        return false;
    Rat alpha = (Rat(c[0]) * bj1 - Rat(c[1]) * bj0) / det;
    Rat beta = (bi0 * Rat(c[1]) - bi1 * Rat(c[0])) / det;
    return alpha >= 0 && beta >= 0;
}

} // namespace

TEST_CASE("dp3 and triangle rows validate") {
    CHECK(Lattice::validate_rows(dp3_rows()).ok());
    CHECK(Lattice::validate_rows(triangle_rows()).ok());
}

TEST_CASE("violations are reported distinctly") {
    ValidationReport rank = Lattice::validate_rows(
        int_matrix({{1, 1, 0, -1, -1, 0}, {1, 1, 0, -1, -1, 0}}));
    REQUIRE(!rank.ok());
    bool has_rank = false;
    for (const auto& v : rank.violations)
        has_rank |= v.code == "rank";
    CHECK(has_rank);

    ValidationReport sum = Lattice::validate_rows(int_matrix({{1, 1, 0}, {0, 1, -1}}));
    REQUIRE(!sum.ok());
    CHECK(sum.violations[0].code == "row-sum");

    ValidationReport zero = Lattice::validate_rows(int_matrix({{1, 0, -1, 0}, {0, 0, 1, -1}}));
    bool has_zero_col = false;
    for (const auto& v : zero.violations)
        has_zero_col |= v.code == "zero-column";
    CHECK(has_zero_col);

    CHECK_THROWS_AS(Lattice::from_rows(int_matrix({{1, 1, 0}, {0, 1, -1}})), error);

    // rank-1 column arrangements never reach the fan
    ValidationReport collinear =
        Lattice::validate_rows(int_matrix({{1, 1, -1, -1}, {0, 0, 0, 0}}));
    bool rank1 = false;
    for (const auto& v : collinear.violations)
        rank1 |= v.code == "rank";
    CHECK(rank1);
}

TEST_CASE("dp3 secondary fan matches the six-ray picture") {
    Lattice L = Lattice::from_rows(dp3_rows());
    const SecondaryFan& fan = L.fan();
    REQUIRE(fan.rays.size() == 6);
    std::vector<std::array<Int, 2>> expect = {{Int(1), Int(0)},  {Int(1), Int(1)},
                                              {Int(0), Int(1)},  {Int(-1), Int(0)},
                                              {Int(-1), Int(-1)}, {Int(0), Int(-1)}};
    for (size_t i = 0; i < 6; ++i) {
        CHECK(fan.rays[i].direction == expect[i]);
        CHECK(fan.rays[i].columns == std::vector<int>{static_cast<int>(i + 1)});
    }
    CHECK(fan.chambers.size() == 6);
}

TEST_CASE("triangle secondary fan") {
    Lattice L = Lattice::from_rows(triangle_rows());
    const SecondaryFan& fan = L.fan();
    REQUIRE(fan.rays.size() == 3);
    CHECK(fan.rays[0].direction == std::array<Int, 2>{Int(1), Int(0)});
    CHECK(fan.rays[1].direction == std::array<Int, 2>{Int(-1), Int(1)});
    CHECK(fan.rays[2].direction == std::array<Int, 2>{Int(0), Int(-1)});
    CHECK(fan.chambers.size() == 3);
}

TEST_CASE("collinear columns share a ray") {
    // columns (1,0) and (2,0) lie on one ray; a0 consistency still holds
    Lattice L = Lattice::from_rows(int_matrix({{1, 2, -3, 0}, {0, 0, -1, 1}}));
    REQUIRE(L.fan().rays.size() == 3);
    CHECK(L.fan().rays[0].direction == std::array<Int, 2>{Int(1), Int(0)});
    CHECK(L.fan().rays[0].columns == std::vector<int>{1, 2});
    CHECK(L.fan().chambers.size() == 3);
    CHECK(L.fan().chambers[0].a0_raw == int_vec({1, 2, 0, 3}));
    CHECK(L.hbar_a0() == 6);
}

TEST_CASE("dp3 chamber lists match the reference sector lists") {
    Lattice L = Lattice::from_rows(dp3_rows());
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(L.chamber_pairs({Int(2), Int(1)}) == Pairs{{1, 2}, {1, 3}, {2, 6}});
    CHECK(L.chamber_pairs({Int(-1), Int(1)}) == Pairs{{2, 4}, {3, 4}, {3, 5}});
}

TEST_CASE("triangle chamber list against the cone oracle") {
    Lattice L = Lattice::from_rows(triangle_rows());
    auto pairs = L.chamber_pairs({Int(1), Int(1)});
    CHECK(pairs == std::vector<std::pair<int, int>>{{1, 2}});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            bool in = std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
            CHECK(in == in_cone_oracle(L, i, j, {Int(1), Int(1)}));
        }
}

TEST_CASE("chamber point on a ray is rejected") {
    Lattice L = Lattice::from_rows(dp3_rows());
    CHECK_THROWS_AS(L.chamber_pairs({Int(1), Int(0)}), error);
    CHECK_THROWS_AS(L.chamber_pairs({Int(3), Int(3)}), error);
    CHECK_THROWS_AS(L.chamber_pairs({Int(0), Int(0)}), error);
}

TEST_CASE("dp3 chamber a0 vectors reproduce the six labels") {
    Lattice L = Lattice::from_rows(dp3_rows());
    std::vector<std::vector<Int>> expect = {
        int_vec({2, 2, 1, 0, 0, 1}), int_vec({1, 2, 2, 1, 0, 0}), int_vec({0, 1, 2, 2, 1, 0}),
        int_vec({0, 0, 1, 2, 2, 1}), int_vec({1, 0, 0, 1, 2, 2}), int_vec({2, 1, 0, 0, 1, 2})};
    REQUIRE(L.fan().chambers.size() == 6);
    for (size_t i = 0; i < 6; ++i)
        CHECK(L.fan().chambers[i].a0_raw == expect[i]);
    CHECK(L.weight_class_eq(L.a0(), Weight{int_vec({1, 1, 1, 1, 1, 1})}));
}

TEST_CASE("triangle a0 class and hbar") {
    Lattice L = Lattice::from_rows(triangle_rows());
    CHECK(L.weight_class_eq(L.a0(), Weight{int_vec({1, 1, 0})}));
    CHECK(L.hbar_a0() == 2);
    for (const Chamber& ch : L.fan().chambers)
        CHECK(L.weight_class_eq(Weight{ch.a0_raw}, L.a0()));
}

TEST_CASE("weight class equality") {
    Lattice L = Lattice::from_rows(dp3_rows());
    CHECK(L.weight_class_eq(Weight{int_vec({2, 2, 1, 0, 0, 1})},
                            Weight{int_vec({1, 1, 1, 1, 1, 1})}));
    Weight w{int_vec({3, -1, 4, 1, -5, 9})};
    CHECK(L.weight_class_eq(w, w));
    CHECK(!L.weight_class_eq(Weight{int_vec({1, 0, 0, 0, 0, 0})},
                             Weight{int_vec({0, 0, 0, 0, 0, 0})}));
}

TEST_CASE("hbar basics") {
    Lattice L = Lattice::from_rows(dp3_rows());
    CHECK(L.hbar_a0() == 6);
    for (int i = 1; i <= 6; ++i)
        CHECK(hbar(L.unit_weight(i)) == 1);
}

TEST_CASE("hbar is constant on congruence classes") {
    Lattice L = Lattice::from_rows(dp3_rows());
    Rng rng(17);
    for (int it = 0; it < 20; ++it) {
        std::vector<Int> raw;
        for (int i = 0; i < 6; ++i)
            raw.push_back(Int(rng.roll(-5, 5)));
        Weight w{raw};
        long x1 = rng.roll(-3, 3), x2 = rng.roll(-3, 3);
        std::vector<Int> shifted = raw;
        for (size_t j = 0; j < 6; ++j)
            shifted[j] += Int(x1) * L.b().at(0, j) + Int(x2) * L.b().at(1, j);
        CHECK(hbar(w) == hbar(Weight{shifted}));
        CHECK(L.weight_class_eq(w, Weight{shifted}));
    }
}

TEST_CASE("quotient structures") {
    CHECK(Lattice::from_rows(dp3_rows()).quotient_structure().free_rank == 4);
    CHECK(Lattice::from_rows(dp3_rows()).quotient_structure().torsion_order == 1);

    QuotientStructure tor =
        Lattice::from_rows(int_matrix({{2, -2, 0}, {0, 2, -2}})).quotient_structure();
    CHECK(tor.torsion_order == 4);
    CHECK(tor.invariant_factors == std::vector<Int>{Int(2), Int(2)});

    QuotientStructure tri = Lattice::from_rows(triangle_rows()).quotient_structure();
    CHECK(tri.free_rank == 1);
    CHECK(tri.torsion_order == 1);
}

TEST_CASE("torsion is visible through the saturation") {
    // (1,-1,0) lies in the saturation of the index-4 lattice but not in it;
    // its double does
    Lattice tor = Lattice::from_rows(int_matrix({{2, -2, 0}, {0, 2, -2}}));
    Weight zero{int_vec({0, 0, 0})};
    CHECK(!tor.weight_class_eq(Weight{int_vec({1, -1, 0})}, zero));
    CHECK(tor.weight_class_eq(Weight{int_vec({2, -2, 0})}, zero));

    // torsion-free case: the saturation equals the lattice
    Lattice tri = Lattice::from_rows(triangle_rows());
    CHECK(tri.weight_class_eq(Weight{int_vec({1, -1, 0})}, Weight{int_vec({0, 0, 0})}));
}

TEST_CASE("kernel basis") {
    Lattice dp3 = Lattice::from_rows(dp3_rows());
    auto basis = dp3.kernel_basis();
    REQUIRE(basis.size() == 4);

    Lattice tri = Lattice::from_rows(triangle_rows());
    auto tbasis = tri.kernel_basis();
    REQUIRE(tbasis.size() == 1);
    CHECK(tbasis[0][0] == tbasis[0][1]);
    CHECK(tbasis[0][1] == tbasis[0][2]);
    CHECK(abs(tbasis[0][0]) == 1);
}

TEST_CASE("group element sampling") {
    Lattice tri = Lattice::from_rows(triangle_rows());
    GroupSample g = tri.sample_group_element(int_vec({1, 1, 1}), Rat(2));
    CHECK(g.xi == std::vector<Rat>{Rat(2), Rat(2), Rat(2)});
    CHECK(g.chi == Rat(4));

    GroupSample id = tri.sample_group_element(int_vec({0, 0, 0}), Rat(7));
    CHECK(id.xi == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(id.chi == Rat(1));

    CHECK_THROWS_AS(tri.sample_group_element(int_vec({1, 0, 0}), Rat(2)), error);
    CHECK_THROWS_AS(tri.sample_group_element(int_vec({1, 1, 1}), Rat(0)), error);

    // kernel vector orthogonal to a0 gives a point of ker chi
    Lattice dp3 = Lattice::from_rows(dp3_rows());
    auto basis = dp3.kernel_basis();
    std::vector<Int> w(6);
    Int c0 = 0, c1 = 0;
    for (size_t i = 0; i < 6; ++i) {
        c0 += basis[0][i];
        c1 += basis[1][i];
    }
    for (size_t i = 0; i < 6; ++i)
        w[i] = c1 * basis[0][i] - c0 * basis[1][i];
    bool nonzero = false;
    for (const Int& x : w)
        nonzero |= x != 0;
    REQUIRE(nonzero);
    GroupSample ker = dp3.sample_group_element(w, Rat(3));
    CHECK(ker.chi == Rat(1));
}

TEST_CASE("basis change leaves the invariants alone") {
    Rng rng(23);
    IntMatrix base = dp3_rows();
    Lattice L0 = Lattice::from_rows(base);
    for (int it = 0; it < 10; ++it) {
        // random unimodular g as a product of elementary operations
        IntMatrix g = IntMatrix::identity(2);
        for (int s = 0; s < 6; ++s) {
            IntMatrix e = IntMatrix::identity(2);
            switch (rng.roll(0, 2)) {
            case 0:
                e.at(0, 1) = Int(rng.roll(-2, 2));
                break;
            case 1:
                e.at(1, 0) = Int(rng.roll(-2, 2));
                break;
            default:
                e.at(0, 0) = 0;
                e.at(1, 1) = 0;
                e.at(0, 1) = 1;
                e.at(1, 0) = -1;
                break;
            }
            g = mat_mul(g, e);
        }
        IntMatrix gb = mat_mul(g, base);
        Lattice L1 = Lattice::from_rows(gb);

        CHECK(L1.weight_class_eq(L1.a0(), L0.a0()));
        CHECK(L1.quotient_structure().torsion_order == L0.quotient_structure().torsion_order);

        // ray membership structure is preserved (as a set of column sets)
        std::set<std::vector<int>> rays0, rays1;
        for (const Ray& r : L0.fan().rays)
            rays0.insert(r.columns);
        for (const Ray& r : L1.fan().rays)
            rays1.insert(r.columns);
        CHECK(rays0 == rays1);

        // chamber raw vectors are preserved as a set
        std::set<std::vector<std::string>> raws0, raws1;
        for (const Chamber& c : L0.fan().chambers) {
            std::vector<std::string> v;
            for (const Int& x : c.a0_raw)
                v.push_back(x.get_str());
            raws0.insert(v);
        }
        for (const Chamber& c : L1.fan().chambers) {
            std::vector<std::string> v;
            for (const Int& x : c.a0_raw)
                v.push_back(x.get_str());
            raws1.insert(v);
        }
        CHECK(raws0 == raws1);

        // class-equality verdicts agree on random weight pairs
        for (int k = 0; k < 5; ++k) {
            std::vector<Int> w1, w2;
            for (int i = 0; i < 6; ++i) {
                w1.push_back(Int(rng.roll(-4, 4)));
                w2.push_back(Int(rng.roll(-4, 4)));
            }
            CHECK(L0.weight_class_eq(Weight{w1}, Weight{w2}) ==
                  L1.weight_class_eq(Weight{w1}, Weight{w2}));
        }
    }
}

TEST_SUITE_END();
