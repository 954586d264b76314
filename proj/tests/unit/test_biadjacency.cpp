#include "helpers.hpp"

#include <doctest.h>

#include <fstream>

using namespace chowform;
using testing::fixture_document;
using testing::fixture_instance;
using testing::P;

TEST_SUITE_BEGIN("biadjacency");

namespace {

std::string golden(const std::string& name) {
    std::ifstream f(std::string(CHOWFORM_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    return text;
}

} // namespace

TEST_CASE("dp3 standard matrix reproduces the reference table") {
    ProblemInstance Pi = fixture_instance("dp3");
    BiAdjacency K = build_biadjacency(Pi.quiver, BiAdjacencyFlavor::Standard);
    REQUIRE(K.size == 3);
    CHECK(K.matrix.row_labels == std::vector<std::string>{"b1", "b2", "b3"});
    CHECK(K.matrix.col_labels == std::vector<std::string>{"w1", "w2", "w3"});
    CHECK(K.matrix.at(0, 0) == P("+ 1 * z1 u2 u3 + 1 * z2 u5 u6"));
    CHECK(K.matrix.at(0, 1) == P("+ 1 * z3 u1 u2 + 1 * z4 u4 u5"));
    CHECK(K.matrix.at(0, 2) == P("+ 1 * z5 u3 u4 + 1 * z6 u1 u6"));
    CHECK(K.matrix.at(1, 0) == P("+ 1 * z7 u2 u6"));
    CHECK(K.matrix.at(1, 1) == P("+ 1 * z8 u2 u4"));
    CHECK(K.matrix.at(1, 2) == P("+ 1 * z9 u4 u6"));
    CHECK(K.matrix.at(2, 0) == P("+ 1 * z10 u3 u5"));
    CHECK(K.matrix.at(2, 1) == P("+ 1 * z11 u1 u5"));
    CHECK(K.matrix.at(2, 2) == P("+ 1 * z12 u1 u3"));
}

TEST_CASE("triangle matrices") {
    ProblemInstance Pi = fixture_instance("triangle");
    BiAdjacency std_K = build_biadjacency(Pi.quiver, BiAdjacencyFlavor::Standard);
    REQUIRE(std_K.size == 1);
    CHECK(std_K.matrix.at(0, 0) == P("+ 1 * z1 u1 u2 + 1 * z2 u2 u3 + 1 * z3 u3 u1"));

    BiAdjacency comp = build_biadjacency(Pi.quiver, BiAdjacencyFlavor::Complementary);
    CHECK(comp.matrix.at(0, 0) == P("+ 1 * z1 u3 + 1 * z2 u1 + 1 * z3 u2"));

    CHECK(det_biadjacency(Pi.quiver, BiAdjacencyFlavor::Standard).to_text() ==
          "+ 1 * z1 u1 u2 + 1 * z3 u1 u3 + 1 * z2 u2 u3");
}

TEST_CASE("dp3 determinant matches the pinned golden expansion") {
    ProblemInstance Pi = fixture_instance("dp3");
    Poly det = det_biadjacency(Pi.quiver, BiAdjacencyFlavor::Standard);
    CHECK(det.to_text() == golden("dp3_det.txt"));
    CHECK(det.term_count() == 12);
    auto [content, normalized] = det.content_and_normalize();
    CHECK(abs(content) == 1);
}

TEST_CASE("dp3 complementary determinant flips the exponent vectors") {
    ProblemInstance Pi = fixture_instance("dp3");
    Poly detc = det_biadjacency(Pi.quiver, BiAdjacencyFlavor::Complementary);
    // spot checks against the reference expansion
    CHECK(detc.coefficient_of(VarKind::U, testing::int_vec({2, 1, 1, 2, 3, 3})) ==
          P("+ 1 * z1 z8 z12"));
    CHECK(detc.coefficient_of(VarKind::U, testing::int_vec({3, 2, 1, 1, 2, 3})) ==
          P("- 1 * z5 z8 z10"));
    CHECK(detc.coefficient_of(VarKind::U, testing::int_vec({2, 2, 2, 2, 2, 2})) ==
          P("+ 1 * z2 z8 z12 + 1 * z3 z9 z10 + 1 * z5 z7 z11 "
            "- 1 * z6 z8 z10 - 1 * z1 z9 z11 - 1 * z4 z7 z12"));
    CHECK(detc.is_homogeneous_in(VarKind::U, 12)); // (N - 2) * m

    // every u-exponent class of det K^c equals m(1,...,1) - a0 mod L
    Weight target{testing::int_vec({3, 3, 3, 3, 3, 3})};
    target = weight_sub(target, Pi.lattice.a0());
    for (const auto& [m, c] : detc.terms())
        CHECK(Pi.lattice.weight_class_eq(Weight{m.exponent_vector(VarKind::U, 6)}, target));
}

TEST_CASE("homogeneity checks pass on both fixtures") {
    ProblemInstance dp3 = fixture_instance("dp3");
    CHECK(check_homogeneity(dp3.lattice, dp3.quiver, dp3.eps).ok());
    ProblemInstance tri = fixture_instance("triangle");
    CHECK(check_homogeneity(tri.lattice, tri.quiver, tri.eps).ok());
}

TEST_CASE("a wrong-node entry is located at the entry level") {
    ProblemDocument doc = fixture_document("dp3");
    for (QuiverEdge& e : doc.edges)
        if (e.id == 7)
            e.t = 3; // z7 u3 u6 instead of z7 u2 u6
    Lattice L = Lattice::from_rows(doc.lattice_rows);
    Quiver q(doc.quiver_nodes, doc.edges);
    ValidationReport rep = check_homogeneity(L, q, *doc.epsilons);
    bool entry_level = false;
    for (const auto& v : rep.violations)
        entry_level |= v.code == "entry-weight";
    CHECK(entry_level);
}

TEST_CASE("determinant scales by the character on a group sample") {
    ProblemInstance tri = fixture_instance("triangle");
    Poly det = det_biadjacency(tri.quiver, BiAdjacencyFlavor::Standard);
    GroupSample g = tri.lattice.sample_group_element(testing::int_vec({1, 1, 1}), Rat(2));
    std::map<VarId, Poly> scale;
    for (int i = 1; i <= 3; ++i)
        scale.emplace(VarId::u(i), Poly(g.xi[static_cast<size_t>(i - 1)]) *
                                       Poly::variable(VarId::u(i)));
    CHECK(det.substitute(scale) == det * g.chi);
}

TEST_CASE("degree identities hold on both fixtures") {
    ProblemInstance dp3 = fixture_instance("dp3");
    DegreeCheck d = degree_check(dp3.lattice, dp3.quiver);
    CHECK(d.report.ok());
    CHECK(d.deg_z == 3);
    CHECK(d.deg_u == 6);
    CHECK(d.n_black == 3);
    CHECK(d.n_white == 3);
    CHECK(d.hbar_a0 == 6);
    CHECK(d.nu == 3);

    ProblemInstance tri = fixture_instance("triangle");
    DegreeCheck t = degree_check(tri.lattice, tri.quiver);
    CHECK(t.report.ok());
    CHECK(t.nu == 1);
    CHECK(t.hbar_a0 == 2);
}

TEST_CASE("degree check refuses to certify without Condition 2") {
    ProblemDocument doc = fixture_document("triangle");
    Quiver q(doc.quiver_nodes, doc.edges);
    Lattice L = Lattice::from_rows(testing::int_matrix({{2, -2, 0}, {0, 1, -1}}));
    DegreeCheck d = degree_check(L, q);
    REQUIRE(!d.report.ok());
    bool gated = false;
    for (const auto& v : d.report.violations)
        gated |= v.code == "condition2";
    CHECK(gated);
}

TEST_SUITE_END();
