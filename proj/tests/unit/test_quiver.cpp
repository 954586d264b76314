#include "helpers.hpp"

#include <doctest.h>

using namespace chowform;
using testing::fixture_document;

TEST_SUITE_BEGIN("quiver");

namespace {

Quiver dp3_quiver() {
    ProblemDocument doc = fixture_document("dp3");
    return Quiver(doc.quiver_nodes, doc.edges);
}

Quiver triangle_quiver() {
    ProblemDocument doc = fixture_document("triangle");
    return Quiver(doc.quiver_nodes, doc.edges);
}

} // namespace

TEST_CASE("structural validation") {
    CHECK_THROWS_AS(Quiver(3, {{1, 1, 4, 1, 1}}), error);            // endpoint out of range
    CHECK_THROWS_AS(Quiver(3, {{1, 1, 2, 1, 1}, {1, 2, 3, 1, 1}}), error); // duplicate id
    CHECK_THROWS_AS(Quiver(0, {}), error);
}

TEST_CASE("dp3 satisfies Condition 1") {
    CHECK(check_condition1(dp3_quiver()).ok());
}

TEST_CASE("triangle satisfies Condition 1") {
    CHECK(check_condition1(triangle_quiver()).ok());
}

TEST_CASE("reversing an edge breaks the white cell cycle") {
    ProblemDocument doc = fixture_document("dp3");
    for (QuiverEdge& e : doc.edges)
        if (e.id == 1)
            std::swap(e.s, e.t);
    Quiver q(doc.quiver_nodes, doc.edges);
    ValidationReport rep = check_condition1(q);
    REQUIRE(!rep.ok());
    bool white1_broken = false;
    for (const auto& v : rep.violations)
        if (v.code == "cell-not-cycle" && v.message.find("white cell 1") != std::string::npos)
            white1_broken = true;
    CHECK(white1_broken);
    CHECK_THROWS_AS(cell_cycle(q, CellColor::White, 1), error);
}

TEST_CASE("loops and 2-cycles are rejected") {
    Quiver loop(2, {{1, 1, 1, 1, 1}, {2, 1, 2, 1, 1}, {3, 2, 1, 1, 1}});
    ValidationReport rep = check_condition1(loop);
    bool has_loop = false, has_two_cycle = false;
    for (const auto& v : rep.violations) {
        has_loop |= v.code == "loop";
        has_two_cycle |= v.code == "two-cycle";
    }
    CHECK(has_loop);
    CHECK(has_two_cycle);
}

TEST_CASE("dp3 cell cycles") {
    Quiver q = dp3_quiver();
    // black cell 1 walks the hexagon 2 -> 3 -> 4 -> 5 -> 6 -> 1 -> 2
    CHECK(cell_cycle(q, CellColor::Black, 1) == std::vector<int>{1, 5, 4, 2, 6, 3});
    CHECK(cell_cycle(q, CellColor::Black, 2) == std::vector<int>{7, 8, 9});
    // white cell 2 walks 1 -> 2 -> 4 -> 5 -> 1
    CHECK(cell_cycle(q, CellColor::White, 2) == std::vector<int>{3, 8, 4, 11});

    // the walk property t(e_i) = s(e_{i+1}) holds cyclically for every cell
    for (CellColor color : {CellColor::Black, CellColor::White}) {
        const auto& cells = color == CellColor::Black ? q.black_cells() : q.white_cells();
        for (int c : cells) {
            std::vector<int> cyc = cell_cycle(q, color, c);
            for (size_t i = 0; i < cyc.size(); ++i)
                CHECK(q.edge(cyc[i]).t == q.edge(cyc[(i + 1) % cyc.size()]).s);
        }
    }
}

TEST_CASE("a single-edge cell cannot close a cycle") {
    Quiver q(2, {{1, 1, 2, 1, 1}});
    CHECK_THROWS_AS(cell_cycle(q, CellColor::Black, 1), error);
}

TEST_CASE("every edge lies in exactly one black and one white cell") {
    Quiver q = dp3_quiver();
    size_t black_total = 0, white_total = 0;
    for (int c : q.black_cells())
        black_total += q.cell_edges(CellColor::Black, c).size();
    for (int c : q.white_cells())
        white_total += q.cell_edges(CellColor::White, c).size();
    CHECK(black_total == q.edges().size());
    CHECK(white_total == q.edges().size());
}

TEST_CASE("a wedge of two surfaces is rejected") {
    // two arrow triangles sharing only node 1: the node graph is connected
    // but the cells glue into two spheres touching at a point (odd Euler
    // characteristic, no epsilon propagation possible)
    Quiver wedge(5, {{1, 1, 2, 1, 1},
                     {2, 2, 3, 1, 1},
                     {3, 3, 1, 1, 1},
                     {4, 1, 4, 2, 2},
                     {5, 4, 5, 2, 2},
                     {6, 5, 1, 2, 2}});
    CHECK(euler_characteristic(wedge) % 2 != 0);
    ValidationReport rep = check_condition1(wedge);
    REQUIRE(!rep.ok());
    bool disconnected = false;
    for (const auto& v : rep.violations)
        disconnected |= v.code == "cell-graph-disconnected";
    CHECK(disconnected);
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(dp3_quiver()) == 0);  // torus
    CHECK(euler_characteristic(triangle_quiver()) == 2); // sphere
    CHECK(euler_characteristic(dp3_quiver()) % 2 == 0);
}

TEST_SUITE_END();
