#include "chowform/compat.hpp"

#include "chowform/error.hpp"

#include <algorithm>
#include <deque>

namespace chowform {

namespace {

Weight edge_weight(const Lattice& L, const QuiverEdge& e) {
    return weight_add(L.unit_weight(e.s), L.unit_weight(e.t));
}

} // namespace

std::variant<EpsilonAssignment, Infeasibility> solve_epsilons(const Lattice& L, const Quiver& q) {
    if (q.n_nodes() != L.n())
        throw error("quiver node count differs from lattice N");

    EpsilonAssignment eps;
    std::vector<Int> zero(static_cast<size_t>(L.n()), Int(0));

    // BFS over the bipartite cell-adjacency graph; one link per quiver edge.
    std::deque<std::pair<CellColor, int>> frontier;
    int root = q.black_cells().front();
    eps.black[root] = Weight{zero};
    frontier.push_back({CellColor::Black, root});
    std::vector<int> nontree;

    while (!frontier.empty()) {
        auto [color, cell] = frontier.front();
        frontier.pop_front();
        for (int id : q.cell_edges(color, cell)) {
            const QuiverEdge& e = q.edge(id);
            Weight w = edge_weight(L, e);
            if (color == CellColor::Black) {
                if (!eps.white.count(e.white)) {
                    eps.white[e.white] = weight_sub(eps.black.at(e.black), w);
                    frontier.push_back({CellColor::White, e.white});
                } else {
                    nontree.push_back(id);
                }
            } else {
                if (!eps.black.count(e.black)) {
                    eps.black[e.black] = weight_add(eps.white.at(e.white), w);
                    frontier.push_back({CellColor::Black, e.black});
                } else {
                    nontree.push_back(id);
                }
            }
        }
    }

    if (eps.black.size() != q.black_cells().size() || eps.white.size() != q.white_cells().size())
        throw error("cell-adjacency graph is disconnected (Condition 1 precondition violated)");

    for (int id : nontree) {
        const QuiverEdge& e = q.edge(id);
        Weight lhs = weight_sub(eps.black.at(e.black), eps.white.at(e.white));
        if (!L.weight_class_eq(lhs, edge_weight(L, e)))
            return Infeasibility{id, "edge " + std::to_string(id) +
                                         ": eps_b" + std::to_string(e.black) + " - eps_w" +
                                         std::to_string(e.white) +
                                         " is not congruent to a_s + a_t mod L"};
    }

    Weight sum{zero};
    for (const auto& [cell, w] : eps.black)
        sum = weight_add(sum, w);
    for (const auto& [cell, w] : eps.white)
        sum = weight_sub(sum, w);
    if (!L.weight_class_eq(sum, L.a0()))
        return Infeasibility{std::nullopt,
                             "sum of eps_b minus sum of eps_w is not congruent to a0 mod L"};

    eps.k = to_long(hbar(eps.black.at(root)));
    return eps;
}

ValidationReport check_condition2(const Lattice& L, const Quiver& q,
                                  const EpsilonAssignment& eps) {
    ValidationReport rep;
    if (q.n_nodes() != L.n()) {
        rep.add("node-count", "quiver node count differs from lattice N");
        return rep;
    }
    for (int c : q.black_cells())
        if (!eps.black.count(c))
            rep.add("missing-cell", "no epsilon supplied for black cell " + std::to_string(c));
    for (int c : q.white_cells())
        if (!eps.white.count(c))
            rep.add("missing-cell", "no epsilon supplied for white cell " + std::to_string(c));
    const auto& blacks = q.black_cells();
    const auto& whites = q.white_cells();
    for (const auto& [cell, w] : eps.black)
        if (std::find(blacks.begin(), blacks.end(), cell) == blacks.end())
            rep.add("unknown-cell", "epsilon supplied for nonexistent black cell " +
                                        std::to_string(cell));
    for (const auto& [cell, w] : eps.white)
        if (std::find(whites.begin(), whites.end(), cell) == whites.end())
            rep.add("unknown-cell", "epsilon supplied for nonexistent white cell " +
                                        std::to_string(cell));
    if (!rep.ok())
        return rep;

    for (const QuiverEdge& e : q.edges()) {
        Weight lhs = weight_sub(eps.black.at(e.black), eps.white.at(e.white));
        if (!L.weight_class_eq(lhs, edge_weight(L, e)))
            rep.add("edge-congruence",
                    "edge " + std::to_string(e.id) + ": eps_b" + std::to_string(e.black) +
                        " - eps_w" + std::to_string(e.white) +
                        " is not congruent to a_s + a_t mod L");
    }

    std::vector<Int> zero(static_cast<size_t>(L.n()), Int(0));
    Weight sum{zero};
    for (const auto& [cell, w] : eps.black)
        sum = weight_add(sum, w);
    for (const auto& [cell, w] : eps.white)
        sum = weight_sub(sum, w);
    if (!L.weight_class_eq(sum, L.a0()))
        rep.add("sum-congruence", "sum of eps_b minus sum of eps_w is not congruent to a0 mod L");

    // hbar ladder: k on black cells, k - 2 on white cells
    Int k = hbar(eps.black.begin()->second);
    for (const auto& [cell, w] : eps.black)
        if (hbar(w) != k)
            rep.add("hbar-ladder", "black cell " + std::to_string(cell) + " has hbar " +
                                       hbar(w).get_str() + ", expected k = " + k.get_str());
    for (const auto& [cell, w] : eps.white)
        if (hbar(w) != k - 2)
            rep.add("hbar-ladder", "white cell " + std::to_string(cell) + " has hbar " +
                                       hbar(w).get_str() + ", expected k - 2 = " +
                                       Int(k - 2).get_str());
    if (eps.k != to_long(k))
        rep.add("hbar-ladder", "recorded k = " + std::to_string(eps.k) +
                                   " differs from hbar of the black cells (" + k.get_str() + ")");
    return rep;
}

} // namespace chowform
