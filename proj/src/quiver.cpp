#include "chowform/quiver.hpp"

#include "chowform/error.hpp"

#include <algorithm>
#include <set>

namespace chowform {

Quiver::Quiver(int n_nodes, std::vector<QuiverEdge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
    if (n_nodes_ < 1)
        throw error("quiver needs at least one node");
    std::sort(edges_.begin(), edges_.end(),
              [](const QuiverEdge& a, const QuiverEdge& b) { return a.id < b.id; });
    std::set<int> blacks, whites;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const QuiverEdge& e = edges_[i];
        if (e.id < 1)
            throw error("edge ids must be positive");
        if (i > 0 && edges_[i - 1].id == e.id)
            throw error("duplicate edge id " + std::to_string(e.id));
        if (e.s < 1 || e.s > n_nodes_ || e.t < 1 || e.t > n_nodes_)
            throw error("edge " + std::to_string(e.id) + " has endpoints out of range");
        blacks.insert(e.black);
        whites.insert(e.white);
        by_id_[e.id] = i;
    }
    black_cells_.assign(blacks.begin(), blacks.end());
    white_cells_.assign(whites.begin(), whites.end());
}

const QuiverEdge& Quiver::edge(int id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
        throw error("unknown edge id " + std::to_string(id));
    return edges_[it->second];
}

std::vector<int> Quiver::cell_edges(CellColor color, int cell_id) const {
    std::vector<int> out;
    for (const QuiverEdge& e : edges_)
        if ((color == CellColor::Black ? e.black : e.white) == cell_id)
            out.push_back(e.id);
    return out;
}

namespace {

std::string cell_name(CellColor color, int id) {
    return (color == CellColor::Black ? "black cell " : "white cell ") + std::to_string(id);
}

// Attempts an Eulerian circuit through all of the cell's arrows; empty when
// the arrows do not form a single connected closed walk.
std::vector<int> eulerian_cycle(const Quiver& q, const std::vector<int>& edge_ids) {
    if (edge_ids.empty())
        return {};
    std::map<int, std::vector<int>> out_edges; // node -> unused outgoing edge ids, ascending
    std::map<int, int> degree;                 // out minus in
    for (int id : edge_ids) {
        const QuiverEdge& e = q.edge(id);
        out_edges[e.s].push_back(id);
        degree[e.s] += 1;
        degree[e.t] -= 1;
    }
    for (const auto& [node, d] : degree)
        if (d != 0)
            return {};
    for (auto& [node, ids] : out_edges)
        std::sort(ids.begin(), ids.end());

    // Hierholzer, smallest edge id first for determinism
    int start = q.edge(*std::min_element(edge_ids.begin(), edge_ids.end())).s;
    std::vector<int> stack_nodes{start};
    std::vector<int> stack_edges;
    std::vector<int> circuit;
    while (!stack_nodes.empty()) {
        int v = stack_nodes.back();
        auto& avail = out_edges[v];
        if (!avail.empty()) {
            int id = avail.front();
            avail.erase(avail.begin());
            stack_nodes.push_back(q.edge(id).t);
            stack_edges.push_back(id);
        } else {
            stack_nodes.pop_back();
            if (!stack_edges.empty() && !stack_nodes.empty()) {
                circuit.push_back(stack_edges.back());
                stack_edges.pop_back();
            }
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != edge_ids.size())
        return {}; // disconnected cell
    // rotate so the minimal edge id comes first
    auto it = std::min_element(circuit.begin(), circuit.end());
    std::rotate(circuit.begin(), it, circuit.end());
    return circuit;
}

} // namespace

ValidationReport check_condition1(const Quiver& q) {
    ValidationReport rep;

    // connectivity of the underlying graph over all nodes
    std::vector<std::vector<int>> adj(static_cast<size_t>(q.n_nodes()) + 1);
    for (const QuiverEdge& e : q.edges()) {
        adj[static_cast<size_t>(e.s)].push_back(e.t);
        adj[static_cast<size_t>(e.t)].push_back(e.s);
    }
    std::vector<bool> seen(static_cast<size_t>(q.n_nodes()) + 1, false);
    std::vector<int> todo{1};
    seen[1] = true;
    while (!todo.empty()) {
        int v = todo.back();
        todo.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                todo.push_back(w);
            }
    }
    for (int v = 1; v <= q.n_nodes(); ++v)
        if (!seen[static_cast<size_t>(v)])
            rep.add("disconnected", "node " + std::to_string(v) + " is not connected to node 1");

    // no oriented cycles of length <= 2
    std::set<std::pair<int, int>> arrows;
    for (const QuiverEdge& e : q.edges()) {
        if (e.s == e.t)
            rep.add("loop", "edge " + std::to_string(e.id) + " is a loop at node " +
                                std::to_string(e.s));
        arrows.insert({e.s, e.t});
    }
    std::set<std::pair<int, int>> reported;
    for (const QuiverEdge& e : q.edges())
        if (e.s != e.t && arrows.count({e.t, e.s}) &&
            reported.insert({std::min(e.s, e.t), std::max(e.s, e.t)}).second)
            rep.add("two-cycle", "edges between nodes " + std::to_string(e.s) + " and " +
                                     std::to_string(e.t) + " form an oriented 2-cycle");

    // in-degree = out-degree
    std::vector<int> din(static_cast<size_t>(q.n_nodes()) + 1, 0),
        dout(static_cast<size_t>(q.n_nodes()) + 1, 0);
    for (const QuiverEdge& e : q.edges()) {
        dout[static_cast<size_t>(e.s)]++;
        din[static_cast<size_t>(e.t)]++;
    }
    for (int v = 1; v <= q.n_nodes(); ++v)
        if (din[static_cast<size_t>(v)] != dout[static_cast<size_t>(v)])
            rep.add("degree", "node " + std::to_string(v) + " has in-degree " +
                                  std::to_string(din[static_cast<size_t>(v)]) + " but out-degree " +
                                  std::to_string(dout[static_cast<size_t>(v)]));

    if (q.black_cells().size() != q.white_cells().size())
        rep.add("cell-count", "found " + std::to_string(q.black_cells().size()) +
                                  " black cells but " + std::to_string(q.white_cells().size()) +
                                  " white cells");

    for (CellColor color : {CellColor::Black, CellColor::White}) {
        const auto& cells = color == CellColor::Black ? q.black_cells() : q.white_cells();
        for (int c : cells)
            if (eulerian_cycle(q, q.cell_edges(color, c)).empty())
                rep.add("cell-not-cycle",
                        cell_name(color, c) + " is not a single connected oriented cycle");
    }

    // the 2-cells must glue into a single surface: the cell-adjacency graph
    // (one link per arrow, joining its black and white cell) is connected
    if (!q.edges().empty()) {
        std::set<std::pair<bool, int>> seen_cells; // (is_white, id)
        std::vector<std::pair<bool, int>> stack{{false, q.edges().front().black}};
        seen_cells.insert(stack.front());
        while (!stack.empty()) {
            auto [is_white, cell] = stack.back();
            stack.pop_back();
            for (const QuiverEdge& e : q.edges()) {
                if ((is_white ? e.white : e.black) != cell)
                    continue;
                std::pair<bool, int> next{!is_white, is_white ? e.black : e.white};
                if (seen_cells.insert(next).second)
                    stack.push_back(next);
            }
        }
        for (int c : q.black_cells())
            if (!seen_cells.count({false, c}))
                rep.add("cell-graph-disconnected",
                        "black cell " + std::to_string(c) +
                            " shares no arrows with the component of black cell " +
                            std::to_string(q.edges().front().black));
        for (int c : q.white_cells())
            if (!seen_cells.count({true, c}))
                rep.add("cell-graph-disconnected",
                        "white cell " + std::to_string(c) +
                            " shares no arrows with the component of black cell " +
                            std::to_string(q.edges().front().black));
    }
    return rep;
}

std::vector<int> cell_cycle(const Quiver& q, CellColor color, int cell_id) {
    std::vector<int> ids = q.cell_edges(color, cell_id);
    if (ids.empty())
        throw error("unknown cell: " + cell_name(color, cell_id));
    std::vector<int> cycle = eulerian_cycle(q, ids);
    if (cycle.empty())
        throw error(cell_name(color, cell_id) + " is not a single connected oriented cycle");
    return cycle;
}

int euler_characteristic(const Quiver& q) {
    return q.n_nodes() - static_cast<int>(q.edges().size()) +
           static_cast<int>(q.black_cells().size()) + static_cast<int>(q.white_cells().size());
}

} // namespace chowform
