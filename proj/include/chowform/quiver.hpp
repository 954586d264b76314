#pragma once

#include "chowform/report.hpp"

#include <map>
#include <vector>

namespace chowform {

struct QuiverEdge {
    int id;
    int s, t;   // source and target nodes, 1..N
    int black;  // enclosing black 2-cell id
    int white;  // enclosing white 2-cell id
};

enum class CellColor { Black, White };

/// Quiver with superpotential: nodes 1..N, arrows, and the partition of the
/// arrows into black and white 2-cells. Construction checks structural
/// well-formedness only; the mathematical conditions live in check_condition1.
class Quiver {
public:
    Quiver(int n_nodes, std::vector<QuiverEdge> edges); // throws error on bad structure

    int n_nodes() const { return n_nodes_; }
    const std::vector<QuiverEdge>& edges() const { return edges_; } // ascending id
    const QuiverEdge& edge(int id) const;

    const std::vector<int>& black_cells() const { return black_cells_; } // ascending
    const std::vector<int>& white_cells() const { return white_cells_; }
    std::vector<int> cell_edges(CellColor color, int cell_id) const; // ascending edge ids

private:
    int n_nodes_;
    std::vector<QuiverEdge> edges_;
    std::vector<int> black_cells_, white_cells_;
    std::map<int, size_t> by_id_;
};

/// Condition on the quiver alone: connected, no oriented cycles of length <= 2,
/// in-degree = out-degree everywhere, equally many black and white cells, and
/// every 2-cell's arrows form a single connected oriented cycle.
ValidationReport check_condition1(const Quiver& q);

/// The unique closed walk of the cell (rotation canonicalized to start at the
/// minimal edge id). Throws error naming the cell when the arrows do not close
/// into a single oriented cycle.
std::vector<int> cell_cycle(const Quiver& q, CellColor color, int cell_id);

/// #nodes - #arrows + #black + #white; 0 exactly for torus realizations.
int euler_characteristic(const Quiver& q);

} // namespace chowform
