#pragma once

#include "chowform/lattice.hpp"
#include "chowform/quiver.hpp"
#include "chowform/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace chowform {

/// Assignment of weight classes to 2-cells: for every edge
/// eps_black(b(e)) - eps_white(w(e)) == a_s(e) + a_t(e) mod L, the cell sums
/// differ by a0, and hbar is k on black cells and k-2 on white cells.
struct EpsilonAssignment {
    std::map<int, Weight> black;
    std::map<int, Weight> white;
    long k = 0;
};

/// Certificate for an unsatisfiable instance: the edge whose congruence
/// fails, or the global sum congruence.
struct Infeasibility {
    std::optional<int> edge_id; // nullopt means the sum congruence failed
    std::string message;
};

/// Propagates epsilons over a BFS spanning tree of the cell-adjacency graph
/// (root = minimal black cell id, gauge eps_root = 0), then checks every
/// non-tree edge and the sum congruence. Requires Condition 1.
std::variant<EpsilonAssignment, Infeasibility> solve_epsilons(const Lattice& L, const Quiver& q);

/// Verifies a supplied assignment: every edge congruence, the sum congruence,
/// and the hbar ladder k / k-2.
ValidationReport check_condition2(const Lattice& L, const Quiver& q, const EpsilonAssignment& eps);

} // namespace chowform
