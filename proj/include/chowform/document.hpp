#pragma once

#include "chowform/choworbit.hpp"
#include "chowform/compat.hpp"
#include "chowform/matrix.hpp"
#include "chowform/quiver.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chowform {

/// Parsed problem document (the structured input format). All numbers are
/// exact: integers or "p/q" strings.
struct ProblemDocument {
    std::string name;
    IntMatrix lattice_rows; // 2 x N
    int quiver_nodes = 0;
    std::vector<QuiverEdge> edges;
    std::optional<EpsilonAssignment> epsilons;
    std::map<std::string, std::vector<Rat>> points;
    std::map<std::string, RatMatrix> lines;
    std::vector<Poly> facets; // candidate factors of the principal A-determinant
};

/// Throws parse_error on malformed JSON or schema violations.
ProblemDocument parse_document(const std::string& json_text);

/// Full validation pipeline: lattice invariants, Condition 1, Condition 2
/// (verifying supplied epsilons when present), degree identities. Throws
/// error on validation failure.
ProblemInstance instance_from_document(const ProblemDocument& doc);

// canonical JSON forms (mirror the text format; used by --format structured)
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);
nlohmann::json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j);

} // namespace chowform
