#include "chowform/document.hpp"

#include "chowform/error.hpp"

namespace chowform {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw parse_error("expected an integer or a 'p/q' string, got: " + j.dump());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return int_from_string(j.get<std::string>());
    throw parse_error("expected an integer, got: " + j.dump());
}

std::vector<Rat> rat_vector(const json& j) {
    if (!j.is_array())
        throw parse_error("expected an array of numbers");
    std::vector<Rat> v;
    for (const auto& x : j)
        v.push_back(rat_from_json(x));
    return v;
}

std::vector<Int> int_vector(const json& j) {
    if (!j.is_array())
        throw parse_error("expected an array of integers");
    std::vector<Int> v;
    for (const auto& x : j)
        v.push_back(int_from_json(x));
    return v;
}

const json& field(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error("missing field '" + key + "'");
    return j.at(key);
}

std::map<int, Weight> weight_map(const json& j) {
    std::map<int, Weight> out;
    if (!j.is_object())
        throw parse_error("epsilon block must map cell ids to integer vectors");
    for (const auto& [key, val] : j.items()) {
        int id;
        try {
            id = std::stoi(key);
        } catch (const std::exception&) {
            throw parse_error("cell id '" + key + "' is not an integer");
        }
        out[id] = Weight{int_vector(val)};
    }
    return out;
}

} // namespace

ProblemDocument parse_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }

    ProblemDocument doc;
    doc.name = j.value("name", "");

    const json& rows = field(field(j, "lattice"), "rows");
    if (!rows.is_array() || rows.size() != 2)
        throw parse_error("lattice.rows must hold exactly two integer arrays");
    std::vector<Int> r0 = int_vector(rows.at(0)), r1 = int_vector(rows.at(1));
    if (r0.size() != r1.size())
        throw parse_error("lattice rows differ in length");
    doc.lattice_rows = IntMatrix(2, r0.size());
    for (size_t i = 0; i < r0.size(); ++i) {
        doc.lattice_rows.at(0, i) = r0[i];
        doc.lattice_rows.at(1, i) = r1[i];
    }

    const json& quiver = field(j, "quiver");
    doc.quiver_nodes = static_cast<int>(to_long(int_from_json(field(quiver, "nodes"))));
    for (const auto& e : field(quiver, "edges")) {
        QuiverEdge edge;
        edge.id = static_cast<int>(to_long(int_from_json(field(e, "id"))));
        edge.s = static_cast<int>(to_long(int_from_json(field(e, "s"))));
        edge.t = static_cast<int>(to_long(int_from_json(field(e, "t"))));
        edge.black = static_cast<int>(to_long(int_from_json(field(e, "black"))));
        edge.white = static_cast<int>(to_long(int_from_json(field(e, "white"))));
        doc.edges.push_back(edge);
    }

    if (j.contains("epsilons")) {
        EpsilonAssignment eps;
        eps.black = weight_map(field(j.at("epsilons"), "black"));
        eps.white = weight_map(field(j.at("epsilons"), "white"));
        if (eps.black.empty())
            throw parse_error("epsilons.black is empty");
        eps.k = to_long(hbar(eps.black.begin()->second));
        doc.epsilons = std::move(eps);
    }

    if (j.contains("points"))
        for (const auto& [name, val] : j.at("points").items())
            doc.points[name] = rat_vector(val);

    if (j.contains("lines"))
        for (const auto& [name, val] : j.at("lines").items()) {
            if (!val.is_array() || val.size() != 2)
                throw parse_error("line '" + name + "' must hold two rows");
            std::vector<Rat> l0 = rat_vector(val.at(0)), l1 = rat_vector(val.at(1));
            if (l0.size() != l1.size())
                throw parse_error("line '" + name + "' rows differ in length");
            RatMatrix m(2, l0.size());
            for (size_t i = 0; i < l0.size(); ++i) {
                m.at(0, i) = l0[i];
                m.at(1, i) = l1[i];
            }
            doc.lines[name] = m;
        }

    if (j.contains("facets"))
        for (const auto& f : j.at("facets")) {
            if (!f.is_string())
                throw parse_error("facets must be polynomial text strings");
            doc.facets.push_back(Poly::from_text(f.get<std::string>()));
        }

    return doc;
}

ProblemInstance instance_from_document(const ProblemDocument& doc) {
    Lattice L = Lattice::from_rows(doc.lattice_rows);
    Quiver q(doc.quiver_nodes, doc.edges);
    return make_instance(L, q, doc.epsilons);
}

nlohmann::json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m.factors())
            mono.push_back(json::array({v.name(), e}));
        terms.push_back(json{{"coeff", to_string(c)}, {"monomial", mono}});
    }
    return json{{"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    Poly out;
    for (const auto& t : field(j, "terms")) {
        Rat c = rat_from_string(field(t, "coeff").get<std::string>());
        Monomial m;
        for (const auto& f : field(t, "monomial")) {
            if (!f.is_array() || f.size() != 2)
                throw parse_error("monomial factors must be [name, exponent] pairs");
            m = m * Monomial::var(VarId::from_name(f.at(0).get<std::string>()),
                                  f.at(1).get<int>());
        }
        out += Poly::term(c, m);
    }
    return out;
}

nlohmann::json poly_matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return json{{"row_labels", m.row_labels}, {"col_labels", m.col_labels}, {"entries", rows}};
}

PolyMatrix poly_matrix_from_json(const nlohmann::json& j) {
    const json& entries = field(j, "entries");
    size_t rows = entries.size();
    size_t cols = rows ? entries.at(0).size() : 0;
    PolyMatrix m(rows, cols);
    m.row_labels = field(j, "row_labels").get<std::vector<std::string>>();
    m.col_labels = field(j, "col_labels").get<std::vector<std::string>>();
    for (size_t r = 0; r < rows; ++r) {
        if (entries.at(r).size() != cols)
            throw parse_error("ragged matrix entries");
        for (size_t c = 0; c < cols; ++c)
            m.at(r, c) = poly_from_json(entries.at(r).at(c));
    }
    return m;
}

} // namespace chowform
