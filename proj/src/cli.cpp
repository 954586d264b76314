#include "chowform/cli.hpp"

#include "chowform/document.hpp"
#include "chowform/error.hpp"
#include "chowform/fixtures.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace chowform {

namespace {

using nlohmann::json;

std::string read_document_text(const std::string& spec) {
    std::ifstream f(spec);
    if (f) {
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    std::string fx = fixture_json(spec);
    if (!fx.empty())
        return fx;
    throw parse_error("cannot open document '" + spec + "' (not a file or a bundled fixture)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> v;
    for (const std::string& piece : split(s, ','))
        v.push_back(rat_from_string(piece));
    return v;
}

std::vector<Rat> resolve_point(const ProblemDocument& doc, const std::string& spec) {
    if (spec.find(',') != std::string::npos)
        return parse_rat_list(spec);
    auto it = doc.points.find(spec);
    if (it == doc.points.end())
        throw parse_error("unknown point '" + spec + "' (define it in the document or pass " +
                          "comma-separated coordinates)");
    return it->second;
}

Line resolve_line(const ProblemDocument& doc, const Lattice& L, const std::string& spec) {
    if (spec == "lattice") {
        RatMatrix m(2, static_cast<size_t>(L.n()));
        for (size_t r = 0; r < 2; ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = Rat(L.b().at(r, c));
        return Line(m);
    }
    if (spec.find(';') != std::string::npos) {
        std::vector<std::string> rows = split(spec, ';');
        if (rows.size() != 2)
            throw parse_error("a line needs exactly two rows separated by ';'");
        std::vector<Rat> r0 = parse_rat_list(rows[0]), r1 = parse_rat_list(rows[1]);
        if (r0.size() != r1.size())
            throw parse_error("line rows differ in length");
        RatMatrix m(2, r0.size());
        for (size_t c = 0; c < r0.size(); ++c) {
            m.at(0, c) = r0[c];
            m.at(1, c) = r1[c];
        }
        return Line(m);
    }
    auto it = doc.lines.find(spec);
    if (it == doc.lines.end())
        throw parse_error("unknown line '" + spec + "' (define it in the document, pass " +
                          "'r1;r2', or use the reserved name 'lattice')");
    return Line(it->second);
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> v;
    for (const std::string& piece : split(s, ','))
        v.push_back(int_from_string(piece));
    return v;
}

std::string pair_list_to_string(const std::vector<std::pair<int, int>>& pairs) {
    std::string out;
    for (const auto& [i, j] : pairs) {
        if (!out.empty())
            out += ' ';
        out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return out;
}

json report_to_json(const ValidationReport& rep) {
    json v = json::array();
    for (const auto& viol : rep.violations)
        v.push_back({{"code", viol.code}, {"message", viol.message}});
    return json{{"ok", rep.ok()}, {"violations", v}};
}

json weight_map_to_json(const std::map<int, Weight>& m) {
    json out = json::object();
    for (const auto& [cell, w] : m) {
        json raw = json::array();
        for (const Int& x : w.raw)
            raw.push_back(x.get_str());
        out[std::to_string(cell)] = raw;
    }
    return out;
}

void emit(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

struct Ctx {
    ProblemDocument doc;
    bool structured = false;
};

int cmd_validate(const Ctx& ctx, std::ostream& out) {
    const ProblemDocument& doc = ctx.doc;
    bool all_ok = true;
    json j;
    std::ostringstream text;
    text << "document: " << doc.name << "\n";
    j["document"] = doc.name;

    ValidationReport lat_rep = Lattice::validate_rows(doc.lattice_rows);
    j["lattice"] = report_to_json(lat_rep);
    j["lattice"]["n"] = doc.lattice_rows.cols();
    if (!lat_rep.ok()) {
        text << "lattice: invalid\n" << lat_rep.to_text() << "\n";
        text << "result: invalid\n";
        if (ctx.structured)
            emit(out, j);
        else
            out << text.str();
        return 1;
    }
    text << "lattice: valid (N = " << doc.lattice_rows.cols() << ")\n";
    Lattice L = Lattice::from_rows(doc.lattice_rows);
    Quiver q(doc.quiver_nodes, doc.edges);

    if (q.n_nodes() != L.n()) {
        text << "node count: quiver has " << q.n_nodes() << " nodes, lattice has N = " << L.n()
             << "\nresult: invalid\n";
        j["node_count_ok"] = false;
        if (ctx.structured)
            emit(out, j);
        else
            out << text.str();
        return 1;
    }

    ValidationReport c1 = check_condition1(q);
    j["condition1"] = report_to_json(c1);
    text << "condition1: " << (c1.ok() ? "pass" : "fail\n" + c1.to_text()) << "\n";
    all_ok = all_ok && c1.ok();

    std::optional<EpsilonAssignment> verified;
    if (doc.epsilons) {
        ValidationReport c2s = check_condition2(L, q, *doc.epsilons);
        j["condition2_supplied"] = report_to_json(c2s);
        j["condition2_supplied"]["k"] = doc.epsilons->k;
        text << "condition2 (supplied): "
             << (c2s.ok() ? "pass (k = " + std::to_string(doc.epsilons->k) + ")"
                          : "fail\n" + c2s.to_text())
             << "\n";
        all_ok = all_ok && c2s.ok();
        if (c2s.ok())
            verified = *doc.epsilons;
    }

    if (c1.ok()) {
        auto solved = solve_epsilons(L, q);
        if (std::holds_alternative<Infeasibility>(solved)) {
            const auto& inf = std::get<Infeasibility>(solved);
            text << "condition2 (solved): infeasible: " << inf.message << "\n";
            j["condition2_solved"] = {{"ok", false}, {"message", inf.message}};
            if (inf.edge_id)
                j["condition2_solved"]["edge"] = *inf.edge_id;
            all_ok = false;
        } else {
            const auto& eps = std::get<EpsilonAssignment>(solved);
            ValidationReport c2 = check_condition2(L, q, eps);
            text << "condition2 (solved): "
                 << (c2.ok() ? "pass (k = " + std::to_string(eps.k) + ")" : "fail\n" + c2.to_text())
                 << "\n";
            j["condition2_solved"] = report_to_json(c2);
            j["condition2_solved"]["k"] = eps.k;
            all_ok = all_ok && c2.ok();
            if (!verified)
                verified = eps;
        }

        if (verified) {
            ValidationReport hom = check_homogeneity(L, q, *verified);
            j["homogeneity"] = report_to_json(hom);
            text << "homogeneity: " << (hom.ok() ? "pass" : "fail\n" + hom.to_text()) << "\n";
            all_ok = all_ok && hom.ok();

            DegreeCheck deg = degree_check(L, q);
            j["degree"] = report_to_json(deg.report);
            j["degree"]["nu"] = deg.nu;
            j["degree"]["deg_z"] = deg.deg_z;
            j["degree"]["deg_u"] = deg.deg_u;
            j["degree"]["n_black"] = deg.n_black;
            j["degree"]["n_white"] = deg.n_white;
            j["degree"]["hbar_a0"] = deg.hbar_a0.get_str();
            text << "degree: "
                 << (deg.report.ok() ? "pass (nu = " + std::to_string(deg.nu) + ")"
                                     : "fail\n" + deg.report.to_text())
                 << "\n";
            all_ok = all_ok && deg.report.ok();
        }

        text << "euler characteristic: " << euler_characteristic(q) << "\n";
        j["euler_characteristic"] = euler_characteristic(q);
    }

    QuotientStructure qs = L.quotient_structure();
    text << "quotient: free_rank = " << qs.free_rank
         << ", torsion_order = " << qs.torsion_order.get_str() << "\n";
    json factors = json::array();
    for (const Int& d : qs.invariant_factors)
        factors.push_back(d.get_str());
    j["quotient"] = {{"free_rank", qs.free_rank},
                     {"invariant_factors", factors},
                     {"torsion_order", qs.torsion_order.get_str()}};

    text << "result: " << (all_ok ? "ok" : "invalid") << "\n";
    j["ok"] = all_ok;
    if (ctx.structured)
        emit(out, j);
    else
        out << text.str();
    return all_ok ? 0 : 1;
}

int cmd_fan(const Ctx& ctx, std::ostream& out) {
    Lattice L = Lattice::from_rows(ctx.doc.lattice_rows);
    const SecondaryFan& fan = L.fan();
    if (ctx.structured) {
        json rays = json::array();
        for (const Ray& r : fan.rays)
            rays.push_back({{"direction", {r.direction[0].get_str(), r.direction[1].get_str()}},
                            {"columns", r.columns}});
        json chambers = json::array();
        for (const Chamber& c : fan.chambers) {
            json pairs = json::array();
            for (const auto& [i, jx] : c.pairs)
                pairs.push_back({i, jx});
            json raw = json::array();
            for (const Int& x : c.a0_raw)
                raw.push_back(x.get_str());
            chambers.push_back(
                {{"representative", {c.representative[0].get_str(), c.representative[1].get_str()}},
                 {"pairs", pairs},
                 {"a0_raw", raw}});
        }
        emit(out, json{{"rays", rays}, {"chambers", chambers}});
        return 0;
    }
    out << "rays: " << fan.rays.size() << "\n";
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        const Ray& r = fan.rays[i];
        out << "ray " << i << ": direction (" << r.direction[0].get_str() << ", "
            << r.direction[1].get_str() << "), columns [";
        for (size_t k = 0; k < r.columns.size(); ++k)
            out << (k ? " " : "") << r.columns[k];
        out << "]\n";
    }
    out << "chambers: " << fan.chambers.size() << "\n";
    for (size_t i = 0; i < fan.chambers.size(); ++i) {
        const Chamber& c = fan.chambers[i];
        out << "chamber " << i << ": c = (" << c.representative[0].get_str() << ", "
            << c.representative[1].get_str() << "), pairs " << pair_list_to_string(c.pairs)
            << ", a0_raw = " << vector_to_string(c.a0_raw) << "\n";
    }
    return 0;
}

int cmd_a0(const Ctx& ctx, std::ostream& out) {
    Lattice L = Lattice::from_rows(ctx.doc.lattice_rows);
    const SecondaryFan& fan = L.fan();
    if (ctx.structured) {
        json chambers = json::array();
        for (const Chamber& c : fan.chambers) {
            json raw = json::array();
            for (const Int& x : c.a0_raw)
                raw.push_back(x.get_str());
            chambers.push_back(raw);
        }
        json rep = json::array();
        for (const Int& x : L.a0().raw)
            rep.push_back(x.get_str());
        emit(out, json{{"chamber_raws", chambers},
                       {"representative", rep},
                       {"hbar", L.hbar_a0().get_str()}});
        return 0;
    }
    for (size_t i = 0; i < fan.chambers.size(); ++i)
        out << "chamber " << i << ": " << vector_to_string(fan.chambers[i].a0_raw) << "\n";
    out << "class: all chamber vectors congruent mod L\n";
    out << "representative: " << vector_to_string(L.a0().raw) << "\n";
    out << "hbar(a0): " << L.hbar_a0().get_str() << "\n";
    return 0;
}

void print_epsilons(std::ostream& out, const EpsilonAssignment& eps) {
    for (const auto& [cell, w] : eps.black)
        out << "black " << cell << ": " << vector_to_string(w.raw) << "\n";
    for (const auto& [cell, w] : eps.white)
        out << "white " << cell << ": " << vector_to_string(w.raw) << "\n";
}

int cmd_epsilons(const Ctx& ctx, std::ostream& out) {
    Lattice L = Lattice::from_rows(ctx.doc.lattice_rows);
    Quiver q(ctx.doc.quiver_nodes, ctx.doc.edges);
    ValidationReport c1 = check_condition1(q);
    if (!c1.ok())
        throw error("Condition 1 fails:\n" + c1.to_text());

    json j;
    if (ctx.doc.epsilons) {
        ValidationReport rep = check_condition2(L, q, *ctx.doc.epsilons);
        if (!ctx.structured) {
            out << "supplied epsilons: "
                << (rep.ok() ? "pass (k = " + std::to_string(ctx.doc.epsilons->k) + ")"
                             : "fail\n" + rep.to_text())
                << "\n";
            if (rep.ok())
                print_epsilons(out, *ctx.doc.epsilons);
        } else {
            j["supplied"] = {{"check", report_to_json(rep)},
                             {"k", ctx.doc.epsilons->k},
                             {"black", weight_map_to_json(ctx.doc.epsilons->black)},
                             {"white", weight_map_to_json(ctx.doc.epsilons->white)}};
        }
        if (!rep.ok()) {
            if (ctx.structured)
                emit(out, j);
            return 1;
        }
    }

    auto solved = solve_epsilons(L, q);
    if (std::holds_alternative<Infeasibility>(solved)) {
        const auto& inf = std::get<Infeasibility>(solved);
        if (ctx.structured) {
            j["solved"] = {{"ok", false}, {"message", inf.message}};
            if (inf.edge_id)
                j["solved"]["edge"] = *inf.edge_id;
            emit(out, j);
        } else {
            out << "solved epsilons: infeasible: " << inf.message << "\n";
        }
        return 1;
    }
    const auto& eps = std::get<EpsilonAssignment>(solved);
    if (ctx.structured) {
        j["solved"] = {{"ok", true},
                       {"k", eps.k},
                       {"black", weight_map_to_json(eps.black)},
                       {"white", weight_map_to_json(eps.white)}};
        emit(out, j);
    } else {
        out << "solved epsilons (BFS gauge): k = " << eps.k << "\n";
        print_epsilons(out, eps);
    }
    return 0;
}

int cmd_biadjacency(const Ctx& ctx, bool complementary, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    BiAdjacency K = build_biadjacency(
        P.quiver, complementary ? BiAdjacencyFlavor::Complementary : BiAdjacencyFlavor::Standard);
    if (ctx.structured) {
        emit(out, poly_matrix_to_json(K.matrix));
        return 0;
    }
    out << "rows (black):";
    for (const std::string& l : K.matrix.row_labels)
        out << " " << l;
    out << "\ncols (white):";
    for (const std::string& l : K.matrix.col_labels)
        out << " " << l;
    out << "\n";
    for (size_t r = 0; r < K.matrix.rows(); ++r)
        for (size_t c = 0; c < K.matrix.cols(); ++c)
            out << "K[" << K.matrix.row_labels[r] << "][" << K.matrix.col_labels[c]
                << "] = " << K.matrix.at(r, c).to_text() << "\n";
    return 0;
}

int cmd_det(const Ctx& ctx, bool complementary, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    Poly det = det_biadjacency(
        P.quiver, complementary ? BiAdjacencyFlavor::Complementary : BiAdjacencyFlavor::Standard);
    if (ctx.structured)
        emit(out, poly_to_json(det));
    else
        out << det.to_text() << "\n";
    return 0;
}

int cmd_chowform(const Ctx& ctx, const std::string& point_spec, bool affine, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    OrbitPoint u = OrbitPoint::of(resolve_point(ctx.doc, point_spec));
    PlueckerElement pe = chow_map_point(P, u, !affine);
    if (ctx.structured)
        emit(out, poly_to_json(pe.p));
    else
        out << pe.p.to_text() << "\n";
    return 0;
}

int cmd_orbit_invariant(const Ctx& ctx, const std::string& point_spec, bool projective,
                        std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    OrbitPoint u = OrbitPoint::of(resolve_point(ctx.doc, point_spec));
    Poly p = projective ? projective_orbit_invariant(P, u) : affine_orbit_invariant(P, u);
    if (ctx.structured)
        emit(out, poly_to_json(p));
    else
        out << p.to_text() << "\n";
    return 0;
}

int cmd_line_image(const Ctx& ctx, const std::string& line_spec, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    Line line = resolve_line(ctx.doc, P.lattice, line_spec);
    Poly p = line_image_equation(P, line);
    if (ctx.structured)
        emit(out, poly_to_json(p));
    else
        out << p.to_text() << "\n";
    return 0;
}

int cmd_adet(const Ctx& ctx, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    AdetResult adet = principal_a_determinant(P);
    json j;
    std::ostringstream text;
    text << "adet = " << adet.poly.to_text() << "\n";
    text << "content vs B_st image: " << to_string(adet.content)
         << " (the identity fixes the result only up to a global sign)\n";
    j["adet"] = poly_to_json(adet.poly);
    j["content"] = to_string(adet.content);

    if (!ctx.doc.facets.empty()) {
        FacetReport rep = facet_divisibility(P, ctx.doc.facets);
        json items = json::array();
        for (const auto& item : rep.factors) {
            text << "facet " << item.factor.to_text() << ": "
                 << (item.quotient ? "divides" : "does not divide") << "\n";
            items.push_back({{"factor", poly_to_json(item.factor)},
                             {"divides", static_cast<bool>(item.quotient)}});
        }
        if (rep.product_quotient)
            text << "facet product: quotient = " << rep.product_quotient->to_text()
                 << (rep.product_matches_up_to_sign ? " (matches up to sign)" : "") << "\n";
        else
            text << "facet product: does not divide\n";
        j["facets"] = items;
        j["product_divides"] = static_cast<bool>(rep.product_quotient);
        if (rep.product_quotient)
            j["product_quotient"] = poly_to_json(*rep.product_quotient);
        j["product_matches_up_to_sign"] = rep.product_matches_up_to_sign;
    }
    if (ctx.structured)
        emit(out, j);
    else
        out << text.str();
    return 0;
}

int cmd_incidence(const Ctx& ctx, const std::string& line_spec, const std::string& point_spec,
                  std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    Line line = resolve_line(ctx.doc, P.lattice, line_spec);
    OrbitPoint u = OrbitPoint::of(resolve_point(ctx.doc, point_spec));
    bool vanishes = incidence_vanishing(P, line, u);
    bool on_line = point_on_line(line, u.u);
    if (ctx.structured) {
        json pc = json::object();
        for (const auto& [km, val] : pluecker_coords(line))
            pc["Y[" + std::to_string(km.first) + "][" + std::to_string(km.second) + "]"] =
                to_string(val);
        emit(out, json{{"vanishes", vanishes}, {"point_on_line", on_line}, {"pluecker", pc}});
    } else {
        out << "vanishes: " << (vanishes ? "true" : "false") << "\n";
        out << "point_on_line: " << (on_line ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_vertex_coeff(const Ctx& ctx, const std::string& exps, std::ostream& out) {
    ProblemInstance P = instance_from_document(ctx.doc);
    Poly c = vertex_coefficient(P, parse_int_list(exps));
    if (ctx.structured)
        emit(out, poly_to_json(c));
    else
        out << "coefficient = " << c.to_text() << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit: quivers with superpotential, secondary fans, bi-adjacency "
                 "determinants, Chow forms of torus-orbit closures, principal A-determinants"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string format = "text";
    std::string docspec;
    bool complementary = false, affine = false, projective = false;
    std::string point_spec, line_spec, exps;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("document", docspec, "path to a JSON document or a bundled fixture name")
            ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* c_validate = app.add_subcommand("validate", "run the full validation pipeline");
    add_common(c_validate);
    CLI::App* c_fan = app.add_subcommand("fan", "secondary fan: rays, chambers, chamber lists");
    add_common(c_fan);
    CLI::App* c_a0 = app.add_subcommand("a0", "per-chamber raw a0 vectors and the class");
    add_common(c_a0);
    CLI::App* c_eps = app.add_subcommand("epsilons", "verify supplied / solve for epsilons");
    add_common(c_eps);
    CLI::App* c_biadj = app.add_subcommand("biadjacency", "the bi-adjacency matrix");
    add_common(c_biadj);
    c_biadj->add_flag("--complementary", complementary, "complementary flavor");
    CLI::App* c_det = app.add_subcommand("det", "determinant of the bi-adjacency matrix");
    add_common(c_det);
    c_det->add_flag("--complementary", complementary, "complementary flavor");
    CLI::App* c_chow = app.add_subcommand("chowform", "Chow form of the orbit closure of a point");
    add_common(c_chow);
    c_chow->add_option("--point", point_spec, "point name or comma-separated coordinates")
        ->required();
    c_chow->add_flag("--affine", affine, "skip the projective normalization");
    CLI::App* c_orbit = app.add_subcommand("orbit-invariant", "det K_P(z, u0)");
    add_common(c_orbit);
    c_orbit->add_option("--point", point_spec)->required();
    c_orbit->add_flag("--projective", projective, "normalize modulo C*");
    CLI::App* c_line = app.add_subcommand("line-image", "equation of a line's image");
    add_common(c_line);
    c_line->add_option("--line", line_spec, "line name, 'r1;r2' rows, or 'lattice'")->required();
    CLI::App* c_adet = app.add_subcommand("adet", "principal A-determinant with facet report");
    add_common(c_adet);
    CLI::App* c_inc = app.add_subcommand("incidence", "incidence vanishing test");
    add_common(c_inc);
    c_inc->add_option("--line", line_spec)->required();
    c_inc->add_option("--point", point_spec)->required();
    CLI::App* c_vc = app.add_subcommand("vertex-coeff", "coefficient of u^v in det K_P");
    add_common(c_vc);
    c_vc->add_option("--exponents", exps, "comma-separated exponent vector")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        Ctx ctx;
        ctx.doc = parse_document(read_document_text(docspec));
        ctx.structured = format == "structured";

        if (app.got_subcommand(c_validate))
            return cmd_validate(ctx, out);
        if (app.got_subcommand(c_fan))
            return cmd_fan(ctx, out);
        if (app.got_subcommand(c_a0))
            return cmd_a0(ctx, out);
        if (app.got_subcommand(c_eps))
            return cmd_epsilons(ctx, out);
        if (app.got_subcommand(c_biadj))
            return cmd_biadjacency(ctx, complementary, out);
        if (app.got_subcommand(c_det))
            return cmd_det(ctx, complementary, out);
        if (app.got_subcommand(c_chow))
            return cmd_chowform(ctx, point_spec, affine, out);
        if (app.got_subcommand(c_orbit))
            return cmd_orbit_invariant(ctx, point_spec, projective, out);
        if (app.got_subcommand(c_line))
            return cmd_line_image(ctx, line_spec, out);
        if (app.got_subcommand(c_adet))
            return cmd_adet(ctx, out);
        if (app.got_subcommand(c_inc))
            return cmd_incidence(ctx, line_spec, point_spec, out);
        if (app.got_subcommand(c_vc))
            return cmd_vertex_coeff(ctx, exps, out);
        err << "error: no command selected\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace chowform
