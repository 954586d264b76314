#include "chowform/choworbit.hpp"

#include "chowform/error.hpp"

namespace chowform {

ProblemInstance make_instance(const Lattice& L, const Quiver& q,
                              const std::optional<EpsilonAssignment>& supplied) {
    if (q.n_nodes() != L.n())
        throw error("quiver has " + std::to_string(q.n_nodes()) + " nodes but the lattice has N = " +
                    std::to_string(L.n()));
    ValidationReport c1 = check_condition1(q);
    if (!c1.ok())
        throw error("Condition 1 fails:\n" + c1.to_text());

    EpsilonAssignment eps;
    if (supplied) {
        ValidationReport c2 = check_condition2(L, q, *supplied);
        if (!c2.ok())
            throw error("supplied epsilons fail Condition 2:\n" + c2.to_text());
        eps = *supplied;
    } else {
        auto solved = solve_epsilons(L, q);
        if (std::holds_alternative<Infeasibility>(solved))
            throw error("Condition 2 infeasible: " + std::get<Infeasibility>(solved).message);
        eps = std::get<EpsilonAssignment>(solved);
    }

    DegreeCheck deg = degree_check(L, q);
    if (!deg.report.ok())
        throw error("degree identities fail:\n" + deg.report.to_text());
    return ProblemInstance{L, q, eps, deg.nu};
}

OrbitPoint OrbitPoint::of(std::vector<Rat> u) {
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] == 0)
            throw error("orbit point coordinate " + std::to_string(i + 1) +
                        " is zero; points must lie in the open torus");
    return OrbitPoint{std::move(u)};
}

namespace {

// evaluates the u variables of every matrix entry, then takes the determinant
Poly det_with_u(const ProblemInstance& P, BiAdjacencyFlavor flavor, const OrbitPoint& u,
                bool substitute_y) {
    if (u.u.size() != static_cast<size_t>(P.lattice.n()))
        throw error("orbit point dimension mismatch");
    BiAdjacency K = build_biadjacency(P.quiver, flavor);
    std::map<VarId, Poly> map;
    for (int i = 1; i <= P.lattice.n(); ++i)
        map.emplace(VarId::u(i), Poly(u.u[static_cast<size_t>(i - 1)]));
    PolyMatrix m = K.matrix;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            Poly entry = m.at(r, c).substitute(map);
            if (substitute_y)
                entry = y_substitution(P.quiver, entry).p;
            m.at(r, c) = entry;
        }
    return det_poly_matrix(m);
}

} // namespace

Poly affine_orbit_invariant(const ProblemInstance& P, const OrbitPoint& u) {
    return det_with_u(P, BiAdjacencyFlavor::Standard, u, false);
}

Poly projective_orbit_invariant(const ProblemInstance& P, const OrbitPoint& u) {
    Poly det = affine_orbit_invariant(P, u);
    if (det.is_zero())
        throw error("determinant vanishes at the given point; no projective class");
    return det.content_and_normalize().second;
}

PlueckerElement chow_form(const ProblemInstance& P, const OrbitPoint& u) {
    return chow_map_point(P, u, true);
}

PlueckerElement chow_map_point(const ProblemInstance& P, const OrbitPoint& u, bool projective) {
    Poly det = det_with_u(P, BiAdjacencyFlavor::Complementary, u, true);
    if (!projective)
        return PlueckerElement{det};
    if (det.is_zero())
        throw error("complementary determinant vanishes at the given point");
    return PlueckerElement{det.content_and_normalize().second};
}

bool incidence_vanishing(const ProblemInstance& P, const Line& line, const OrbitPoint& u) {
    if (line.n() != P.lattice.n())
        throw error("line dimension mismatch");
    if (u.u.size() != static_cast<size_t>(P.lattice.n()))
        throw error("orbit point dimension mismatch");
    BiAdjacency K = build_biadjacency(P.quiver, BiAdjacencyFlavor::Complementary);
    std::map<VarId, Poly> map;
    for (const QuiverEdge& e : P.quiver.edges())
        map.emplace(VarId::z(e.id), Poly(line.minor(e.s, e.t)));
    for (int i = 1; i <= P.lattice.n(); ++i)
        map.emplace(VarId::u(i), Poly(u.u[static_cast<size_t>(i - 1)]));
    PolyMatrix m = K.matrix;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = m.at(r, c).substitute(map);
    return det_poly_matrix(m).is_zero();
}

Poly line_image_equation(const ProblemInstance& P, const Line& line) {
    if (line.n() != P.lattice.n())
        throw error("line dimension mismatch");
    BiAdjacency K = build_biadjacency(P.quiver, BiAdjacencyFlavor::Complementary);
    std::map<VarId, Poly> map;
    for (const QuiverEdge& e : P.quiver.edges())
        map.emplace(VarId::z(e.id), Poly(line.minor(e.s, e.t)));
    PolyMatrix m = K.matrix;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = m.at(r, c).substitute(map);
    Poly det = det_poly_matrix(m);
    if (det.is_zero())
        throw error("line image is identically zero (degenerate line)");
    return det.content_and_normalize().second;
}

AdetResult principal_a_determinant(const ProblemInstance& P) {
    QuotientStructure qs = P.lattice.quotient_structure();
    if (qs.torsion_order != 1)
        throw error("Z^N/L has torsion of order " + qs.torsion_order.get_str() +
                    "; the principal A-determinant identity requires a torsion-free quotient");
    Poly raw = bst_hom(P.lattice, P.quiver,
                       det_biadjacency(P.quiver, BiAdjacencyFlavor::Complementary));
    if (raw.is_zero())
        throw error("B_st image of det K_P^c vanishes identically");
    auto [content, normalized] = raw.content_and_normalize();
    return AdetResult{normalized, content};
}

FacetReport facet_divisibility(const ProblemInstance& P, const std::vector<Poly>& factors) {
    AdetResult adet = principal_a_determinant(P);
    FacetReport rep;
    Poly product(1);
    for (const Poly& f : factors) {
        rep.factors.push_back({f, divide_exact(adet.poly, f)});
        product = product * f;
    }
    rep.product_quotient = divide_exact(adet.poly, product);
    if (rep.product_quotient && !rep.product_quotient->is_zero()) {
        const Poly& qpoly = *rep.product_quotient;
        rep.product_matches_up_to_sign =
            qpoly.term_count() == 1 && qpoly.terms().begin()->first.is_unit() &&
            abs(qpoly.terms().begin()->second) == 1;
    }
    return rep;
}

Poly vertex_coefficient(const ProblemInstance& P, const std::vector<Int>& v) {
    if (v.size() != static_cast<size_t>(P.lattice.n()))
        throw error("exponent vector length differs from N");
    Poly det = det_biadjacency(P.quiver, BiAdjacencyFlavor::Standard);
    return det.coefficient_of(VarKind::U, v);
}

} // namespace chowform
