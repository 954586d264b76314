#include "chowform/biadjacency.hpp"

#include "chowform/error.hpp"

#include <algorithm>
#include <map>

namespace chowform {

BiAdjacency build_biadjacency(const Quiver& q, BiAdjacencyFlavor flavor) {
    const auto& blacks = q.black_cells();
    const auto& whites = q.white_cells();
    if (blacks.size() != whites.size())
        throw error("bi-adjacency matrix must be square (Condition 1.2)");
    std::map<int, size_t> brow, wcol;
    for (size_t i = 0; i < blacks.size(); ++i)
        brow[blacks[i]] = i;
    for (size_t i = 0; i < whites.size(); ++i)
        wcol[whites[i]] = i;

    PolyMatrix m(blacks.size(), whites.size());
    for (int b : blacks)
        m.row_labels.push_back("b" + std::to_string(b));
    for (int w : whites)
        m.col_labels.push_back("w" + std::to_string(w));

    for (const QuiverEdge& e : q.edges()) {
        if (e.s == e.t)
            throw error("edge " + std::to_string(e.id) + " is a loop; entries undefined");
        Monomial mono = Monomial::var(VarId::z(e.id));
        if (flavor == BiAdjacencyFlavor::Standard) {
            mono = mono * Monomial::var(VarId::u(e.s)) * Monomial::var(VarId::u(e.t));
        } else {
            for (int i = 1; i <= q.n_nodes(); ++i)
                if (i != e.s && i != e.t)
                    mono = mono * Monomial::var(VarId::u(i));
        }
        m.at(brow.at(e.black), wcol.at(e.white)) += Poly::term(Rat(1), mono);
    }
    return {std::move(m), flavor, static_cast<int>(blacks.size())};
}

Poly det_biadjacency(const Quiver& q, BiAdjacencyFlavor flavor) {
    return det_poly_matrix(build_biadjacency(q, flavor).matrix);
}

ValidationReport check_homogeneity(const Lattice& L, const Quiver& q,
                                   const EpsilonAssignment& eps) {
    ValidationReport rep;
    BiAdjacency K = build_biadjacency(q, BiAdjacencyFlavor::Standard);

    // (i) entry-level weights
    const auto& blacks = q.black_cells();
    const auto& whites = q.white_cells();
    for (size_t r = 0; r < blacks.size(); ++r)
        for (size_t c = 0; c < whites.size(); ++c) {
            const Poly& entry = K.matrix.at(r, c);
            Weight expect = weight_sub(eps.black.at(blacks[r]), eps.white.at(whites[c]));
            for (const auto& [m, coeff] : entry.terms()) {
                Weight w{m.exponent_vector(VarKind::U, L.n())};
                if (!L.weight_class_eq(w, expect))
                    rep.add("entry-weight",
                            "entry (b" + std::to_string(blacks[r]) + ", w" +
                                std::to_string(whites[c]) + ") has a u-monomial of class not " +
                                "congruent to eps_b - eps_w");
            }
        }

    // (ii) determinant-level: every u-exponent vector congruent to a0
    Poly det = det_poly_matrix(K.matrix);
    for (const auto& [m, coeff] : det.terms()) {
        Weight w{m.exponent_vector(VarKind::U, L.n())};
        if (!L.weight_class_eq(w, L.a0()))
            rep.add("det-weight", "det K_P has u-exponent vector " +
                                      vector_to_string(w.raw) + " not congruent to a0 mod L");
    }

    // (iii) complement duality: v -> m(1,...,1) - v with identical z-parts
    Poly detc = det_biadjacency(q, BiAdjacencyFlavor::Complementary);
    Poly image;
    int msize = K.size;
    for (const auto& [mono, coeff] : det.terms()) {
        Monomial flipped = mono.part(VarKind::Z);
        auto v = mono.exponent_vector(VarKind::U, L.n());
        for (int i = 1; i <= L.n(); ++i) {
            int e = msize - static_cast<int>(to_long(v[static_cast<size_t>(i - 1)]));
            if (e < 0) {
                rep.add("complement-duality", "u-exponent exceeds matrix size");
                e = 0;
            }
            flipped = flipped * Monomial::var(VarId::u(i), e);
        }
        image += Poly::term(coeff, flipped);
    }
    if (!(image == detc))
        rep.add("complement-duality",
                "det K_P^c is not the exponent-complement image of det K_P");
    return rep;
}

DegreeCheck degree_check(const Lattice& L, const Quiver& q) {
    DegreeCheck out;
    out.n_black = static_cast<int>(q.black_cells().size());
    out.n_white = static_cast<int>(q.white_cells().size());
    out.hbar_a0 = L.hbar_a0();

    Poly det = det_biadjacency(q, BiAdjacencyFlavor::Standard);
    out.deg_z = det.degree_in(VarKind::Z);
    out.deg_u = det.degree_in(VarKind::U);
    out.nu = out.deg_z;

    if (det.is_zero()) {
        out.report.add("zero-determinant", "det K_P vanishes identically");
        return out;
    }
    if (!det.is_homogeneous_in(VarKind::Z, out.deg_z))
        out.report.add("degree", "det K_P is not z-homogeneous");
    if (!det.is_homogeneous_in(VarKind::U, out.deg_u))
        out.report.add("degree", "det K_P is not u-homogeneous");
    if (out.deg_u != 2 * out.deg_z)
        out.report.add("degree", "deg_u det = " + std::to_string(out.deg_u) +
                                     " differs from 2 deg_z det = " +
                                     std::to_string(2 * out.deg_z));
    if (out.n_black != out.deg_z || out.n_white != out.deg_z)
        out.report.add("degree", "cell counts (" + std::to_string(out.n_black) + ", " +
                                     std::to_string(out.n_white) +
                                     ") differ from deg_z det = " + std::to_string(out.deg_z));

    // the hbar identity is certified only when Condition 2 holds
    auto solved = solve_epsilons(L, q);
    if (std::holds_alternative<Infeasibility>(solved)) {
        out.report.add("condition2",
                       "Condition 2 infeasible; refusing to certify the hbar(a0) identity: " +
                           std::get<Infeasibility>(solved).message);
        return out;
    }
    if (out.hbar_a0 != 2 * out.deg_z)
        out.report.add("degree", "hbar(a0) = " + out.hbar_a0.get_str() +
                                     " differs from 2 deg_z det = " +
                                     std::to_string(2 * out.deg_z));
    return out;
}

} // namespace chowform
