#pragma once

#include "chowform/compat.hpp"
#include "chowform/lattice.hpp"
#include "chowform/matrix.hpp"
#include "chowform/quiver.hpp"

namespace chowform {

enum class BiAdjacencyFlavor { Standard, Complementary };

/// Square matrix over Z[z,u] with rows labeled by black cells and columns by
/// white cells. Standard (b,w)-entry: sum of z_e u_{s(e)} u_{t(e)} over shared
/// edges; complementary entry: z_e times the product of all other u_i.
struct BiAdjacency {
    PolyMatrix matrix;
    BiAdjacencyFlavor flavor;
    int size;
};

BiAdjacency build_biadjacency(const Quiver& q, BiAdjacencyFlavor flavor);

Poly det_biadjacency(const Quiver& q, BiAdjacencyFlavor flavor);

/// Homogeneity checks: (i) every u-monomial of entry (b,w) has class
/// eps_b - eps_w; (ii) every u-exponent vector of the determinant is
/// congruent to a0 mod L; (iii) the complementary determinant's monomials are
/// the v -> m(1,..,1) - v image of the standard one's, with identical z-parts
/// and coefficients.
ValidationReport check_homogeneity(const Lattice& L, const Quiver& q,
                                   const EpsilonAssignment& eps);

struct DegreeCheck {
    ValidationReport report;
    int deg_z = -1;
    int deg_u = -1;
    int n_black = 0;
    int n_white = 0;
    Int hbar_a0;
    int nu = -1; // deg_z of the determinant
};

/// deg_z det = (1/2) deg_u det = #black = #white = (1/2) hbar(a0). Refuses to
/// certify the hbar identity when Condition 2 fails.
DegreeCheck degree_check(const Lattice& L, const Quiver& q);

} // namespace chowform
