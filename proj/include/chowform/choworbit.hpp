#pragma once

#include "chowform/biadjacency.hpp"
#include "chowform/compat.hpp"
#include "chowform/grassmann.hpp"
#include "chowform/lattice.hpp"
#include "chowform/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chowform {

/// Validated problem data: Conditions 1 and 2 hold, the degree identities
/// check out, and nu = #black cells = (1/2) hbar(a0).
struct ProblemInstance {
    Lattice lattice;
    Quiver quiver;
    EpsilonAssignment eps;
    int nu;
};

/// Runs the validation pipeline; uses the supplied epsilons when given
/// (verifying them), otherwise solves for an assignment. Throws error with
/// the full report on any failure.
ProblemInstance make_instance(const Lattice& L, const Quiver& q,
                              const std::optional<EpsilonAssignment>& supplied = std::nullopt);

/// Point of the open torus orbit slice: all coordinates nonzero.
struct OrbitPoint {
    std::vector<Rat> u;

    static OrbitPoint of(std::vector<Rat> u); // throws when a coordinate is 0
};

/// det K_P(z, u0): the affine orbit invariant, homogeneous of degree nu in z.
Poly affine_orbit_invariant(const ProblemInstance& P, const OrbitPoint& u);

/// The same modulo C*: content-normalized. Throws on a vanishing determinant.
Poly projective_orbit_invariant(const ProblemInstance& P, const OrbitPoint& u);

/// det K_P^c(y(z), u0), normalized: a Chow form of the orbit closure of u0.
PlueckerElement chow_form(const ProblemInstance& P, const OrbitPoint& u);

/// The Chow-quotient embedding maps: same pipeline, normalization optional.
PlueckerElement chow_map_point(const ProblemInstance& P, const OrbitPoint& u, bool projective);

/// True iff det K_P^c with z_e -> Y_{s(e)t(e)}(line) and u evaluated is
/// exactly zero; guaranteed whenever [u] lies on the line.
bool incidence_vanishing(const ProblemInstance& P, const Line& line, const OrbitPoint& u);

/// det K_P^c(y(z), u) with y evaluated at the line and u left symbolic,
/// normalized: the equation of the line's image in the Chow quotient.
/// Throws on an identically-zero result (degenerate line).
Poly line_image_equation(const ProblemInstance& P, const Line& line);

struct AdetResult {
    Poly poly;   // normalized: integer coprime coefficients, least term positive
    Rat content; // raw B_st image = content * poly; the theorem's global sign
                 // is unresolved, so only |content|'s sign convention is ours
};

/// B_st(det K_P^c(z,u)). Requires Z^N/L torsion-free (the theorem's hypothesis).
AdetResult principal_a_determinant(const ProblemInstance& P);

struct FacetReport {
    struct Item {
        Poly factor;
        std::optional<Poly> quotient; // nullopt: does not divide
    };
    std::vector<Item> factors;
    std::optional<Poly> product_quotient; // E_A / (product of all factors)
    bool product_matches_up_to_sign = false;
};

/// Exact-division tests of the principal A-determinant by each supplied
/// factor and by their product.
FacetReport facet_divisibility(const ProblemInstance& P, const std::vector<Poly>& factors);

/// Coefficient of u^v in det K_P(z,u); the zero polynomial when absent.
Poly vertex_coefficient(const ProblemInstance& P, const std::vector<Int>& v);

} // namespace chowform
