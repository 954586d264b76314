#pragma once

#include "chowform/lattice.hpp"
#include "chowform/matrix.hpp"
#include "chowform/poly.hpp"
#include "chowform/quiver.hpp"

#include <map>
#include <utility>
#include <vector>

namespace chowform {

/// Element of the Pluecker coordinate ring represented by its expansion in
/// the 2xN matrix-entry variables y_{r,j} (the minor-substitution map is an
/// injective ring homomorphism, so equality of representatives decides
/// equality in the ring). May also carry u variables.
struct PlueckerElement {
    Poly p;

    bool operator==(const PlueckerElement&) const = default;
};

/// Y_km = y_{1k} y_{2m} - y_{2k} y_{1m}, expanded. Antisymmetric; zero for k == m.
Poly pluecker_var(int k, int m);

/// True iff U_ij U_km + U_ik U_mj + U_im U_jk expands to zero under the minor
/// substitution (the three-term relation generating the Pluecker ideal).
bool pluecker_relation_check(int i, int j, int k, int m);

/// z_e -> Y_{s(e) t(e)}; u variables pass through. Throws on z-variables
/// that are not edges of the quiver.
PlueckerElement y_substitution(const Quiver& q, const Poly& p);

/// A line in P^{N-1}: a rank-2 2xN rational matrix (a chosen representative
/// of its GL(2)-orbit).
class Line {
public:
    explicit Line(RatMatrix y); // throws when not 2xN of rank 2
    int n() const { return static_cast<int>(y_.cols()); }
    const RatMatrix& y() const { return y_; }
    /// Pluecker coordinate Y_km of this representative.
    Rat minor(int k, int m) const;

private:
    RatMatrix y_;
};

/// Line through two linearly independent rational points.
Line line_through(const std::vector<Rat>& u, const std::vector<Rat>& v);

/// All N(N-1)/2 minors with k < m.
std::map<std::pair<int, int>, Rat> pluecker_coords(const Line& line);

/// True iff every 3x3 minor of (row1; row2; u) vanishes.
bool point_on_line(const Line& line, const std::vector<Rat>& u);

/// z_e -> b_{1 s(e)} b_{2 t(e)} - b_{1 t(e)} b_{2 s(e)}, i.e. evaluation of
/// the Pluecker variables at the lattice's Grassmannian point.
Poly bst_hom(const Lattice& L, const Quiver& q, const Poly& p);

/// Substitutes the y variables by the entries of the line's matrix.
Poly eval_pluecker_at(const PlueckerElement& pe, const Line& line);
/// Same at the lattice point (the rows of B).
Poly eval_pluecker_at(const PlueckerElement& pe, const Lattice& L);

} // namespace chowform
