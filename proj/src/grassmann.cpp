#include "chowform/grassmann.hpp"

#include "chowform/error.hpp"

#include <functional>

namespace chowform {

Poly pluecker_var(int k, int m) {
    if (k < 1 || m < 1)
        throw error("Pluecker indices must be positive");
    return Poly::variable(VarId::y(1, k)) * Poly::variable(VarId::y(2, m)) -
           Poly::variable(VarId::y(2, k)) * Poly::variable(VarId::y(1, m));
}

bool pluecker_relation_check(int i, int j, int k, int m) {
    Poly rel = pluecker_var(i, j) * pluecker_var(k, m) +
               pluecker_var(i, k) * pluecker_var(m, j) +
               pluecker_var(i, m) * pluecker_var(j, k);
    return rel.is_zero();
}

PlueckerElement y_substitution(const Quiver& q, const Poly& p) {
    std::map<VarId, Poly> map;
    for (const auto& [mono, coeff] : p.terms())
        for (const auto& [v, e] : mono.factors())
            if (v.kind == VarKind::Z && !map.count(v)) {
                const QuiverEdge& edge = q.edge(v.a); // throws on unknown edge
                map.emplace(v, pluecker_var(edge.s, edge.t));
            }
    return PlueckerElement{p.substitute(map)};
}

Line::Line(RatMatrix y) : y_(std::move(y)) {
    if (y_.rows() != 2 || y_.cols() < 2)
        throw error("a line needs a 2xN matrix with N >= 2");
    bool rank2 = false;
    for (size_t i = 0; i < y_.cols() && !rank2; ++i)
        for (size_t j = i + 1; j < y_.cols() && !rank2; ++j)
            if (y_.at(0, i) * y_.at(1, j) - y_.at(1, i) * y_.at(0, j) != 0)
                rank2 = true;
    if (!rank2)
        throw error("line matrix has rank < 2");
}

Rat Line::minor(int k, int m) const {
    if (k < 1 || k > n() || m < 1 || m > n())
        throw error("Pluecker index out of range");
    size_t a = static_cast<size_t>(k - 1), b = static_cast<size_t>(m - 1);
    return y_.at(0, a) * y_.at(1, b) - y_.at(1, a) * y_.at(0, b);
}

Line line_through(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    if (u.size() != v.size() || u.size() < 2)
        throw error("points must share a dimension >= 2");
    RatMatrix m(2, u.size());
    for (size_t j = 0; j < u.size(); ++j) {
        m.at(0, j) = u[j];
        m.at(1, j) = v[j];
    }
    try {
        return Line(m);
    } catch (const error&) {
        throw error("points are linearly dependent; they span no line");
    }
}

std::map<std::pair<int, int>, Rat> pluecker_coords(const Line& line) {
    std::map<std::pair<int, int>, Rat> out;
    for (int k = 1; k <= line.n(); ++k)
        for (int m = k + 1; m <= line.n(); ++m)
            out[{k, m}] = line.minor(k, m);
    return out;
}

bool point_on_line(const Line& line, const std::vector<Rat>& u) {
    if (u.size() != static_cast<size_t>(line.n()))
        throw error("point dimension mismatch");
    bool nonzero = false;
    for (const Rat& x : u)
        if (x != 0)
            nonzero = true;
    if (!nonzero)
        throw error("the zero tuple is not a projective point");
    // rank (row1; row2; u) <= 2 iff all 3x3 minors vanish
    for (int a = 1; a <= line.n(); ++a)
        for (int b = a + 1; b <= line.n(); ++b)
            for (int c = b + 1; c <= line.n(); ++c) {
                RatMatrix m(3, 3);
                int cols[3] = {a, b, c};
                for (int j = 0; j < 3; ++j) {
                    size_t col = static_cast<size_t>(cols[j] - 1);
                    m.at(0, static_cast<size_t>(j)) = line.y().at(0, col);
                    m.at(1, static_cast<size_t>(j)) = line.y().at(1, col);
                    m.at(2, static_cast<size_t>(j)) = u[col];
                }
                if (det_rat(m) != 0)
                    return false;
            }
    return true;
}

Poly bst_hom(const Lattice& L, const Quiver& q, const Poly& p) {
    std::map<VarId, Poly> map;
    for (const auto& [mono, coeff] : p.terms())
        for (const auto& [v, e] : mono.factors())
            if (v.kind == VarKind::Z && !map.count(v)) {
                const QuiverEdge& edge = q.edge(v.a);
                map.emplace(v, Poly(Rat(L.beta_det(edge.s, edge.t))));
            }
    return p.substitute(map);
}

namespace {

Poly eval_y_vars(const Poly& p, const std::function<Rat(int, int)>& entry, int n) {
    std::map<VarId, Poly> map;
    for (const auto& [mono, coeff] : p.terms())
        for (const auto& [v, e] : mono.factors())
            if (v.kind == VarKind::Y && !map.count(v)) {
                if (v.a < 1 || v.a > 2 || v.b < 1 || v.b > n)
                    throw error("y-variable " + v.name() + " out of range for evaluation");
                map.emplace(v, Poly(entry(v.a, v.b)));
            }
    return p.substitute(map);
}

} // namespace

Poly eval_pluecker_at(const PlueckerElement& pe, const Line& line) {
    return eval_y_vars(
        pe.p,
        [&](int r, int j) {
            return line.y().at(static_cast<size_t>(r - 1), static_cast<size_t>(j - 1));
        },
        line.n());
}

Poly eval_pluecker_at(const PlueckerElement& pe, const Lattice& L) {
    return eval_y_vars(
        pe.p,
        [&](int r, int j) {
            return Rat(L.b().at(static_cast<size_t>(r - 1), static_cast<size_t>(j - 1)));
        },
        L.n());
}

} // namespace chowform
