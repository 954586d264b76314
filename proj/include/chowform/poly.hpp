#pragma once

#include "chowform/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chowform {

// Variable namespaces: z_e for quiver edges, u_i for nodes, y_{r,j} for the
// 2xN matrix entries behind the Pluecker minors.
enum class VarKind : std::uint8_t { Z = 0, U = 1, Y = 2 };

struct VarId {
    VarKind kind;
    int a; // Z: edge id, U: node index, Y: row (1 or 2)
    int b; // Y: column, 0 otherwise

    static VarId z(int e) { return {VarKind::Z, e, 0}; }
    static VarId u(int i) { return {VarKind::U, i, 0}; }
    static VarId y(int r, int j) { return {VarKind::Y, r, j}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const; // "z3", "u1", "y1,2"
    static VarId from_name(const std::string& s);
};

/// Product of variables with positive exponents, stored sparsely in
/// ascending variable order.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }
    int exponent(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / d; requires d.divides(*this).
    Monomial divide_by(const Monomial& d) const;

    int total_degree() const;
    int degree_in(VarKind k) const;
    /// Exponent vector over u_1..u_n (or the kind's index range 1..n).
    std::vector<Int> exponent_vector(VarKind k, int n) const;
    /// The sub-monomial on one namespace / its complement.
    Monomial part(VarKind k) const;
    Monomial without(VarKind k) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
    friend int monomial_order_cmp(const Monomial&, const Monomial&);
};

/// Total order on monomials: compare exponent vectors from the largest
/// variable down (z1 < ... < zE < u1 < ... < uN < y1,1 < ... < y2,N); at the
/// most significant differing variable the larger exponent wins. The unit
/// monomial is minimal. This order is the serialization contract.
int monomial_order_cmp(const Monomial& a, const Monomial& b);

struct MonomialOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_order_cmp(a, b) < 0;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariants: no zero coefficients stored; terms keyed by monomial order.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrderLess>;

    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(int c);
    static Poly variable(VarId v, int exp = 1);
    static Poly term(const Rat& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Poly& a, const Rat& c);
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    bool operator==(const Poly&) const = default;

    Poly pow(int e) const; // e >= 0

    /// Ring-homomorphic substitution; variables absent from the map pass through.
    Poly substitute(const std::map<VarId, Poly>& map) const;

    /// Largest term under the monomial order. Requires nonzero.
    const std::pair<const Monomial, Rat>& leading() const;

    Rat coefficient(const Monomial& m) const;
    /// Coefficient of the given exponent vector in namespace k: collects the
    /// terms whose k-part matches and strips it. v is indexed 1..n.
    Poly coefficient_of(VarKind k, const std::vector<Int>& v) const;

    int degree_in(VarKind k) const; // max over terms; -1 for the zero polynomial
    bool is_homogeneous_in(VarKind k, int deg) const;

    /// (content, normalized): integer coprime coefficients, least term
    /// positive, content * normalized == *this. Throws on zero.
    std::pair<Rat, Poly> content_and_normalize() const;

    /// Canonical text, terms ascending: "+ 1 * z1 u2^2 ..." / "0".
    std::string to_text() const;
    /// Parses the canonical text format (term order need not be canonical).
    static Poly from_text(const std::string& s);

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rat& c);
};

/// Exact multivariate division: returns q with a == b*q, or nullopt when not
/// divisible. b must be nonzero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

} // namespace chowform
