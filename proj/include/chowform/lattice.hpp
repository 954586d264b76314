#pragma once

#include "chowform/matrix.hpp"
#include "chowform/rational.hpp"
#include "chowform/report.hpp"

#include <array>
#include <utility>
#include <vector>

namespace chowform {

/// Element of Z^N / L, stored as a raw representative; class equality is
/// decided on demand against the lattice.
struct Weight {
    std::vector<Int> raw;

    bool operator==(const Weight&) const = default;
};

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);

/// Sum of the raw coordinates; constant on classes because the rows of B sum
/// to zero.
Int hbar(const Weight& w);

struct Ray {
    std::array<Int, 2> direction; // primitive
    std::vector<int> columns;     // 1-based column indices on this ray
};

struct Chamber {
    std::array<Int, 2> representative;      // sum of the two bounding primitive rays
    std::vector<std::pair<int, int>> pairs; // L_c, unordered {i,j} with i < j
    std::vector<Int> a0_raw;
};

struct SecondaryFan {
    std::vector<Ray> rays;         // counterclockwise from the positive x-axis
    std::vector<Chamber> chambers; // chamber k lies between rays k and k+1
};

struct QuotientStructure {
    int free_rank;
    std::vector<Int> invariant_factors; // d1 | d2, both >= 1
    Int torsion_order;
};

/// A rational point of the diagonal group: xi_i = t^{w_i} for w in ker B,
/// together with its character value chi = t^{w . a0}.
struct GroupSample {
    std::vector<Rat> xi;
    Rat chi;
};

/// Rank-2 sublattice of Z^N presented by a 2xN integer matrix whose rows form
/// a basis. Rows sum to zero, no column vanishes, N >= 3.
class Lattice {
public:
    /// Names every violated invariant; empty report means from_rows succeeds.
    static ValidationReport validate_rows(const IntMatrix& b);
    static Lattice from_rows(const IntMatrix& b); // throws error listing violations

    int n() const { return n_; }
    const IntMatrix& b() const { return b_; }

    /// det(beta_i, beta_j) for 1-based columns.
    Int beta_det(int i, int j) const;

    const SecondaryFan& fan() const { return fan_; }

    /// L_c for a point c on no ray; exact cone membership tests.
    std::vector<std::pair<int, int>> chamber_pairs(const std::array<Int, 2>& c) const;

    /// Chamber-0 raw vector; all chambers are congruent mod L (verified at
    /// construction). Every chamber's raw vector is available via fan().
    const Weight& a0() const { return a0_; }
    Int hbar_a0() const { return hbar(a0_); }

    /// e_i mod L.
    Weight unit_weight(int i) const;

    /// True iff w1 - w2 lies in the integer row span of B.
    bool weight_class_eq(const Weight& w1, const Weight& w2) const;

    QuotientStructure quotient_structure() const;

    /// N-2 independent integer vectors w with B w = 0.
    std::vector<std::vector<Int>> kernel_basis() const;

    /// xi_i = t^{w_i}; requires B w = 0 and t != 0.
    GroupSample sample_group_element(const std::vector<Int>& w, const Rat& t) const;

private:
    Lattice() = default;
    int n_ = 0;
    IntMatrix b_;
    SecondaryFan fan_;
    Weight a0_;
    size_t pivot_j1_ = 0, pivot_j2_ = 0; // columns with independent (b1j, b2j)

    std::array<Int, 2> column(int j) const; // 1-based
    void build_fan();
};

} // namespace chowform
