#include "chowform/lattice.hpp"

#include "chowform/error.hpp"

#include <algorithm>
#include <map>

namespace chowform {

Weight weight_add(const Weight& a, const Weight& b) {
    if (a.raw.size() != b.raw.size())
        throw error("weight length mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.raw.size(); ++i)
        r.raw[i] += b.raw[i];
    return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
    if (a.raw.size() != b.raw.size())
        throw error("weight length mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.raw.size(); ++i)
        r.raw[i] -= b.raw[i];
    return r;
}

Int hbar(const Weight& w) {
    Int s = 0;
    for (const Int& x : w.raw)
        s += x;
    return s;
}

namespace {

Int cross(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

Int dot(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

// 0 for the closed upper half starting at the positive x-axis, 1 below.
int angular_half(const std::array<Int, 2>& p) {
    if (p[1] > 0 || (p[1] == 0 && p[0] > 0))
        return 0;
    return 1;
}

// counterclockwise from the positive x-axis, no floating point
bool angular_less(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

std::array<Int, 2> primitive(const std::array<Int, 2>& v) {
    Int g = gcd(v[0], v[1]);
    if (g == 0)
        throw error("primitive direction of the zero vector");
    return {v[0] / g, v[1] / g};
}

} // namespace

std::array<Int, 2> Lattice::column(int j) const {
    return {b_.at(0, static_cast<size_t>(j - 1)), b_.at(1, static_cast<size_t>(j - 1))};
}

ValidationReport Lattice::validate_rows(const IntMatrix& b) {
    ValidationReport rep;
    if (b.rows() != 2) {
        rep.add("shape", "expected exactly 2 rows, got " + std::to_string(b.rows()));
        return rep;
    }
    size_t n = b.cols();
    if (n < 3)
        rep.add("too-few-columns", "N must be at least 3, got " + std::to_string(n));
    for (size_t r = 0; r < 2; ++r) {
        Int s = 0;
        for (size_t j = 0; j < n; ++j)
            s += b.at(r, j);
        if (s != 0)
            rep.add("row-sum", "row " + std::to_string(r + 1) + " sums to " + s.get_str() +
                                    ", must be 0 (L must lie in ker h)");
    }
    for (size_t j = 0; j < n; ++j)
        if (b.at(0, j) == 0 && b.at(1, j) == 0)
            rep.add("zero-column", "column " + std::to_string(j + 1) + " is the zero vector");
    bool rank2 = false;
    for (size_t i = 0; i < n && !rank2; ++i)
        for (size_t j = i + 1; j < n && !rank2; ++j)
            if (b.at(0, i) * b.at(1, j) - b.at(1, i) * b.at(0, j) != 0)
                rank2 = true;
    if (!rank2)
        rep.add("rank", "rows do not span a rank-2 lattice");
    return rep;
}

Lattice Lattice::from_rows(const IntMatrix& b) {
    ValidationReport rep = validate_rows(b);
    if (!rep.ok())
        throw error("invalid lattice:\n" + rep.to_text());
    Lattice L;
    L.b_ = b;
    L.n_ = static_cast<int>(b.cols());
    for (size_t i = 0; i < b.cols(); ++i) {
        bool found = false;
        for (size_t j = i + 1; j < b.cols(); ++j)
            if (b.at(0, i) * b.at(1, j) - b.at(1, i) * b.at(0, j) != 0) {
                L.pivot_j1_ = i;
                L.pivot_j2_ = j;
                found = true;
                break;
            }
        if (found)
            break;
    }
    L.build_fan();
    return L;
}

Int Lattice::beta_det(int i, int j) const {
    return cross(column(i), column(j));
}

void Lattice::build_fan() {
    std::vector<std::pair<std::array<Int, 2>, int>> dirs;
    for (int j = 1; j <= n_; ++j)
        dirs.push_back({primitive(column(j)), j});
    std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return angular_less(a.first, b.first);
        return a.second < b.second;
    });
    for (const auto& [dir, col] : dirs) {
        if (!fan_.rays.empty() && fan_.rays.back().direction == dir)
            fan_.rays.back().columns.push_back(col);
        else
            fan_.rays.push_back({dir, {col}});
    }

    size_t nrays = fan_.rays.size();
    std::vector<Int> reference; // chamber-0 raw vector, the stored a0 representative
    for (size_t k = 0; k < nrays; ++k) {
        const auto& d1 = fan_.rays[k].direction;
        const auto& d2 = fan_.rays[(k + 1) % nrays].direction;
        Chamber ch;
        ch.representative = {d1[0] + d2[0], d1[1] + d2[1]};
        ch.pairs = chamber_pairs(ch.representative);
        std::vector<Int> raw(static_cast<size_t>(n_), Int(0));
        for (const auto& [i, j] : ch.pairs) {
            Int w = abs(beta_det(i, j));
            raw[static_cast<size_t>(i - 1)] += w;
            raw[static_cast<size_t>(j - 1)] += w;
        }
        ch.a0_raw = raw;
        fan_.chambers.push_back(std::move(ch));
    }

    a0_ = Weight{fan_.chambers.front().a0_raw};
    for (const auto& ch : fan_.chambers)
        if (!weight_class_eq(Weight{ch.a0_raw}, a0_))
            throw error("a0 chamber vectors are not congruent mod L (internal error)");
}

std::vector<std::pair<int, int>> Lattice::chamber_pairs(const std::array<Int, 2>& c) const {
    if (c[0] == 0 && c[1] == 0)
        throw error("chamber point must be nonzero");
    for (int j = 1; j <= n_; ++j) {
        auto beta = column(j);
        if (cross(c, beta) == 0 && dot(c, beta) > 0)
            throw error("chamber point lies on the ray of column " + std::to_string(j));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            auto bi = column(i), bj = column(j);
            Int d = cross(bi, bj);
            if (d == 0)
                continue;
            // c = alpha beta_i + beta beta_j with alpha, beta >= 0, via sign tests
            Int alpha_num = cross(c, bj);
            Int beta_num = cross(bi, c);
            if (alpha_num * d >= 0 && beta_num * d >= 0)
                pairs.push_back({i, j});
        }
    return pairs;
}

Weight Lattice::unit_weight(int i) const {
    if (i < 1 || i > n_)
        throw error("node index out of range");
    std::vector<Int> raw(static_cast<size_t>(n_), Int(0));
    raw[static_cast<size_t>(i - 1)] = 1;
    return Weight{raw};
}

bool Lattice::weight_class_eq(const Weight& w1, const Weight& w2) const {
    if (w1.raw.size() != static_cast<size_t>(n_) || w2.raw.size() != static_cast<size_t>(n_))
        throw error("weight length mismatch");
    std::vector<Int> d(static_cast<size_t>(n_));
    for (size_t i = 0; i < d.size(); ++i)
        d[i] = w1.raw[i] - w2.raw[i];
    // solve x1 row1 + x2 row2 = d on the pivot columns, then verify everywhere
    const Int& a11 = b_.at(0, pivot_j1_);
    const Int& a21 = b_.at(1, pivot_j1_);
    const Int& a12 = b_.at(0, pivot_j2_);
    const Int& a22 = b_.at(1, pivot_j2_);
    Int delta = a11 * a22 - a21 * a12;
    Int x1_num = d[pivot_j1_] * a22 - a21 * d[pivot_j2_];
    Int x2_num = a11 * d[pivot_j2_] - d[pivot_j1_] * a12;
    if (x1_num % delta != 0 || x2_num % delta != 0)
        return false;
    Int x1 = x1_num / delta, x2 = x2_num / delta;
    for (size_t j = 0; j < static_cast<size_t>(n_); ++j)
        if (x1 * b_.at(0, j) + x2 * b_.at(1, j) != d[j])
            return false;
    return true;
}

QuotientStructure Lattice::quotient_structure() const {
    SmithDecomposition snf = smith_normal_form(b_);
    QuotientStructure q;
    q.free_rank = n_ - 2;
    q.invariant_factors = {snf.d.at(0, 0), snf.d.at(1, 1)};
    q.torsion_order = q.invariant_factors[0] * q.invariant_factors[1];
    if (q.torsion_order == 0)
        throw error("rank-deficient lattice presentation (internal error)");
    return q;
}

std::vector<std::vector<Int>> Lattice::kernel_basis() const {
    auto basis = integer_kernel(b_);
    for (const auto& w : basis)
        for (size_t r = 0; r < 2; ++r) {
            Int s = 0;
            for (size_t j = 0; j < w.size(); ++j)
                s += b_.at(r, j) * w[j];
            if (s != 0)
                throw error("kernel basis verification failed (internal error)");
        }
    return basis;
}

GroupSample Lattice::sample_group_element(const std::vector<Int>& w, const Rat& t) const {
    if (t == 0)
        throw error("group sample parameter t must be nonzero");
    if (w.size() != static_cast<size_t>(n_))
        throw error("kernel vector length mismatch");
    for (size_t r = 0; r < 2; ++r) {
        Int s = 0;
        for (size_t j = 0; j < w.size(); ++j)
            s += b_.at(r, j) * w[j];
        if (s != 0)
            throw error("vector is not in the kernel of B");
    }
    GroupSample g;
    Int chi_exp = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        g.xi.push_back(rat_pow(t, to_long(w[i])));
        chi_exp += w[i] * a0_.raw[i];
    }
    g.chi = rat_pow(t, to_long(chi_exp));
    return g;
}

} // namespace chowform
