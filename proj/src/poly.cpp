#include "chowform/poly.hpp"

#include "chowform/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chowform {

std::string VarId::name() const {
    switch (kind) {
    case VarKind::Z:
        return "z" + std::to_string(a);
    case VarKind::U:
        return "u" + std::to_string(a);
    case VarKind::Y:
        return "y" + std::to_string(a) + "," + std::to_string(b);
    }
    throw error("unreachable variable kind");
}

VarId VarId::from_name(const std::string& s) {
    if (s.size() < 2)
        throw parse_error("malformed variable name: '" + s + "'");
    auto digits = [&](size_t from, size_t to) {
        if (from >= to)
            throw parse_error("malformed variable name: '" + s + "'");
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("malformed variable name: '" + s + "'");
        try {
            return std::stoi(s.substr(from, to - from));
        } catch (const std::exception&) {
            throw parse_error("variable index out of range: '" + s + "'");
        }
    };
    switch (s[0]) {
    case 'z':
        return VarId::z(digits(1, s.size()));
    case 'u':
        return VarId::u(digits(1, s.size()));
    case 'y': {
        size_t comma = s.find(',');
        if (comma == std::string::npos)
            throw parse_error("malformed y-variable name: '" + s + "'");
        return VarId::y(digits(1, comma), digits(comma + 1, s.size()));
    }
    default:
        throw parse_error("unknown variable namespace: '" + s + "'");
    }
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp < 0)
        throw error("negative exponent");
    if (exp > 0)
        m.factors_.push_back({v, exp});
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const VarId& x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto ia = factors_.begin(), ea = factors_.end();
    auto ib = o.factors_.begin(), eb = o.factors_.end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            r.factors_.push_back(*ia++);
        else if (ia == ea || ib->first < ia->first)
            r.factors_.push_back(*ib++);
        else {
            r.factors_.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : factors_)
        if (o.exponent(v) < e)
            return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
    Monomial r;
    auto ia = factors_.begin(), ea = factors_.end();
    auto ib = d.factors_.begin(), eb = d.factors_.end();
    while (ia != ea) {
        if (ib == eb || ia->first < ib->first) {
            r.factors_.push_back(*ia++);
        } else if (ia->first == ib->first) {
            int e = ia->second - ib->second;
            if (e < 0)
                throw error("divide_by: not divisible");
            if (e > 0)
                r.factors_.push_back({ia->first, e});
            ++ia, ++ib;
        } else {
            throw error("divide_by: not divisible");
        }
    }
    if (ib != eb)
        throw error("divide_by: not divisible");
    return r;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        d += e;
    return d;
}

int Monomial::degree_in(VarKind k) const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        if (v.kind == k)
            d += e;
    return d;
}

std::vector<Int> Monomial::exponent_vector(VarKind k, int n) const {
    std::vector<Int> v(static_cast<size_t>(n), Int(0));
    for (const auto& [var, e] : factors_)
        if (var.kind == k) {
            if (var.a < 1 || var.a > n)
                throw error("variable index out of range for exponent vector");
            v[static_cast<size_t>(var.a - 1)] = e;
        }
    return v;
}

Monomial Monomial::part(VarKind k) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first.kind == k)
            r.factors_.push_back(f);
    return r;
}

Monomial Monomial::without(VarKind k) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first.kind != k)
            r.factors_.push_back(f);
    return r;
}

int monomial_order_cmp(const Monomial& a, const Monomial& b) {
    auto ia = a.factors_.rbegin(), ea = a.factors_.rend();
    auto ib = b.factors_.rbegin(), eb = b.factors_.rend();
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first)
            return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second)
            return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != ea)
        return 1; // a still has exponents at lower variables
    if (ib != eb)
        return -1;
    return 0;
}

Poly::Poly(const Rat& c) {
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Poly::Poly(int c) : Poly(Rat(c)) {}

Poly Poly::variable(VarId v, int exp) {
    return term(Rat(1), Monomial::var(v, exp));
}

Poly Poly::term(const Rat& coeff, const Monomial& m) {
    Poly p;
    if (coeff != 0)
        p.terms_.emplace(m, coeff);
    return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Poly& a, const Rat& c) {
    Poly r;
    if (c == 0)
        return r;
    for (const auto& [m, q] : a.terms_)
        r.terms_.emplace(m, q * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0)
        throw error("negative polynomial power");
    Poly r(1);
    for (int i = 0; i < e; ++i)
        r = r * (*this);
    return r;
}

Poly Poly::substitute(const std::map<VarId, Poly>& map) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Poly t{c};
        for (const auto& [v, e] : m.factors()) {
            auto it = map.find(v);
            if (it != map.end())
                t = t * it->second.pow(e);
            else
                t = t * Poly::variable(v, e);
        }
        out += t;
    }
    return out;
}

const std::pair<const Monomial, Rat>& Poly::leading() const {
    if (terms_.empty())
        throw error("leading term of zero polynomial");
    return *terms_.rbegin();
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::coefficient_of(VarKind k, const std::vector<Int>& v) const {
    Poly out;
    int n = static_cast<int>(v.size());
    for (const auto& [m, c] : terms_) {
        if (m.exponent_vector(k, n) == v)
            out.add_term(m.without(k), c);
    }
    return out;
}

int Poly::degree_in(VarKind k) const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree_in(k));
    return d;
}

bool Poly::is_homogeneous_in(VarKind k, int deg) const {
    for (const auto& [m, c] : terms_)
        if (m.degree_in(k) != deg)
            return false;
    return true;
}

std::pair<Rat, Poly> Poly::content_and_normalize() const {
    if (terms_.empty())
        throw error("content of the zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, Int(c.get_num()));
        den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(terms_.begin()->second) < 0)
        content = -content;
    Rat inv = 1 / content;
    Poly normalized;
    for (const auto& [m, c] : terms_)
        normalized.terms_.emplace(m, c * inv);
    return {content, normalized};
}

std::string Poly::to_text() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += ' ';
        out += sgn(c) < 0 ? "- " : "+ ";
        out += to_string(Rat(abs(c)));
        if (!m.is_unit()) {
            out += " *";
            for (const auto& [v, e] : m.factors()) {
                out += ' ';
                out += v.name();
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
    }
    return out;
}

Poly Poly::from_text(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t)
        tok.push_back(t);
    if (tok.empty())
        throw parse_error("empty polynomial text");
    if (tok.size() == 1 && tok[0] == "0")
        return Poly{};
    Poly out;
    size_t i = 0;
    while (i < tok.size()) {
        if (tok[i] != "+" && tok[i] != "-")
            throw parse_error("expected sign at '" + tok[i] + "'");
        bool neg = tok[i] == "-";
        ++i;
        if (i >= tok.size())
            throw parse_error("dangling sign in polynomial text");
        Rat c = rat_from_string(tok[i]);
        ++i;
        Monomial m;
        if (i < tok.size() && tok[i] == "*") {
            ++i;
            bool any = false;
            while (i < tok.size() && tok[i] != "+" && tok[i] != "-") {
                std::string v = tok[i];
                int exp = 1;
                size_t caret = v.find('^');
                if (caret != std::string::npos) {
                    try {
                        exp = std::stoi(v.substr(caret + 1));
                    } catch (const std::exception&) {
                        throw parse_error("malformed exponent in '" + v + "'");
                    }
                    if (exp <= 0)
                        throw parse_error("exponents must be positive in '" + v + "'");
                    v = v.substr(0, caret);
                }
                m = m * Monomial::var(VarId::from_name(v), exp);
                any = true;
                ++i;
            }
            if (!any)
                throw parse_error("'*' not followed by variables");
        }
        out += Poly::term(neg ? Rat(-c) : c, m);
    }
    return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw error("division by the zero polynomial");
    Poly q;
    Poly r = a;
    const auto& [lm_b, lc_b] = b.leading();
    while (!r.is_zero()) {
        const auto& [lm_r, lc_r] = r.leading();
        if (!lm_b.divides(lm_r))
            return std::nullopt;
        Poly t = Poly::term(lc_r / lc_b, lm_r.divide_by(lm_b));
        q += t;
        r -= t * b;
    }
    return q;
}

} // namespace chowform
