#include "chowform/rational.hpp"

#include "chowform/error.hpp"

namespace chowform {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

Int int_from_string(const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0)
        throw parse_error("malformed integer literal: '" + s + "'");
    return z;
}

Rat rat_pow(const Rat& t, long e) {
    if (e == 0)
        return Rat(1);
    if (t == 0 && e < 0)
        throw error("negative power of zero");
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), t.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), t.get_den().get_mpz_t(), a);
    Rat r;
    if (e > 0)
        r = Rat(num, den);
    else
        r = Rat(den, num);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) {
    return v.get_str();
}

std::string to_string(const Rat& v) {
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw error("integer too large for index context: " + v.get_str());
    return v.get_si();
}

std::string vector_to_string(const std::vector<Int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].get_str();
    }
    out += ")";
    return out;
}

} // namespace chowform
