#include "lorq/rational.hpp"

#include "lorq/errors.hpp"

namespace lorq {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    size_t i = 0;
    auto digits = [&](size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t k = from; k < to; ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(i, s.size());
    } else {
        ok = digits(i, slash) && slash + 1 < s.size() && digits(slash + 1, s.size());
    }
    if (!ok) throw ParseError("bad rational literal '" + s + "'");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string vec_to_string(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int isqrt_floor(const Int& n) {
    if (sgn(n) < 0) throw Error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_plus_sqrt(const Rat& c, const Rat& bound2) {
    if (sgn(bound2) < 0) throw Error("negative radicand");
    // Start past the true value, then walk down; the overshoot is at most 2.
    Int z = floor_rat(c) + isqrt_floor(ceil_rat(bound2)) + 2;
    auto above = [&](const Int& zz) {
        Rat d = Rat(zz) - c;
        return sgn(d) > 0 && d * d > bound2;
    };
    while (above(z)) --z;
    return z;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& bound2) {
    return -floor_plus_sqrt(-c, bound2);
}

}  // namespace lorq
