#include "lorq/polynomial.hpp"

#include <algorithm>

#include "lorq/errors.hpp"

namespace lorq {

void Poly::normalize() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Poly padd(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return Poly(std::move(c));
}

Poly psub(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return Poly(std::move(c));
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(c));
}

Poly pscale(const Rat& s, const Poly& a) {
    Poly r = a;
    for (auto& e : r.c) e *= s;
    r.normalize();
    return r;
}

std::pair<Poly, Poly> pdivmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree() + 1), Rat(0));
    Rat lead_inv = Rat(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat f = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[static_cast<size_t>(shift) + i] -= f * b.c[i];
        rem.normalize();
    }
    return {Poly(std::move(q)), rem};
}

Poly derivative(const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<Rat> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly pgcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = pdivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return pscale(Rat(1) / a.leading(), a);
}

Rat eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& a = p.c[static_cast<size_t>(i)];
        if (sgn(a) == 0) continue;
        if (!out.empty()) out += sgn(a) > 0 ? " + " : " - ";
        else if (sgn(a) < 0) out += "-";
        Rat mag = abs(a);
        bool unit = mag == 1 && i > 0;
        if (!unit) out += rat_to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly primitive_integer_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1);
    for (const Rat& a : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    Int content(0);
    std::vector<Rat> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        Rat scaled = p.c[i] * Rat(den_lcm);
        Int num = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        c[i] = scaled;
    }
    if (sgn(content) == 0) content = 1;
    Poly out(std::move(c));
    out = pscale(Rat(1) / Rat(content), out);
    if (sgn(out.leading()) < 0) out = pscale(Rat(-1), out);
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() < 1) return p;
    Poly g = pgcd(p, derivative(p));
    if (g.degree() < 1) return p;
    return pdivmod(p, g).first;
}

int remove_root(Poly& p, const Rat& r) {
    int k = 0;
    Poly lin = Poly::linear_root(r);
    while (!p.is_zero() && sgn(eval(p, r)) == 0) {
        p = pdivmod(p, lin).first;
        ++k;
    }
    return k;
}

Poly char_poly(const Mat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("char poly of non-square matrix");
    int n = m.rows;
    std::vector<Rat> c(static_cast<size_t>(n + 1), Rat(0));
    c[static_cast<size_t>(n)] = 1;
    Mat b = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mat ab = mul(m, b);
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += ab.at(i, i);
        Rat ck = -tr / Rat(k);
        c[static_cast<size_t>(n - k)] = ck;
        b = ab;
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    }
    return Poly(std::move(c));
}

SturmChain sturm_chain(const Poly& squarefree) {
    SturmChain ch;
    if (squarefree.is_zero()) return ch;
    ch.seq.push_back(squarefree);
    if (squarefree.degree() >= 1) {
        ch.seq.push_back(derivative(squarefree));
        while (ch.seq.back().degree() >= 1) {
            Poly r = pdivmod(ch.seq[ch.seq.size() - 2], ch.seq.back()).second;
            if (r.is_zero()) break;
            ch.seq.push_back(pscale(Rat(-1), r));
        }
    }
    return ch;
}

namespace {
int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int sign_variations_at(const SturmChain& ch, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(ch.seq.size());
    for (const Poly& p : ch.seq) signs.push_back(sgn(eval(p, x)));
    return variations(signs);
}

int sign_variations_at_infinity(const SturmChain& ch, bool positive) {
    std::vector<int> signs;
    signs.reserve(ch.seq.size());
    for (const Poly& p : ch.seq) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

int count_real_roots(const SturmChain& ch, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi) {
    if (ch.seq.empty()) return 0;
    int vlo = lo ? sign_variations_at(ch, *lo) : sign_variations_at_infinity(ch, false);
    int vhi = hi ? sign_variations_at(ch, *hi) : sign_variations_at_infinity(ch, true);
    return vlo - vhi;
}

int count_real_roots(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw Error("root count of zero polynomial");
    return count_real_roots(sturm_chain(squarefree_part(p)), lo, hi);
}

Rat cauchy_root_bound(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = abs(p.c[static_cast<size_t>(i)] / p.leading());
        if (q > m) m = q;
    }
    return m + 1;
}

namespace {
// Positive divisors of |n|, or nullopt when n is too expensive to factor here.
std::optional<std::vector<Int>> divisors(Int n, unsigned long step_budget) {
    n = abs(n);
    if (sgn(n) == 0) return std::nullopt;
    std::vector<Int> divs{Int(1)};
    Int p(2);
    unsigned long steps = 0;
    while (p * p <= n) {
        if (++steps > step_budget) return std::nullopt;
        if (n % p == 0) {
            size_t base = divs.size();
            Int pk(1);
            while (n % p == 0) {
                n /= p;
                pk *= p;
                for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
            }
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) {
        size_t base = divs.size();
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}
}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
    std::vector<Rat> roots;
    if (p.is_zero() || p.degree() < 1) return roots;
    Poly q = primitive_integer_part(p);
    // Strip x^k so the constant term is nonzero.
    size_t low = 0;
    while (low < q.c.size() && sgn(q.c[low]) == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(low));
    }
    if (q.degree() < 1) return roots;
    auto nums = divisors(q.c.front().get_num(), 200000);
    auto dens = divisors(q.leading().get_num(), 200000);
    if (!nums || !dens) return roots;  // callers fall back to isolation
    for (const Int& pn : *nums)
        for (const Int& qd : *dens)
            for (int s : {1, -1}) {
                Rat cand = Rat(s * pn) / Rat(qd);
                cand.canonicalize();
                if (sgn(eval(q, cand)) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& squarefree) {
    std::vector<std::pair<Rat, Rat>> out;
    if (squarefree.is_zero() || squarefree.degree() < 1) return out;
    SturmChain ch = sturm_chain(squarefree);
    Rat bound = cauchy_root_bound(squarefree);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    int total = count_real_roots(ch, Rat(-bound), bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        // A midpoint hit still splits cleanly: land it in the left-open side.
        int left = count_real_roots(ch, s.lo, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace lorq
