#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorq/linalg.hpp"
#include "lorq/rational.hpp"

namespace lorq {

// Univariate polynomial over the rationals, coefficient of x^i at c[i].
// Normalized: no trailing zero coefficients; the zero polynomial has empty c.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rat& r) { return Poly({r}); }
    // (x - r)
    static Poly linear_root(const Rat& r) { return Poly({-r, Rat(1)}); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& leading() const { return c.back(); }

    bool operator==(const Poly&) const = default;
};

Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pmul(const Poly& a, const Poly& b);
Poly pscale(const Rat& s, const Poly& a);
// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> pdivmod(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
// Monic gcd.
Poly pgcd(Poly a, Poly b);
Rat eval(const Poly& p, const Rat& x);
std::string poly_to_string(const Poly& p, const std::string& var = "x");

// Primitive integer form: content removed, leading coefficient positive.
Poly primitive_integer_part(const Poly& p);
// p / gcd(p, p'): same roots, all simple.
Poly squarefree_part(const Poly& p);
// Divides out (x - r)^k; returns k.
int remove_root(Poly& p, const Rat& r);

// Characteristic polynomial det(xI - m), Faddeev-LeVerrier over the rationals.
Poly char_poly(const Mat& m);

// Sturm chain of a squarefree polynomial.
struct SturmChain {
    std::vector<Poly> seq;
};
SturmChain sturm_chain(const Poly& squarefree);
int sign_variations_at(const SturmChain& ch, const Rat& x);
int sign_variations_at_infinity(const SturmChain& ch, bool positive);
// Roots in (lo, hi]; unbounded side when the optional is empty.
int count_real_roots(const SturmChain& ch, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi);
int count_real_roots(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

// 1 + max |a_i / a_n|; all real roots lie in (-B, B).
Rat cauchy_root_bound(const Poly& p);

// All rational roots (each listed once). May skip the divisor search when the
// constant/leading terms are too large to factor at desk scale; such roots are
// then only reachable through isolation intervals.
std::vector<Rat> rational_roots(const Poly& p);

// Disjoint intervals (lo, hi], one simple root each, covering every real root
// of the squarefree polynomial.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& squarefree);

}  // namespace lorq
