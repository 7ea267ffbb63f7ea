#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lorq {

// Exact arithmetic everywhere: every verdict in this library is a strict sign
// condition, so floating point never appears on a decision path.
using Rat = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Rat>;

// Parses "p/q" or "p" (arbitrary precision, q > 0 after canonicalization).
// Rejects anything else, in particular decimal or exponent notation.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_to_string(const Rat& r);

std::string vec_to_string(const Vec& v);

inline int sign(const Rat& r) { return sgn(r); }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// Largest integer z with (z - c)^2 <= bound2 and z >= c, i.e. floor(c + sqrt(bound2)).
// Requires bound2 >= 0.
Int floor_plus_sqrt(const Rat& c, const Rat& bound2);
// Smallest integer z with (c - z)^2 <= bound2 and z <= c, i.e. ceil(c - sqrt(bound2)).
Int ceil_minus_sqrt(const Rat& c, const Rat& bound2);

}  // namespace lorq
