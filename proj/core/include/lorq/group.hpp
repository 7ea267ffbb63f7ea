#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorq/isometry.hpp"
#include "lorq/polynomial.hpp"
#include "lorq/space.hpp"

namespace lorq {

// Uniform lattice of spacelike translations.
struct TypeISpec {
    QuadraticSpace space;
    std::vector<Vec> lattice_basis;
};

// Unipotent family: null pair (v0, v1), lattice basis of T inside
// N = v0-perp ∩ v1-perp, and a form-symmetric map a : T -> N given by the
// ambient images of the lattice basis vectors.
struct TypeIISpec {
    QuadraticSpace space;
    Vec v0, v1;
    std::vector<Vec> lattice_basis;
    std::vector<Vec> a_images;  // a(b_i), one per lattice basis vector

    int rank() const { return static_cast<int>(lattice_basis.size()); }
    Rat level(const Vec& v) const { return space.eval(v, v0); }  // l0
    // x = sum coords_i b_i and a(x), for rational coordinates.
    Vec lattice_point(const Vec& coords) const;
    Vec apply_a(const Vec& coords) const;
};

// Empty result means valid; each entry names one violated equation.
std::vector<std::string> validate_type_i(const TypeISpec& spec);
std::vector<std::string> validate_type_ii(const TypeIISpec& spec);

// a = a' + a'' with a' : T -> T self-adjoint for the restricted form and the
// image of a'' orthogonal to T.
struct ASplit {
    Mat a_prime;                      // k x k on the lattice basis
    std::vector<Vec> a_dprime_images; // ambient images per basis vector
};
ASplit split_a(const TypeIISpec& spec);

// Failure certificate for the freeness condition ker(1 + t a) = 0 (all real t):
// an eigenvalue s of a' with eigenvector in ker(a''), t = -1/s.
struct FreenessWitness {
    bool rational_t = false;
    Rat t;        // set when rational
    Vec x;        // ambient vector with (1 + t a)x = 0, set when rational
    Poly factor;  // squarefree factor of the minor gcd carrying s
    Rat s_lo, s_hi;  // isolating interval (s_lo, s_hi] for irrational s
    Rat t_lo, t_hi;  // corresponding interval for t = -1/s
};

struct FreenessReport {
    bool free = false;
    std::optional<FreenessWitness> witness;
    Poly minor_gcd;  // gcd over Q[s] of the maximal minors of [a'-s ; a'']
};

// Decides freeness exactly: stack (a' - s) over the a''-constraints, take the
// gcd of all maximal minors in Q[s], and count nonzero real roots by Sturm
// sequences. Eigenvalues of a' are real (self-adjoint for a definite form), so
// every root of the gcd is a genuine failure value.
FreenessReport freeness_check(const TypeIISpec& spec);

// One generator per lattice basis vector. TypeII generators follow
//   linear(x) = nu(a x),  translation(x) = x - l(a x, x)/2 v0.
GroupGenerators build_group(const TypeISpec& spec);
GroupGenerators build_group(const TypeIISpec& spec, bool allow_non_free = false);

// gamma_x for x = sum coeffs_i b_i, computed directly from the closed
// formulas, never by multiplying generators.
AffineIsometry group_element(const TypeIISpec& spec, const std::vector<Int>& coeffs);
// Same map for rational coordinates (the ambient vector group action).
AffineIsometry group_element_continuous(const TypeIISpec& spec, const Vec& coords);

// Canonical orbit representative: the unique point of the T-orbit of v on the
// section S_t = ((1 + t a)T)-perp ∩ { l0 = t }, t = l0(v).
struct OrbitRep {
    Vec rep;
    Vec t_coords;  // the x in T (lattice coordinates) with gamma_x(v) = rep
};
OrbitRep orbit_representative(const TypeIISpec& spec, const Vec& v);

}  // namespace lorq
