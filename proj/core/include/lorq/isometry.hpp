#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorq/polynomial.hpp"
#include "lorq/space.hpp"

namespace lorq {

// Affine map v -> g v + t with g in O(l) preserving the selected cone.
struct AffineIsometry {
    Mat linear;
    Vec translation;

    bool operator==(const AffineIsometry&) const = default;
};

// Throws NotACausalIsometry / DimensionMismatch when the invariants fail:
// g^T gram g = gram exactly, and g maps the cone selector into the future.
void validate_isometry(const QuadraticSpace& space, const AffineIsometry& g);
bool is_causal_isometry(const QuadraticSpace& space, const AffineIsometry& g);

AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b);  // a after b
AffineIsometry inverse_isometry(const AffineIsometry& g);
AffineIsometry identity_isometry(int dim);
Vec apply_isometry(const AffineIsometry& g, const Vec& v);

// Exact kernel of (g - 1).
Subspace fixed_space(const Mat& g);
// Exact column space of (g - 1); asserts dim F_g + dim V_g = n.
Subspace displacement_space(const Mat& g);

// Certificate for a hyperbolic element: a real eigenvalue mu > 0, mu != 1.
// Exact eigenvector when mu is rational, otherwise an isolating interval of
// the squarefree characteristic factor.
struct HyperbolicCertificate {
    bool rational = false;
    Rat mu;
    Vec eigenvector;  // on the cone boundary, future-oriented; set iff rational
    Poly factor;
    Rat lo, hi;  // isolating interval (lo, hi] when not rational
};

struct IsometryClass {
    enum class Tag { Elliptic, Parabolic, Hyperbolic };
    Tag tag = Tag::Parabolic;
    Vec elliptic_fixed_point;  // in Int C, set when Elliptic
    std::optional<HyperbolicCertificate> hyperbolic;
};

std::string to_string(IsometryClass::Tag t);

// Elliptic / parabolic / hyperbolic trichotomy for g in O(l) preserving C.
// Elliptic iff the fixed space meets the open cone; hyperbolic iff there is a
// real eigenvalue off {1, -1}, decided by Sturm root counting on the
// characteristic polynomial with the (x -+ 1) factors removed.
IsometryClass classify_isometry(const QuadraticSpace& space, const Mat& g);

struct GroupGenerators {
    QuadraticSpace space;
    std::vector<AffineIsometry> gens;

    // Validates every generator. Throws on an empty list.
    static GroupGenerators create(QuadraticSpace space, std::vector<AffineIsometry> gens);
};

Subspace common_fixed_space(const GroupGenerators& gg);

struct EllipticityResult {
    bool elliptic = false;
    Vec certificate;  // in F ∩ Int C when elliptic
};
EllipticityResult ellipticity_check(const GroupGenerators& gg);

// The unipotent one-parameter family attached to a null pair (v0, v1):
//   v -> v + l0(v) x - (l(v,x) + l0(v) l(x,x)/2) v0,  l0(v) = l(v, v0),
// for x in N = v0-perp ∩ v1-perp. Homomorphic in x, lands in O(l), fixes v0.
Mat nu_transform(const QuadraticSpace& space, const Vec& v0, const Vec& v1, const Vec& x);

// Minimal positive integer t making t l(v0, v)^2 - l(v, v) positive definite,
// plus that form's Gram matrix. Requires v0 in Int C (future).
struct SemidirectMetric {
    unsigned long t = 0;
    Mat form;
};
SemidirectMetric semidirect_metric(const QuadraticSpace& space, const Vec& v0);

}  // namespace lorq
