#pragma once

#include <string>
#include <vector>

#include "lorq/linalg.hpp"
#include "lorq/rational.hpp"

namespace lorq {

// Ambient Lorentzian space: a symmetric form of signature (+, -, ..., -) plus
// a fixed timelike selector vector that picks one of the two cones as the
// future cone C. Every Future/Past label in this library is relative to that
// selector; the geometry itself does not prefer either cone.
struct QuadraticSpace {
    int dim = 0;
    Mat gram;
    Vec cone_selector;

    // Validates symmetry, exact signature (1, 0, dim-1), and that the
    // selector is timelike. Throws SpecInvalid otherwise.
    static QuadraticSpace create(Mat gram, Vec cone_selector);

    Rat eval(const Vec& u, const Vec& v) const;  // u^T gram v, exact
    Rat norm(const Vec& v) const { return eval(v, v); }
};

enum class ConeClass { InteriorFuture, BoundaryFuture, InteriorPast, BoundaryPast, Spacelike, Zero };

std::string to_string(ConeClass c);

ConeClass cone_classify(const QuadraticSpace& space, const Vec& v);

inline bool is_future(ConeClass c) {
    return c == ConeClass::InteriorFuture || c == ConeClass::BoundaryFuture;
}
inline bool is_past(ConeClass c) {
    return c == ConeClass::InteriorPast || c == ConeClass::BoundaryPast;
}

// Linear subspace given by an independent basis (possibly empty).
struct Subspace {
    std::vector<Vec> basis;

    // Verifies exact linear independence.
    static Subspace from(std::vector<Vec> vectors);
    // Drops dependent vectors instead of rejecting them.
    static Subspace spanning(const std::vector<Vec>& vectors);

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const { return in_span(basis, v); }
};

Signature restricted_signature(const QuadraticSpace& space, const Subspace& sub);
bool is_spacelike(const QuadraticSpace& space, const Subspace& sub);
Subspace ortho_complement(const QuadraticSpace& space, const Subspace& sub);

// A vector of the subspace with positive form value, if one exists.
std::optional<Vec> positive_direction(const QuadraticSpace& space, const Subspace& sub);

// sup { l(w + b, w + b) : w in span(sub) }, decided exactly.
struct SupremumVerdict {
    enum class Kind { Attained, Unbounded };
    Kind kind = Kind::Attained;
    Rat value;      // attained supremum
    Vec argmax;     // a maximizer w* (canonical: free parameters zero)
    Vec direction;  // unbounded certificate: l(d,d) > 0, or null with nonzero linear term

    bool attained_negative() const { return kind == Kind::Attained && sgn(value) < 0; }
};

SupremumVerdict sup_form_on_affine(const QuadraticSpace& space, const Subspace& sub,
                                   const Vec& offset);

// Gram matrix of the form restricted to the basis of sub.
Mat restricted_gram(const QuadraticSpace& space, const Subspace& sub);

}  // namespace lorq
