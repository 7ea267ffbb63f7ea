#pragma once

#include <vector>

#include "lorq/isometry.hpp"
#include "lorq/space.hpp"

namespace lorq {

// Linear extension of an affine map to V + R: block matrix [[g, b], [0, 1]];
// the affine action is recovered on the hyperplane with last coordinate 1.
Mat linearize(const AffineIsometry& g);

// Unipotent-over-bounded decomposition of a commuting group: V = V0 + V1 with
// U = base_point + V0 invariant and unipotent, V1 invariant with the form
// negative definite on it.
struct SplitResult {
    Vec base_point;
    Subspace v0_part;
    Subspace v1_part;
};

// Joint Fitting decomposition of the linearized generators: V0~ is the common
// generalized 1-eigenspace, V1 the sum of the complementary images. All
// SplitResult invariants are asserted before returning.
SplitResult unipotent_bounded_split(const GroupGenerators& gg);

// alpha(gamma) = l(translation(gamma), v0) per generator; additive on words
// when v0 is a common fixed null vector of the linear parts.
struct LevelHomomorphism {
    std::vector<Rat> values;
};
LevelHomomorphism level_homomorphism(const GroupGenerators& gg, const Vec& v0);

}  // namespace lorq
