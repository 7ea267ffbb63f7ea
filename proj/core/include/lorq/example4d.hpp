#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorq/causality.hpp"
#include "lorq/group.hpp"
#include "lorq/surd.hpp"

namespace lorq::example4d {

// The distinguished 4-dimensional quotient: form 2 v0 v3 - v1^2 - v2^2 with
// cone selector (1,0,0,1), holonomy the cyclic unipotent group generated by
//   gamma_n(v) = lambda(n) v + (0, n, 0, 0),
// built as the TypeII spec (v0 = e0, v1 = e3, lattice Z e1, a e1 = e2).
struct Example {
    TypeIISpec spec;
    GroupGenerators group;
};
Example build();

// gamma_n from the closed matrix form (independent of the nu-based builder).
AffineIsometry element(long n);

// Exact check of l(gamma_n(v) - v, gamma_n(v) - v) = -n^2 (1 + v3^2) over
// n in [-n_range, n_range] and sampled rational v, including independence of
// the v0, v1, v2 coordinates.
struct IdentityReport {
    bool ok = false;
    long identities_checked = 0;
    std::string detail;
};
IdentityReport displacement_identity(int n_range, int samples = 10, std::uint64_t seed = 0);

// Coefficients of n -> l(gamma_n(v) - u): value = constant + 2 linear n + lead n^2,
// with linear = u2 v3 - u3 v2 + u1 - v1 and lead = -(1 + u3 v3).
struct OrbitQuad {
    Rat constant, linear, lead;
};
OrbitQuad orbit_quadratic(const Vec& u, const Vec& v);

enum class Region { MPlus, MZero, MMinus };
std::string to_string(Region r);
Region region_classify(const Vec& u);

struct RegionProfile {
    bool future_closed = true;
    bool past_closed = true;
    bool future_lightlike = false;  // future contains lightlike lines
    bool past_lightlike = false;
};
RegionProfile region_profile(Region r);

// Region tag plus the causal profile, cross-checked against the causality
// probes. MMinus results are transported from MPlus through the involution.
struct RegionReport {
    Region region = Region::MZero;
    RegionProfile profile;
    bool cross_checked = false;
    std::string detail;
};
RegionReport region_report(const Vec& u, const Budget& budget = {});

// (v0, v1, v2, v3) -> (-v0, v1, -v2, -v3); commutes with the holonomy and
// swaps the two cones, hence swaps MPlus and MMinus with past and future.
Vec involution(const Vec& v);
Mat involution_matrix();

struct InvolutionReport {
    bool ok = false;
    std::string detail;
};
InvolutionReport check_involution();

// The invariant set on the critical level v3 = -1/u3: vanishing linear
// coefficient and negative constant term. Its points are provable
// non-members of the past (u3 > 0) that are limits of members.
struct InvariantSet {
    Rat level;
    std::string description;
    std::vector<Vec> samples;
    bool invariance_ok = false;
    bool non_members_ok = false;
};
InvariantSet iu_certificate(const Vec& u, const Budget& budget = {});

// Homothety normalization of a 4-dimensional TypeII spec (a != 0, free) onto
// the Example: origin shift killing the quadratic translation terms, metric
// rescale making the lattice generator unit spacelike, then the unique t > 0
// with t^2 l(a e1, a e1) = -1 defining the null frame scaling.
struct Normalization {
    Surd scale;                 // t, possibly irrational
    Rat metric_scale;           // positive homothety factor applied to the form
    std::vector<SurdVec> basis; // e0', e1', e2', e3' in input coordinates
    std::vector<std::string> verification;
};
Normalization normalize_4d(const TypeIISpec& spec);

}  // namespace lorq::example4d
