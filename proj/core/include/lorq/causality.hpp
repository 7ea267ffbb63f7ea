#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorq/group.hpp"
#include "lorq/isometry.hpp"
#include "lorq/space.hpp"

namespace lorq {

// Search budgets for the semi-decidable queries; recorded in every report so
// results are reproducible.
struct Budget {
    long box = 25;
    int samples = 100;
    std::uint64_t seed = 0;
};

// Causality margin of one element: the exact supremum of
// l(gamma(v) - v, gamma(v) - v) over all v, i.e. the form over the
// displacement space shifted by the translation. Attained(< 0) means this
// element admits no closed timelike curve.
struct GammaMargin {
    std::string element;
    SupremumVerdict verdict;

    bool admissible() const { return verdict.attained_negative(); }
};

GammaMargin gamma_causality_margin(const QuadraticSpace& space, const AffineIsometry& g,
                                   std::string label = "");

enum class CausalSummary { VacuouslyCausal, CausalWithinRadius, NotCausal };
std::string to_string(CausalSummary s);

// Margins of all non-identity reduced words up to the given length,
// deduplicated by exact equality. A semi-decision for generic generator sets;
// TypeII specs should use strict_causality_certificate instead.
struct WordBallReport {
    std::vector<GammaMargin> margins;
    CausalSummary summary = CausalSummary::VacuouslyCausal;
    std::optional<Rat> worst_margin;  // largest attained value; unset if none attained
    std::string worst_element;
    int radius = 0;
};
WordBallReport word_ball_causality(const GroupGenerators& gg, int radius);

// Exact expansion of m -> l(gamma_x(moved) - target, gamma_x(moved) - target)
// in lattice coordinates m (x = sum m_i b_i):
//   value(m) = constant + 2 linear.m + m^T quadratic m.
struct LatticeQuadratic {
    Rat constant;
    Vec linear;
    Mat quadratic;

    Rat value_at(const Vec& coords) const;
};
LatticeQuadratic lattice_quadratic(const TypeIISpec& spec, const Vec& moved, const Vec& target);

enum class Orientation { Future, Past };
std::string to_string(Orientation o);

// Membership of kappa(v) in the past/future of kappa(u).
struct ChronologyAnswer {
    enum class Tag { Member, NonMember, UnboundedRegion };
    Tag tag = Tag::NonMember;
    std::vector<Int> witness;  // lattice coefficients, Member only
    bool exhaustive = false;   // NonMember: candidate set provably finite and fully enumerated
    Vec direction;             // UnboundedRegion: lattice direction with nonnegative growth
    std::string note;
};
std::string to_string(ChronologyAnswer::Tag t);

ChronologyAnswer chronology_query(const TypeIISpec& spec, const Vec& u, const Vec& v,
                                  Orientation orientation, const Budget& budget = {});

// Freeness plus a spot-check that the per-level quadratic is negative
// definite (which the construction guarantees for free specs).
struct StrictCausality {
    bool strictly_causal = false;
    std::optional<FreenessWitness> witness;  // failure certificate
};
StrictCausality strict_causality_certificate(const TypeIISpec& spec, const Budget& budget = {});
StrictCausality strict_causality_certificate(const TypeISpec& spec);

// Non-closure certificate: a limit point on the critical level that is
// provably not a member, together with a verified line of members approaching
// it; the lightlike direction v0 spans the line contained in the closure.
struct ClosureCertificate {
    enum class Outcome { LocallyClosed, NonClosed, Inconclusive };
    Outcome outcome = Outcome::LocallyClosed;
    Vec limit_point;
    Vec lightlike_direction;
    Vec member_line_base;
    Vec member_line_direction;
    std::vector<Rat> verified_params;  // decreasing approach parameters, all verified Member
    Rat critical_level;
    Budget budget;
    std::string note;
};
std::string to_string(ClosureCertificate::Outcome o);

ClosureCertificate closure_probe(const TypeIISpec& spec, const Vec& u, Orientation orientation,
                                 const Budget& budget = {});

// A whole affine line base + R v0 of members of the requested past/future,
// verified on sampled parameters.
struct LightlikeLine {
    Vec base;
    Vec direction;
    std::vector<Rat> verified_params;
};
std::optional<LightlikeLine> lightlike_line_witness(const TypeIISpec& spec, const Vec& u,
                                                    Orientation orientation,
                                                    const Budget& budget = {});

}  // namespace lorq
