#include "lorq/causality.hpp"

#include <algorithm>
#include <map>

#include "lorq/errors.hpp"
#include "lorq/sampling.hpp"

namespace lorq {

std::string to_string(CausalSummary s) {
    switch (s) {
        case CausalSummary::VacuouslyCausal: return "VacuouslyCausal";
        case CausalSummary::CausalWithinRadius: return "CausalWithinRadius";
        case CausalSummary::NotCausal: return "NotCausal";
    }
    return "?";
}

std::string to_string(Orientation o) { return o == Orientation::Future ? "future" : "past"; }

std::string to_string(ChronologyAnswer::Tag t) {
    switch (t) {
        case ChronologyAnswer::Tag::Member: return "Member";
        case ChronologyAnswer::Tag::NonMember: return "NonMember";
        case ChronologyAnswer::Tag::UnboundedRegion: return "UnboundedRegion";
    }
    return "?";
}

std::string to_string(ClosureCertificate::Outcome o) {
    switch (o) {
        case ClosureCertificate::Outcome::LocallyClosed: return "LocallyClosed";
        case ClosureCertificate::Outcome::NonClosed: return "NonClosed";
        case ClosureCertificate::Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

GammaMargin gamma_causality_margin(const QuadraticSpace& space, const AffineIsometry& g,
                                   std::string label) {
    validate_isometry(space, g);
    GammaMargin m;
    m.element = std::move(label);
    m.verdict = sup_form_on_affine(space, displacement_space(g.linear), g.translation);
    return m;
}

namespace {

std::string isometry_key(const AffineIsometry& g) {
    std::string key;
    for (const Rat& r : g.linear.a) key += rat_to_string(r) + ",";
    key += ";";
    for (const Rat& r : g.translation) key += rat_to_string(r) + ",";
    return key;
}

}  // namespace

WordBallReport word_ball_causality(const GroupGenerators& gg, int radius) {
    if (radius < 1) throw PreconditionViolated("radius >= 1");
    WordBallReport report;
    report.radius = radius;

    std::vector<std::pair<AffineIsometry, std::string>> alphabet;
    for (size_t i = 0; i < gg.gens.size(); ++i) {
        alphabet.emplace_back(gg.gens[i], "g" + std::to_string(i));
        alphabet.emplace_back(inverse_isometry(gg.gens[i]), "g" + std::to_string(i) + "^-1");
    }

    AffineIsometry id = identity_isometry(gg.space.dim);
    std::map<std::string, std::string> seen;  // element key -> word label
    seen.emplace(isometry_key(id), "e");
    std::vector<std::pair<AffineIsometry, std::string>> frontier{{id, ""}};

    bool not_causal = false;
    for (int r = 1; r <= radius; ++r) {
        std::vector<std::pair<AffineIsometry, std::string>> next;
        for (const auto& [elem, word] : frontier) {
            for (const auto& [letter, name] : alphabet) {
                AffineIsometry prod = compose(elem, letter);
                std::string key = isometry_key(prod);
                if (seen.count(key)) continue;
                std::string label = word.empty() ? name : word + "*" + name;
                seen.emplace(key, label);
                GammaMargin margin = gamma_causality_margin(gg.space, prod, label);
                if (margin.verdict.kind == SupremumVerdict::Kind::Unbounded) {
                    not_causal = true;
                    report.worst_element = label;
                } else if (!not_causal) {
                    if (!report.worst_margin || margin.verdict.value > *report.worst_margin) {
                        report.worst_margin = margin.verdict.value;
                        report.worst_element = label;
                    }
                    if (sgn(margin.verdict.value) >= 0) not_causal = true;
                }
                report.margins.push_back(std::move(margin));
                next.emplace_back(std::move(prod), std::move(label));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    if (report.margins.empty())
        report.summary = CausalSummary::VacuouslyCausal;
    else if (not_causal)
        report.summary = CausalSummary::NotCausal;
    else
        report.summary = CausalSummary::CausalWithinRadius;
    return report;
}

Rat LatticeQuadratic::value_at(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != quadratic.rows)
        throw DimensionMismatch("lattice quadratic evaluation");
    Rat out = constant;
    for (size_t i = 0; i < coords.size(); ++i) {
        out += 2 * linear[i] * coords[i];
        for (size_t j = 0; j < coords.size(); ++j)
            out += quadratic.at(static_cast<int>(i), static_cast<int>(j)) * coords[i] * coords[j];
    }
    return out;
}

LatticeQuadratic lattice_quadratic(const TypeIISpec& spec, const Vec& moved, const Vec& target) {
    auto bad = validate_type_ii(spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    const QuadraticSpace& sp = spec.space;
    int k = spec.rank();
    Rat tp = spec.level(moved), tq = spec.level(target);
    Vec diff = vsub(moved, target);

    LatticeQuadratic lq;
    lq.constant = sp.norm(diff);
    lq.linear.resize(static_cast<size_t>(k));
    lq.quadratic = Mat(k, k);
    for (int i = 0; i < k; ++i) {
        const Vec& bi = spec.lattice_basis[static_cast<size_t>(i)];
        const Vec& abi = spec.a_images[static_cast<size_t>(i)];
        lq.linear[static_cast<size_t>(i)] =
            sp.eval(diff, bi) + tq * sp.eval(moved, abi) - tp * sp.eval(target, abi);
        for (int j = i; j < k; ++j) {
            const Vec& bj = spec.lattice_basis[static_cast<size_t>(j)];
            const Vec& abj = spec.a_images[static_cast<size_t>(j)];
            Rat q = sp.eval(bi, bj) + (tp + tq) * sp.eval(abi, bj) + tp * tq * sp.eval(abi, abj);
            lq.quadratic.at(i, j) = q;
            lq.quadratic.at(j, i) = q;
        }
    }

    // Spot-verify the expansion against the direct group action.
    Sampler sampler(0x10f5);
    for (int trial = 0; trial < 3; ++trial) {
        Vec m(static_cast<size_t>(k));
        for (auto& e : m) e = Rat(sampler.uniform(-3, 3));
        Vec image = apply_isometry(group_element_continuous(spec, m), moved);
        if (sp.norm(vsub(image, target)) != lq.value_at(m))
            throw InternalCheckFailure("lattice quadratic disagrees with the group action");
    }
    return lq;
}

namespace {

Vec coords_of(const std::vector<Int>& m) {
    Vec v(m.size());
    for (size_t i = 0; i < m.size(); ++i) v[i] = Rat(m[i]);
    return v;
}

bool orientation_matches(ConeClass c, Orientation o) {
    if (c == ConeClass::Zero) return true;  // 0 lies in both closed cones
    return o == Orientation::Future ? is_future(c) : is_past(c);
}

struct QueryContext {
    const TypeIISpec& spec;
    const Vec& u;  // query point
    const Vec& v;  // candidate member
    Orientation orientation;
    LatticeQuadratic lq;

    bool accept(const std::vector<Int>& m) const {
        Vec image = apply_isometry(group_element(spec, m), v);
        return orientation_matches(cone_classify(spec.space, vsub(image, u)), orientation);
    }
};

// Largest-root step for value(s d) = A s^2 + 2 B s + C along direction d.
// Returns candidate integer parameters beyond the real roots, on both sides
// for growing parabolas, on the growth side for affine values.
std::vector<Int> directional_parameters(const Rat& A, const Rat& B, const Rat& C) {
    std::vector<Int> params;
    if (sgn(A) > 0) {
        Rat disc = B * B - A * C;  // quarter discriminant of A s^2 + 2 B s + C
        Int plus, minus;
        if (sgn(disc) < 0) {
            plus = 1;
            minus = -1;
        } else {
            Rat center = -B / A;
            Rat radius2 = disc / (A * A);
            plus = floor_plus_sqrt(center, radius2) + 1;
            if (plus < 1) plus = 1;
            minus = ceil_minus_sqrt(center, radius2) - 1;
            if (minus > -1) minus = -1;
        }
        params = {plus, 2 * plus, minus, 2 * minus};
    } else if (sgn(A) == 0 && sgn(B) != 0) {
        // value = 2 B s + C >= 0 on one side of -C / (2B).
        Rat threshold = -C / (2 * B);
        Int s0 = sgn(B) > 0 ? ceil_rat(threshold) : floor_rat(threshold);
        if (sgn(B) > 0 && s0 < 1) s0 = 1;
        if (sgn(B) < 0 && s0 > -1) s0 = -1;
        Int s1 = s0 + (sgn(B) > 0 ? 1 : -1);
        params = {s0, s1, 2 * s1};
    } else if (sgn(A) == 0 && sgn(B) == 0 && sgn(C) >= 0) {
        // Constant nonnegative value: the orientation along the line settles
        // eventually; probe geometrically on both sides.
        params = {Int(1), Int(-1), Int(64), Int(-64), Int(4096), Int(-4096)};
    }
    return params;
}

std::optional<ChronologyAnswer> try_direction(const QueryContext& ctx, const Vec& d) {
    int k = static_cast<int>(d.size());
    Rat A(0), B(0);
    for (int i = 0; i < k; ++i) {
        B += ctx.lq.linear[static_cast<size_t>(i)] * d[static_cast<size_t>(i)];
        for (int j = 0; j < k; ++j)
            A += ctx.lq.quadratic.at(i, j) * d[static_cast<size_t>(i)] * d[static_cast<size_t>(j)];
    }
    for (const Int& s : directional_parameters(A, B, ctx.lq.constant)) {
        std::vector<Int> m(static_cast<size_t>(k));
        bool integral = true;
        for (int i = 0; i < k; ++i) {
            Rat c = Rat(s) * d[static_cast<size_t>(i)];
            if (c.get_den() != 1) {
                integral = false;
                break;
            }
            m[static_cast<size_t>(i)] = c.get_num();
        }
        if (!integral) continue;
        if (sgn(ctx.lq.value_at(coords_of(m))) < 0) continue;
        if (ctx.accept(m)) {
            ChronologyAnswer ans;
            ans.tag = ChronologyAnswer::Tag::Member;
            ans.witness = std::move(m);
            ans.note = "directional witness";
            return ans;
        }
    }
    return std::nullopt;
}

// Scales a rational vector to integer entries with coprime content.
Vec integerize(const Vec& v) {
    Int lcm(1);
    for (const Rat& r : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
    Vec out = vscale(Rat(lcm), v);
    Int gcd(0);
    for (const Rat& r : out) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), r.get_num().get_mpz_t());
    if (sgn(gcd) > 0 && gcd != 1) out = vscale(Rat(1) / Rat(gcd), out);
    return out;
}

}  // namespace

ChronologyAnswer chronology_query(const TypeIISpec& spec, const Vec& u, const Vec& v,
                                  Orientation orientation, const Budget& budget) {
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) throw NonFreeSpec("chronology queries need a free action");

    QueryContext ctx{spec, u, v, orientation, lattice_quadratic(spec, v, u)};
    int k = spec.rank();
    const Mat& Q = ctx.lq.quadratic;
    Signature sig = signature_of_symmetric(Q);

    if (sig.pos == 0 && sig.zero == 0) {
        // Negative definite: the candidate region { value >= 0 } is a closed
        // ellipsoid. Enumerate every integer point of its exact bounding box.
        Vec center = *solve(Q, vneg(ctx.lq.linear));
        Rat rmax = ctx.lq.constant;
        for (int i = 0; i < k; ++i) rmax += ctx.lq.linear[static_cast<size_t>(i)] * center[static_cast<size_t>(i)];
        ChronologyAnswer ans;
        if (sgn(rmax) < 0) {
            ans.tag = ChronologyAnswer::Tag::NonMember;
            ans.exhaustive = true;
            ans.note = "real maximum " + rat_to_string(rmax) + " < 0";
            return ans;
        }
        Mat P = scale(Rat(-1), Q);
        Mat Pinv = *inverse(P);
        std::vector<Int> lo(static_cast<size_t>(k)), hi(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            Rat bound2 = rmax * Pinv.at(i, i);
            lo[static_cast<size_t>(i)] = ceil_minus_sqrt(center[static_cast<size_t>(i)], bound2);
            hi[static_cast<size_t>(i)] = floor_plus_sqrt(center[static_cast<size_t>(i)], bound2);
        }
        std::vector<Int> m = lo;
        while (true) {
            if (sgn(ctx.lq.value_at(coords_of(m))) >= 0 && ctx.accept(m)) {
                ans.tag = ChronologyAnswer::Tag::Member;
                ans.witness = m;
                ans.note = "ellipsoid enumeration";
                return ans;
            }
            int axis = k - 1;
            while (axis >= 0) {
                if (++m[static_cast<size_t>(axis)] <= hi[static_cast<size_t>(axis)]) break;
                m[static_cast<size_t>(axis)] = lo[static_cast<size_t>(axis)];
                --axis;
            }
            if (axis < 0) break;
        }
        ans.tag = ChronologyAnswer::Tag::NonMember;
        ans.exhaustive = true;
        ans.note = "ellipsoid fully enumerated";
        return ans;
    }

    std::vector<Vec> radical = kernel_basis(Q);
    if (sig.pos == 0) {
        // Negative semidefinite. If the linear part vanishes on the radical,
        // the real supremum is attained; a negative supremum proves emptiness.
        bool linear_on_radical = false;
        for (const Vec& kv : radical) {
            Rat lin(0);
            for (int i = 0; i < k; ++i) lin += ctx.lq.linear[static_cast<size_t>(i)] * kv[static_cast<size_t>(i)];
            if (sgn(lin) != 0) {
                linear_on_radical = true;
                break;
            }
        }
        if (!linear_on_radical) {
            auto center = solve(Q, vneg(ctx.lq.linear));
            if (!center) throw InternalCheckFailure("semidefinite stationarity inconsistent");
            Rat rmax = ctx.lq.constant;
            for (int i = 0; i < k; ++i)
                rmax += ctx.lq.linear[static_cast<size_t>(i)] * (*center)[static_cast<size_t>(i)];
            if (sgn(rmax) < 0) {
                ChronologyAnswer ans;
                ans.tag = ChronologyAnswer::Tag::NonMember;
                ans.exhaustive = true;
                ans.note = "real supremum " + rat_to_string(rmax) + " < 0";
                return ans;
            }
        }
    }

    // The region is unbounded (or a cylinder): certify a member along a
    // growth direction if possible, trying lattice axes, a positive direction
    // of Q, and radical directions with nonzero linear term.
    std::vector<Vec> candidates;
    for (int i = 0; i < k; ++i) candidates.push_back(unit_vec(k, i));
    if (sig.pos > 0) {
        Congruence cong = diagonalize_congruence(Q);
        for (size_t i = 0; i < cong.diag.size(); ++i)
            if (sgn(cong.diag[i]) > 0)
                candidates.push_back(integerize(column(cong.s, static_cast<int>(i))));
    }
    for (const Vec& kv : radical) candidates.push_back(integerize(kv));

    for (const Vec& d : candidates)
        if (auto ans = try_direction(ctx, d)) return *ans;

    // Bounded scan for witnesses the directional shortcuts missed.
    {
        std::vector<Int> m(static_cast<size_t>(k), Int(-budget.box));
        while (true) {
            if (sgn(ctx.lq.value_at(coords_of(m))) >= 0 && ctx.accept(m)) {
                ChronologyAnswer ans;
                ans.tag = ChronologyAnswer::Tag::Member;
                ans.witness = m;
                ans.note = "box scan (radius " + std::to_string(budget.box) + ")";
                return ans;
            }
            int axis = k - 1;
            while (axis >= 0) {
                if (++m[static_cast<size_t>(axis)] <= budget.box) break;
                m[static_cast<size_t>(axis)] = -budget.box;
                --axis;
            }
            if (axis < 0) break;
        }
    }

    ChronologyAnswer ans;
    ans.tag = ChronologyAnswer::Tag::UnboundedRegion;
    if (sig.pos > 0) {
        Congruence cong = diagonalize_congruence(Q);
        for (size_t i = 0; i < cong.diag.size(); ++i)
            if (sgn(cong.diag[i]) > 0) {
                ans.direction = integerize(column(cong.s, static_cast<int>(i)));
                break;
            }
        ans.note = "quadratic part has a positive direction; no witness in budget";
    } else {
        for (const Vec& kv : radical) {
            ans.direction = integerize(kv);
            break;
        }
        ans.note = "candidate region is an unbounded cylinder; no witness in budget";
    }
    return ans;
}

StrictCausality strict_causality_certificate(const TypeIISpec& spec, const Budget& budget) {
    StrictCausality out;
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) {
        out.strictly_causal = false;
        out.witness = fr.witness;
        return out;
    }
    // Free specs have negative definite per-level quadratics; spot-check it.
    Sampler sampler(budget.seed ^ 0x5ca1ab1eULL);
    int trials = std::max(1, budget.samples / 10);
    for (int i = 0; i < trials; ++i) {
        Vec v = sampler.vec(spec.space.dim);
        LatticeQuadratic lq = lattice_quadratic(spec, v, v);
        if (!is_negative_definite(lq.quadratic))
            throw InternalCheckFailure("free spec with non-definite level quadratic");
    }
    out.strictly_causal = true;
    return out;
}

StrictCausality strict_causality_certificate(const TypeISpec& spec) {
    auto bad = validate_type_i(spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    // Spacelike translation lattices are strictly causal (globally hyperbolic);
    // each generator margin is l(b, b) < 0.
    for (const Vec& b : spec.lattice_basis)
        if (sgn(spec.space.norm(b)) >= 0)
            throw InternalCheckFailure("spacelike lattice with non-negative generator margin");
    return StrictCausality{true, std::nullopt};
}

namespace {

// Per-direction closure data at the query point u: critical level, member
// side, and the orientation of far members approaching the critical level.
struct CriticalDirection {
    int index = -1;       // lattice basis index
    Rat critical_level;   // t* with vanishing leading coefficient
    int member_side = 0;  // +1: levels above t* are members, -1: below
    int near_orientation = 0;  // +1 future / -1 past of far members near t*
};

std::vector<CriticalDirection> critical_directions(const TypeIISpec& spec, const Vec& u) {
    std::vector<CriticalDirection> out;
    const QuadraticSpace& sp = spec.space;
    Rat tu = spec.level(u);
    for (int i = 0; i < spec.rank(); ++i) {
        const Vec& x = spec.lattice_basis[static_cast<size_t>(i)];
        const Vec& ax = spec.a_images[static_cast<size_t>(i)];
        if (is_zero(ax)) continue;
        // lead(t) = l(x,x) + tu l(x,ax) + t (l(ax,x) + tu l(ax,ax))
        Rat alpha = sp.norm(x) + tu * sp.eval(x, ax);
        Rat beta = sp.eval(ax, x) + tu * sp.norm(ax);
        if (sgn(beta) == 0) continue;
        CriticalDirection cd;
        cd.index = i;
        cd.critical_level = -alpha / beta;
        cd.member_side = sgn(beta);
        // Orientation of gamma_{n x}(v) - u for large n: the v0-coefficient
        // per n^2 is -(t l(ax,ax) + l(ax,x)) / 2, increasing in t.
        Rat omega = -(cd.critical_level * sp.norm(ax) + sp.eval(ax, x)) / 2;
        cd.near_orientation = sgn(omega) != 0 ? sgn(omega) : cd.member_side;
        out.push_back(std::move(cd));
    }
    return out;
}

}  // namespace

ClosureCertificate closure_probe(const TypeIISpec& spec, const Vec& u, Orientation orientation,
                                 const Budget& budget) {
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) throw NonFreeSpec("closure probes need a free action");

    ClosureCertificate cert;
    cert.budget = budget;
    cert.lightlike_direction = spec.v0;

    const QuadraticSpace& sp = spec.space;
    int want = orientation == Orientation::Past ? -1 : 1;
    bool attempted = false;

    for (const CriticalDirection& cd : critical_directions(spec, u)) {
        if (cd.near_orientation != want) continue;
        attempted = true;

        // Limit point q: on the critical level, with every lattice linear
        // coefficient vanishing (the level-set generalization of the
        // invariant set); pushed spacelike until the constant term is
        // negative, which makes q a provable non-member.
        Rat tu = spec.level(u);
        std::vector<Vec> rows{mul(sp.gram, spec.v0)};
        Vec rhs{cd.critical_level};
        for (int j = 0; j < spec.rank(); ++j) {
            const Vec& bj = spec.lattice_basis[static_cast<size_t>(j)];
            const Vec& abj = spec.a_images[static_cast<size_t>(j)];
            rows.push_back(mul(sp.gram, vadd(bj, vscale(tu, abj))));
            rhs.push_back(sp.eval(u, bj) + cd.critical_level * sp.eval(u, abj));
        }
        Mat sys = mat_from_rows(rows);
        auto q0 = solve(sys, rhs);
        if (!q0) continue;
        std::vector<Vec> dirs = kernel_basis(sys);
        std::optional<Vec> step;
        for (const Vec& d : dirs)
            if (sgn(sp.norm(d)) < 0) {
                Vec dd = d;
                for (const Rat& c : dd) {
                    if (sgn(c) == 0) continue;
                    if (sgn(c) < 0) dd = vneg(dd);
                    break;
                }
                step = dd;
                break;
            }

        for (int s = 0; s <= 4; ++s) {
            Vec q = *q0;
            if (s > 0) {
                if (!step) break;
                q = vadd(q, vscale(Rat(s), *step));
            }
            if (sgn(sp.norm(vsub(q, u))) >= 0) continue;  // need a(q) < 0
            ChronologyAnswer nm = chronology_query(spec, u, q, orientation, budget);
            if (!(nm.tag == ChronologyAnswer::Tag::NonMember && nm.exhaustive)) continue;

            // Members along q + s * (member_side) v1, approaching q.
            Vec line_dir = vscale(Rat(cd.member_side), spec.v1);
            std::vector<Rat> params{Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)};
            bool all_members = true;
            for (const Rat& p : params) {
                Vec vs = vadd(q, vscale(p, line_dir));
                ChronologyAnswer mem = chronology_query(spec, u, vs, orientation, budget);
                if (mem.tag != ChronologyAnswer::Tag::Member) {
                    all_members = false;
                    break;
                }
            }
            if (!all_members) continue;

            cert.outcome = ClosureCertificate::Outcome::NonClosed;
            cert.limit_point = q;
            cert.member_line_base = q;
            cert.member_line_direction = line_dir;
            cert.verified_params = params;
            cert.critical_level = cd.critical_level;
            cert.note = "lattice direction " + std::to_string(cd.index) + ", critical level " +
                        rat_to_string(cd.critical_level);
            return cert;
        }
    }

    if (attempted) {
        cert.outcome = ClosureCertificate::Outcome::Inconclusive;
        cert.note = "candidate critical levels exist but no certificate verified within budget";
    } else {
        cert.outcome = ClosureCertificate::Outcome::LocallyClosed;
        cert.note = "no critical direction produces " + to_string(orientation) +
                    "-oriented members near a critical level";
    }
    return cert;
}

std::optional<LightlikeLine> lightlike_line_witness(const TypeIISpec& spec, const Vec& u,
                                                    Orientation orientation,
                                                    const Budget& budget) {
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) return std::nullopt;
    bool a_nonzero = false;
    for (const Vec& img : spec.a_images)
        if (!is_zero(img)) a_nonzero = true;
    if (!a_nonzero) return std::nullopt;

    int want = orientation == Orientation::Past ? -1 : 1;
    for (const CriticalDirection& cd : critical_directions(spec, u)) {
        if (cd.near_orientation != want) continue;
        for (int depth = 1; depth <= 3; ++depth) {
            // Base point on the member side of the critical level.
            Vec base = vscale(cd.critical_level + Rat(depth) * Rat(cd.member_side), spec.v1);
            std::vector<Rat> params{Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)};
            bool ok = true;
            for (const Rat& p : params) {
                Vec pt = vadd(base, vscale(p, spec.v0));
                ChronologyAnswer mem = chronology_query(spec, u, pt, orientation, budget);
                if (mem.tag != ChronologyAnswer::Tag::Member) {
                    ok = false;
                    break;
                }
            }
            if (ok) return LightlikeLine{base, spec.v0, params};
        }
    }
    return std::nullopt;
}

}  // namespace lorq
