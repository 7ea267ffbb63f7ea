#include "lorq/example4d.hpp"
#include <algorithm>


#include "lorq/errors.hpp"
#include "lorq/sampling.hpp"

namespace lorq::example4d {

namespace {

Mat example_gram() {
    // l(u, v) = u0 v3 + u3 v0 - u1 v1 - u2 v2
    Mat g(4, 4);
    g.at(0, 3) = 1;
    g.at(3, 0) = 1;
    g.at(1, 1) = -1;
    g.at(2, 2) = -1;
    return g;
}

Vec vec4(long a, long b, long c, long d) {
    return Vec{Rat(a), Rat(b), Rat(c), Rat(d)};
}

}  // namespace

AffineIsometry element(long n) {
    Mat lam = Mat::identity(4);
    lam.at(0, 2) = Rat(n);
    lam.at(0, 3) = Rat(n) * Rat(n) / 2;
    lam.at(2, 3) = Rat(n);
    return AffineIsometry{lam, Vec{Rat(0), Rat(n), Rat(0), Rat(0)}};
}

Example build() {
    Example ex;
    ex.spec.space = QuadraticSpace::create(example_gram(), vec4(1, 0, 0, 1));
    ex.spec.v0 = vec4(1, 0, 0, 0);
    ex.spec.v1 = vec4(0, 0, 0, 1);
    ex.spec.lattice_basis = {vec4(0, 1, 0, 0)};
    ex.spec.a_images = {vec4(0, 0, 1, 0)};
    auto bad = validate_type_ii(ex.spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    ex.group = build_group(ex.spec);
    if (!(ex.group.gens[0] == element(1)))
        throw InternalCheckFailure("built generator differs from the closed matrix form");
    return ex;
}

IdentityReport displacement_identity(int n_range, int samples, std::uint64_t seed) {
    if (n_range < 1) throw PreconditionViolated("n_range >= 1");
    Example ex = build();
    const QuadraticSpace& sp = ex.spec.space;
    Sampler sampler(seed ^ 0xca6e11dULL);
    IdentityReport report;
    for (long n = -n_range; n <= n_range; ++n) {
        AffineIsometry g = element(n);
        if (!(g == group_element(ex.spec, {Int(n)})))
            throw InternalCheckFailure("closed form and group builder disagree at n=" +
                                       std::to_string(n));
        for (int s = 0; s < samples; ++s) {
            Vec v = sampler.vec(4);
            Rat lhs = sp.norm(vsub(apply_isometry(g, v), v));
            Rat v3 = v[3];
            Rat rhs = -Rat(n) * Rat(n) * (1 + v3 * v3);
            if (lhs != rhs) {
                report.detail = "identity fails at n=" + std::to_string(n) + ", v=" + vec_to_string(v);
                return report;
            }
            // The value must not depend on v0, v1, v2.
            Vec w = v;
            w[0] = sampler.rat();
            w[1] = sampler.rat();
            w[2] = sampler.rat();
            if (sp.norm(vsub(apply_isometry(g, w), w)) != rhs) {
                report.detail = "value depends on the transverse coordinates at n=" +
                                std::to_string(n);
                return report;
            }
            report.identities_checked += 2;
        }
    }
    report.ok = true;
    report.detail = "exact over n in [-" + std::to_string(n_range) + ", " +
                    std::to_string(n_range) + "]";
    return report;
}

OrbitQuad orbit_quadratic(const Vec& u, const Vec& v) {
    if (u.size() != 4 || v.size() != 4) throw DimensionMismatch("orbit_quadratic needs 4-vectors");
    Example ex = build();
    OrbitQuad q;
    q.constant = ex.spec.space.norm(vsub(v, u));
    q.linear = u[2] * v[3] - u[3] * v[2] + u[1] - v[1];
    q.lead = -(1 + u[3] * v[3]);
    // Exact agreement with the direct evaluation on a small range.
    for (long n = -2; n <= 2; ++n) {
        Rat direct = ex.spec.space.norm(vsub(apply_isometry(element(n), v), u));
        Rat predicted = q.constant + 2 * q.linear * Rat(n) + q.lead * Rat(n) * Rat(n);
        if (direct != predicted)
            throw InternalCheckFailure("orbit quadratic mismatch at n=" + std::to_string(n));
    }
    return q;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::MPlus: return "MPlus";
        case Region::MZero: return "MZero";
        case Region::MMinus: return "MMinus";
    }
    return "?";
}

Region region_classify(const Vec& u) {
    if (u.size() != 4) throw DimensionMismatch("region_classify needs a 4-vector");
    int s = sgn(u[3]);
    if (s > 0) return Region::MPlus;
    if (s < 0) return Region::MMinus;
    return Region::MZero;
}

RegionProfile region_profile(Region r) {
    RegionProfile p;
    switch (r) {
        case Region::MPlus:
            p.future_closed = true;
            p.past_closed = false;
            p.past_lightlike = true;
            break;
        case Region::MMinus:
            p.future_closed = false;
            p.past_closed = true;
            p.future_lightlike = true;
            break;
        case Region::MZero:
            break;  // both closed, no lightlike lines
    }
    return p;
}

Vec involution(const Vec& v) {
    if (v.size() != 4) throw DimensionMismatch("involution needs a 4-vector");
    return Vec{-v[0], v[1], -v[2], -v[3]};
}

Mat involution_matrix() {
    Mat m = Mat::identity(4);
    m.at(0, 0) = -1;
    m.at(2, 2) = -1;
    m.at(3, 3) = -1;
    return m;
}

RegionReport region_report(const Vec& u, const Budget& budget) {
    RegionReport report;
    report.region = region_classify(u);
    report.profile = region_profile(report.region);
    Example ex = build();

    // MMinus is probed through the involution: iota swaps the cones, so the
    // past/future profile at u equals the swapped profile at iota(u).
    Vec probe_point = u;
    bool swapped = false;
    if (report.region == Region::MMinus) {
        probe_point = involution(u);
        swapped = true;
    }
    auto orient = [&](Orientation o) {
        if (!swapped) return o;
        return o == Orientation::Past ? Orientation::Future : Orientation::Past;
    };

    ClosureCertificate past = closure_probe(ex.spec, probe_point, orient(Orientation::Past), budget);
    ClosureCertificate future =
        closure_probe(ex.spec, probe_point, orient(Orientation::Future), budget);
    auto past_line = lightlike_line_witness(ex.spec, probe_point, orient(Orientation::Past), budget);
    auto future_line =
        lightlike_line_witness(ex.spec, probe_point, orient(Orientation::Future), budget);

    bool ok = true;
    auto closed_matches = [&](const ClosureCertificate& c, bool expect_closed) {
        if (expect_closed) return c.outcome == ClosureCertificate::Outcome::LocallyClosed;
        return c.outcome == ClosureCertificate::Outcome::NonClosed;
    };
    ok = ok && closed_matches(past, report.profile.past_closed);
    ok = ok && closed_matches(future, report.profile.future_closed);
    ok = ok && (past_line.has_value() == report.profile.past_lightlike);
    ok = ok && (future_line.has_value() == report.profile.future_lightlike);
    report.cross_checked = ok;
    report.detail = "past probe " + to_string(past.outcome) + ", future probe " +
                    to_string(future.outcome) +
                    (swapped ? " (transported through the involution)" : "");
    return report;
}

InvolutionReport check_involution() {
    InvolutionReport report;
    Example ex = build();
    Mat iota = involution_matrix();
    if (!(mul(iota, iota) == Mat::identity(4))) {
        report.detail = "iota^2 != id";
        return report;
    }
    if (!(mul(transpose(iota), mul(ex.spec.space.gram, iota)) == ex.spec.space.gram)) {
        report.detail = "iota does not preserve the form";
        return report;
    }
    for (long n = -10; n <= 10; ++n) {
        AffineIsometry g = element(n);
        if (!(mul(iota, g.linear) == mul(g.linear, iota)) ||
            !(mul(iota, g.translation) == g.translation)) {
            report.detail = "iota fails to commute with gamma_" + std::to_string(n);
            return report;
        }
    }
    Sampler sampler(0x107a);
    for (int i = 0; i < 20; ++i) {
        Vec u = sampler.vec(4);
        Region r = region_classify(u), ri = region_classify(involution(u));
        bool swap_ok = (r == Region::MZero && ri == Region::MZero) ||
                       (r == Region::MPlus && ri == Region::MMinus) ||
                       (r == Region::MMinus && ri == Region::MPlus);
        if (!swap_ok) {
            report.detail = "iota fails to swap the open regions";
            return report;
        }
    }
    report.ok = true;
    report.detail = "iota^2 = id, form preserved, commutes with gamma_n for |n| <= 10, swaps M+ and M-";
    return report;
}

InvariantSet iu_certificate(const Vec& u, const Budget& budget) {
    if (u.size() != 4) throw DimensionMismatch("iu_certificate needs a 4-vector");
    if (sgn(u[3]) == 0) throw PreconditionViolated("u3 != 0");
    Example ex = build();
    const QuadraticSpace& sp = ex.spec.space;

    InvariantSet set;
    set.level = Rat(-1) / u[3];
    set.description = "v3 = " + rat_to_string(set.level) +
                      ", b(v) = " + rat_to_string(u[2]) + "*v3 - " + rat_to_string(u[3]) +
                      "*v2 + " + rat_to_string(u[1]) + " - v1 = 0, l(v-u, v-u) < 0";

    auto in_set = [&](const Vec& v) {
        if (v[3] != set.level) return false;
        OrbitQuad q = orbit_quadratic(u, v);
        return sgn(q.linear) == 0 && sgn(q.constant) < 0;
    };

    // Sample the two free coordinates; b(v) = 0 fixes v1. Pushing v0 past
    // max(u0, 0) on the side of sign(u3) makes both the constant term and
    // l(v, v) strictly negative, so no rejection is needed.
    Sampler sampler(budget.seed ^ 0x1a5e7ULL);
    int wanted = std::max(1, budget.samples / 10);
    int guard = 0;
    while (static_cast<int>(set.samples.size()) < wanted && guard++ < 100 * wanted) {
        Vec v(4);
        Rat reach = abs(sampler.rat()) + 1;
        if (sgn(u[3]) > 0)
            v[0] = std::max(u[0], Rat(0)) + reach;
        else
            v[0] = std::min(u[0], Rat(0)) - reach;
        v[2] = sampler.rat();
        v[3] = set.level;
        v[1] = u[2] * set.level - u[3] * v[2] + u[1];
        if (!in_set(v)) continue;
        if (sgn(sp.norm(v)) >= 0) continue;  // keep samples in the stricter set
        set.samples.push_back(std::move(v));
    }
    if (static_cast<int>(set.samples.size()) < wanted)
        throw InternalCheckFailure("could not sample the invariant set");

    set.invariance_ok = true;
    AffineIsometry g1 = element(1);
    for (const Vec& v : set.samples)
        if (!in_set(apply_isometry(g1, v))) set.invariance_ok = false;

    set.non_members_ok = true;
    Orientation o = sgn(u[3]) > 0 ? Orientation::Past : Orientation::Future;
    for (const Vec& v : set.samples) {
        ChronologyAnswer ans = chronology_query(ex.spec, u, v, o, budget);
        if (!(ans.tag == ChronologyAnswer::Tag::NonMember && ans.exhaustive))
            set.non_members_ok = false;
    }
    return set;
}

namespace {

SurdVec lift(const Vec& v) {
    SurdVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Surd(v[i]);
    return out;
}

SurdMat lift(const Mat& m) {
    SurdMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = Surd(m.at(i, j));
    return out;
}

Surd eval_surd(const Mat& gram, const SurdVec& x, const SurdVec& y) {
    Surd acc;
    for (int i = 0; i < gram.rows; ++i)
        for (int j = 0; j < gram.cols; ++j) {
            if (sgn(gram.at(i, j)) == 0) continue;
            acc = acc + Surd(gram.at(i, j)) * x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        }
    return acc;
}

}  // namespace

Normalization normalize_4d(const TypeIISpec& spec) {
    if (spec.space.dim != 4) throw WrongDimension("normalization needs dim 4");
    auto bad = validate_type_ii(spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    bool a_zero = true;
    for (const Vec& img : spec.a_images)
        if (!is_zero(img)) a_zero = false;
    if (a_zero) throw NotParabolic("a = 0 gives a translation group");
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) throw NonFreeSpec("normalization needs a free spec");
    if (spec.rank() != 1)
        throw InternalCheckFailure("free 4-dimensional spec with a != 0 must have rank 1");

    const QuadraticSpace& sp = spec.space;
    const Vec& e1_in = spec.lattice_basis[0];
    const Vec& ae1 = spec.a_images[0];

    // 1) Origin shift to c v1 removes the quadratic translation terms; the
    //    lattice generator becomes e1 + c a e1 with l(a e1', e1') = 0.
    Rat c = -sp.eval(ae1, e1_in) / sp.norm(ae1);
    Vec e1 = vadd(e1_in, vscale(c, ae1));
    if (sgn(sp.eval(ae1, e1)) != 0)
        throw InternalCheckFailure("origin shift failed to kill the quadratic terms");

    // 2) Metric rescale: rho l gives the generator unit spacelike length.
    Rat rho = Rat(-1) / sp.norm(e1);
    // In the rescaled description v1 -> v1 / rho and a -> a / rho.
    Vec v1_2 = vscale(Rat(1) / rho, spec.v1);
    Vec ae1_2 = vscale(Rat(1) / rho, ae1);
    Mat gram2 = scale(rho, sp.gram);

    // 3) t^2 (rho l)(a2 e1, a2 e1) = -1.
    Rat a2_norm = rho * sp.norm(ae1_2);  // (rho l)(a2 e1, a2 e1)
    Rat t2 = Rat(-1) / a2_norm;
    if (sgn(t2) <= 0) throw InternalCheckFailure("normalization scale must be positive");
    Surd t = Surd::sqrt_of(t2);
    Surd t_inv = Surd(Rat(1)) / t;

    Normalization out;
    out.scale = t;
    out.metric_scale = rho;

    // 4) New basis: e0' = v0 / t, e1' = e1, e2' = t a2 e1, e3' = t v1_2.
    SurdVec b0(4), b1 = lift(e1), b2(4), b3(4);
    for (int i = 0; i < 4; ++i) {
        b0[static_cast<size_t>(i)] = Surd(spec.v0[static_cast<size_t>(i)]) * t_inv;
        b2[static_cast<size_t>(i)] = Surd(ae1_2[static_cast<size_t>(i)]) * t;
        b3[static_cast<size_t>(i)] = Surd(v1_2[static_cast<size_t>(i)]) * t;
    }
    out.basis = {b0, b1, b2, b3};

    auto record = [&](bool ok, const std::string& what) {
        out.verification.push_back((ok ? "ok: " : "FAIL: ") + what);
        if (!ok) throw InternalCheckFailure("normalization verification failed: " + what);
    };

    // Gram of the rescaled form in the new basis must be the Example gram.
    Mat target = example_gram();
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Surd got = eval_surd(gram2, out.basis[static_cast<size_t>(i)],
                                 out.basis[static_cast<size_t>(j)]);
            if (!(got == Surd(target.at(i, j))))
                record(false, "gram entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    record(true, "rescaled form matches the target frame");
    record(sp.norm(e1) * rho == Rat(-1), "l(e1, e1) = -1 after rescale");
    record(t2 * a2_norm == Rat(-1), "t^2 l(a e1, a e1) = -1");

    // The shifted generator in the new basis must be the unit generator:
    // linear part with the closed matrix form, translation e1.
    AffineIsometry gen = build_group(spec).gens[0];
    Vec tau_shifted = vadd(gen.translation,
                           vsub(mul(gen.linear, vscale(c, spec.v1)), vscale(c, spec.v1)));
    SurdMat p = surd_mat_from_columns(out.basis);
    SurdMat p_inv = surd_inverse(p);
    SurdMat lam_new = mul(p_inv, mul(lift(gen.linear), p));
    AffineIsometry unit = element(1);
    bool lam_ok = true;
    for (int i = 0; i < 4 && lam_ok; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(lam_new.at(i, j) == Surd(unit.linear.at(i, j)))) {
                lam_ok = false;
                break;
            }
    record(lam_ok, "linear part equals the unit generator matrix in the new basis");
    SurdVec tau_new = mul(p_inv, lift(tau_shifted));
    bool tau_ok = true;
    for (int i = 0; i < 4; ++i)
        if (!(tau_new[static_cast<size_t>(i)] == Surd(unit.translation[static_cast<size_t>(i)])))
            tau_ok = false;
    record(tau_ok, "translation equals e1 in the new basis");
    return out;
}

}  // namespace lorq::example4d
