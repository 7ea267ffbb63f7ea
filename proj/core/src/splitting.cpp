#include "lorq/splitting.hpp"

#include "lorq/errors.hpp"
#include "lorq/sampling.hpp"

namespace lorq {

Mat linearize(const AffineIsometry& g) {
    int n = g.linear.rows;
    if (g.linear.cols != n || static_cast<int>(g.translation.size()) != n)
        throw DimensionMismatch("linearize");
    Mat m(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = g.linear.at(i, j);
        m.at(i, n) = g.translation[static_cast<size_t>(i)];
    }
    m.at(n, n) = 1;
    return m;
}

namespace {

bool commute(const AffineIsometry& a, const AffineIsometry& b) {
    return compose(a, b) == compose(b, a);
}

Vec drop_last(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

}  // namespace

SplitResult unipotent_bounded_split(const GroupGenerators& gg) {
    const QuadraticSpace& sp = gg.space;
    int n = sp.dim;
    for (size_t i = 0; i < gg.gens.size(); ++i)
        for (size_t j = i + 1; j < gg.gens.size(); ++j)
            if (!commute(gg.gens[i], gg.gens[j]))
                throw NotAbelian(static_cast<int>(i), static_cast<int>(j));

    // Joint Fitting decomposition in V + R; exponent n+1 is a safe uniform
    // bound for the nilpotency index.
    Mat id = Mat::identity(n + 1);
    std::vector<Vec> v0_tilde;  // intersection of generalized 1-eigenspaces
    std::vector<Vec> v1_span;   // sum of the complementary images
    bool first = true;
    for (const AffineIsometry& g : gg.gens) {
        Mat p = mat_pow(sub(linearize(g), id), static_cast<unsigned>(n + 1));
        std::vector<Vec> ker = kernel_basis(p);
        v0_tilde = first ? ker : intersect_spans(v0_tilde, ker);
        v1_span = sum_spans(v1_span, column_space_basis(p));
        first = false;
    }
    if (static_cast<int>(v0_tilde.size() + v1_span.size()) != n + 1)
        throw DegenerateSplit("joint Fitting components do not fill the space");
    for (const Vec& w : v1_span)
        if (sgn(w.back()) != 0)
            throw DegenerateSplit("bounded component leaves the linear hyperplane");

    // Affine slice of V0~: vectors with last coordinate 1.
    std::optional<Vec> point;
    std::vector<Vec> v0_basis;
    {
        // Solve sum c_i w_i with last coordinate 1 over the V0~ basis.
        Mat last_row(1, static_cast<int>(v0_tilde.size()));
        for (size_t i = 0; i < v0_tilde.size(); ++i)
            last_row.at(0, static_cast<int>(i)) = v0_tilde[i].back();
        auto c = solve(last_row, Vec{Rat(1)});
        if (!c) throw DegenerateSplit("no affine base point in the unipotent component");
        Vec pt = zero_vec(n + 1);
        for (size_t i = 0; i < v0_tilde.size(); ++i) pt = vadd(pt, vscale((*c)[i], v0_tilde[i]));
        point = drop_last(pt);
        for (const Vec& kv : kernel_basis(last_row)) {
            Vec w = zero_vec(n + 1);
            for (size_t i = 0; i < v0_tilde.size(); ++i) w = vadd(w, vscale(kv[i], v0_tilde[i]));
            v0_basis.push_back(drop_last(w));
        }
        v0_basis = independent_subset(v0_basis);
    }

    SplitResult out;
    out.v0_part = Subspace::from(v0_basis);
    std::vector<Vec> v1_basis;
    for (const Vec& w : v1_span) v1_basis.push_back(drop_last(w));
    out.v1_part = Subspace::from(independent_subset(v1_basis));
    // Deterministic base point: canonical representative of the coset
    // point + V0 (pivot coordinates cleared).
    out.base_point = reduce_mod_span(out.v0_part.basis, *point);

    // SplitResult invariants.
    if (out.v0_part.dim() + out.v1_part.dim() != n)
        throw DegenerateSplit("component dimensions do not add up");
    if (!intersect_spans(out.v0_part.basis, out.v1_part.basis).empty())
        throw DegenerateSplit("components intersect nontrivially");
    for (const Vec& a : out.v0_part.basis)
        for (const Vec& b : out.v1_part.basis)
            if (sgn(sp.eval(a, b)) != 0)
                throw DegenerateSplit("decomposition is not orthogonal for the form");
    {
        Signature s0 = restricted_signature(sp, out.v0_part);
        if (!(s0.pos == 1 && s0.zero == 0))
            throw DegenerateSplit("form is not Lorentzian on the unipotent component");
        Signature s1 = restricted_signature(sp, out.v1_part);
        if (!(s1.pos == 0 && s1.zero == 0))
            throw DegenerateSplit("form is not negative definite on the bounded component");
    }
    for (const AffineIsometry& g : gg.gens) {
        // U = base_point + V0 is invariant and the action on it unipotent.
        Vec moved = vsub(apply_isometry(g, out.base_point), out.base_point);
        if (!out.v0_part.contains(moved))
            throw DegenerateSplit("base point leaves the invariant affine subspace");
        for (const Vec& b : out.v0_part.basis) {
            Vec img = mul(g.linear, b);
            if (!out.v0_part.contains(img))
                throw DegenerateSplit("unipotent component is not invariant");
        }
        for (const Vec& b : out.v1_part.basis)
            if (!out.v1_part.contains(mul(g.linear, b)))
                throw DegenerateSplit("bounded component is not invariant");
    }
    if (!out.v0_part.basis.empty()) {
        // Unipotence on V0: (g - 1)^{n} kills the component.
        for (const AffineIsometry& g : gg.gens) {
            Mat d = mat_pow(sub(g.linear, Mat::identity(n)), static_cast<unsigned>(n));
            for (const Vec& b : out.v0_part.basis)
                if (!is_zero(mul(d, b)))
                    throw DegenerateSplit("action on the unipotent component is not unipotent");
        }
    }
    if (out.v1_part.dim() > 0) {
        // No common fixed vector inside V1 (it would belong to V0).
        std::vector<Vec> rows;
        for (const AffineIsometry& g : gg.gens) {
            Mat d = sub(g.linear, Mat::identity(n));
            Mat dc = mul(d, mat_from_columns(out.v1_part.basis));
            for (int i = 0; i < dc.rows; ++i) rows.push_back(row(dc, i));
        }
        if (!kernel_basis(mat_from_rows(rows)).empty())
            throw DegenerateSplit("bounded component contains a common fixed vector");
    }
    return out;
}

LevelHomomorphism level_homomorphism(const GroupGenerators& gg, const Vec& v0) {
    for (size_t i = 0; i < gg.gens.size(); ++i)
        if (!(mul(gg.gens[i].linear, v0) == v0))
            throw PreconditionViolated("g" + std::to_string(i) + " v0 = v0");
    LevelHomomorphism out;
    out.values.reserve(gg.gens.size());
    for (const AffineIsometry& g : gg.gens)
        out.values.push_back(gg.space.eval(g.translation, v0));
    // Additivity spot-check on random short words.
    Sampler sampler(0xadd17e);
    for (int trial = 0; trial < 8; ++trial) {
        AffineIsometry w = identity_isometry(gg.space.dim);
        Rat expected(0);
        for (int step = 0; step < 4; ++step) {
            size_t pick = static_cast<size_t>(sampler.uniform(0, static_cast<long>(gg.gens.size()) - 1));
            bool inv = sampler.uniform(0, 1) == 1;
            const AffineIsometry& gen = gg.gens[pick];
            w = compose(w, inv ? inverse_isometry(gen) : gen);
            expected += inv ? -out.values[pick] : out.values[pick];
        }
        if (gg.space.eval(w.translation, v0) != expected)
            throw InternalCheckFailure("level homomorphism fails additivity");
    }
    return out;
}

}  // namespace lorq
