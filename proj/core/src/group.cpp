#include "lorq/group.hpp"

#include <algorithm>
#include <functional>

#include "lorq/errors.hpp"

namespace lorq {

Vec TypeIISpec::lattice_point(const Vec& coords) const {
    if (coords.size() != lattice_basis.size())
        throw DimensionMismatch("lattice coordinates must match the basis rank");
    Vec x = zero_vec(space.dim);
    for (size_t i = 0; i < coords.size(); ++i) x = vadd(x, vscale(coords[i], lattice_basis[i]));
    return x;
}

Vec TypeIISpec::apply_a(const Vec& coords) const {
    if (coords.size() != a_images.size())
        throw DimensionMismatch("lattice coordinates must match the basis rank");
    Vec ax = zero_vec(space.dim);
    for (size_t i = 0; i < coords.size(); ++i) ax = vadd(ax, vscale(coords[i], a_images[i]));
    return ax;
}

std::vector<std::string> validate_type_i(const TypeISpec& spec) {
    std::vector<std::string> bad;
    if (spec.lattice_basis.empty()) bad.push_back("lattice basis must be nonempty");
    for (const Vec& b : spec.lattice_basis)
        if (static_cast<int>(b.size()) != spec.space.dim) {
            bad.push_back("lattice vector dimension mismatch");
            return bad;
        }
    if (!vectors_independent(spec.lattice_basis))
        bad.push_back("lattice basis linearly independent fails");
    if (!bad.empty()) return bad;
    Subspace t = Subspace::from(spec.lattice_basis);
    if (!is_spacelike(spec.space, t)) bad.push_back("span of lattice is spacelike fails");
    if (bad.empty()) {
        // Orthogonal timelike line exists automatically; verify anyway.
        if (!positive_direction(spec.space, ortho_complement(spec.space, t)))
            bad.push_back("no timelike line orthogonal to the lattice span");
    }
    return bad;
}

std::vector<std::string> validate_type_ii(const TypeIISpec& spec) {
    std::vector<std::string> bad;
    int n = spec.space.dim;
    if (static_cast<int>(spec.v0.size()) != n || static_cast<int>(spec.v1.size()) != n) {
        bad.push_back("v0/v1 dimension mismatch");
        return bad;
    }
    for (const Vec& b : spec.lattice_basis)
        if (static_cast<int>(b.size()) != n) {
            bad.push_back("lattice vector dimension mismatch");
            return bad;
        }
    for (const Vec& b : spec.a_images)
        if (static_cast<int>(b.size()) != n) {
            bad.push_back("a image dimension mismatch");
            return bad;
        }
    if (spec.lattice_basis.empty()) bad.push_back("lattice basis must be nonempty");
    if (spec.a_images.size() != spec.lattice_basis.size())
        bad.push_back("aMatrix must give one image per lattice basis vector");

    const QuadraticSpace& sp = spec.space;
    if (sgn(sp.norm(spec.v0)) != 0) bad.push_back("l(v0,v0) = 0 fails");
    if (sgn(sp.norm(spec.v1)) != 0) bad.push_back("l(v1,v1) = 0 fails");
    if (sp.eval(spec.v0, spec.v1) != 1) bad.push_back("l(v0,v1) = 1 fails");
    if (!is_zero(spec.v0) && sgn(sp.norm(spec.v0)) == 0 &&
        cone_classify(sp, spec.v0) != ConeClass::BoundaryFuture)
        bad.push_back("v0 on the future cone boundary fails");
    if (is_zero(spec.v0)) bad.push_back("v0 must be nonzero");

    if (!spec.lattice_basis.empty() && !vectors_independent(spec.lattice_basis))
        bad.push_back("lattice basis linearly independent fails");

    auto in_n = [&](const Vec& v, const std::string& what) {
        if (sgn(sp.eval(v, spec.v0)) != 0) bad.push_back(what + " in v0-perp fails");
        if (sgn(sp.eval(v, spec.v1)) != 0) bad.push_back(what + " in v1-perp fails");
    };
    for (size_t i = 0; i < spec.lattice_basis.size(); ++i)
        in_n(spec.lattice_basis[i], "lattice vector " + std::to_string(i));
    for (size_t i = 0; i < spec.a_images.size(); ++i)
        in_n(spec.a_images[i], "a image " + std::to_string(i));

    if (spec.a_images.size() == spec.lattice_basis.size()) {
        for (size_t i = 0; i < spec.lattice_basis.size(); ++i)
            for (size_t j = i + 1; j < spec.lattice_basis.size(); ++j)
                if (sp.eval(spec.a_images[i], spec.lattice_basis[j]) !=
                    sp.eval(spec.lattice_basis[i], spec.a_images[j]))
                    bad.push_back("l(a x, y) = l(x, a y) fails for basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return bad;
}

namespace {
void require_valid(const TypeIISpec& spec) {
    auto bad = validate_type_ii(spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
}
}  // namespace

ASplit split_a(const TypeIISpec& spec) {
    require_valid(spec);
    int k = spec.rank();
    Subspace t = Subspace::from(spec.lattice_basis);
    Mat gram_t = restricted_gram(spec.space, t);
    auto gram_inv = inverse(gram_t);
    if (!gram_inv) throw InternalCheckFailure("lattice span carries a degenerate form");
    ASplit out;
    out.a_prime = Mat(k, k);
    out.a_dprime_images.resize(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        Vec rhs(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            rhs[static_cast<size_t>(i)] =
                spec.space.eval(spec.lattice_basis[static_cast<size_t>(i)],
                                spec.a_images[static_cast<size_t>(j)]);
        Vec alpha = mul(*gram_inv, rhs);
        Vec proj = zero_vec(spec.space.dim);
        for (int i = 0; i < k; ++i) {
            out.a_prime.at(i, j) = alpha[static_cast<size_t>(i)];
            proj = vadd(proj, vscale(alpha[static_cast<size_t>(i)],
                                     spec.lattice_basis[static_cast<size_t>(i)]));
        }
        out.a_dprime_images[static_cast<size_t>(j)] =
            vsub(spec.a_images[static_cast<size_t>(j)], proj);
    }
    // Re-verify the split invariants.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (sgn(spec.space.eval(out.a_dprime_images[static_cast<size_t>(j)],
                                    spec.lattice_basis[static_cast<size_t>(i)])) != 0)
                throw InternalCheckFailure("a'' image not orthogonal to T");
    Mat sym = mul(gram_t, out.a_prime);
    if (!(sym == transpose(sym))) throw InternalCheckFailure("a' not self-adjoint on T");
    return out;
}

namespace {

// Determinant of a small matrix of polynomials, Laplace expansion along the
// first column. Sizes here are the lattice rank (<= 4 at desk scale).
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(Rat(1));
    if (n == 1) return m[0][0];
    Poly acc;
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Poly> row(m[r].begin() + 1, m[r].end());
            minor.push_back(std::move(row));
        }
        Poly term = pmul(m[i][0], poly_det(minor));
        acc = (i % 2 == 0) ? padd(acc, term) : psub(acc, term);
    }
    return acc;
}

void enumerate_combinations(int n, int k, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& fn, int start) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        enumerate_combinations(n, k, cur, fn, i + 1);
        cur.pop_back();
    }
}

}  // namespace

FreenessReport freeness_check(const TypeIISpec& spec) {
    ASplit as = split_a(spec);
    int k = spec.rank();

    // Stacked system: (a' - s) on top of independent a''-constraint rows.
    std::vector<std::vector<Poly>> stacked;
    for (int i = 0; i < k; ++i) {
        std::vector<Poly> row;
        row.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            Poly e = Poly::constant(as.a_prime.at(i, j));
            if (i == j) e = psub(e, Poly({Rat(0), Rat(1)}));
            row.push_back(std::move(e));
        }
        stacked.push_back(std::move(row));
    }
    Mat dpp = mat_from_columns(as.a_dprime_images);
    Rref rr = rref(dpp);
    for (int i = 0; i < rr.rank; ++i) {
        std::vector<Poly> row;
        row.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) row.push_back(Poly::constant(rr.r.at(i, j)));
        stacked.push_back(std::move(row));
    }

    Poly gcd_poly;
    std::vector<int> cur;
    int total_rows = static_cast<int>(stacked.size());
    enumerate_combinations(total_rows, k, cur, [&](const std::vector<int>& rows) {
        std::vector<std::vector<Poly>> sq;
        sq.reserve(rows.size());
        for (int r : rows) sq.push_back(stacked[static_cast<size_t>(r)]);
        Poly d = poly_det(sq);
        if (!d.is_zero()) gcd_poly = gcd_poly.is_zero() ? pscale(Rat(1) / d.leading(), d)
                                                        : pgcd(gcd_poly, d);
    }, 0);

    FreenessReport report;
    if (gcd_poly.is_zero())
        throw InternalCheckFailure("all maximal minors vanish identically");
    report.minor_gcd = primitive_integer_part(gcd_poly);

    Poly d = report.minor_gcd;
    remove_root(d, Rat(0));  // s = 0 is never a failure: (1 + 0 a) = 1
    Poly sf = squarefree_part(d);
    int real_roots = d.degree() >= 1
                         ? count_real_roots(sturm_chain(sf), std::nullopt, std::nullopt)
                         : 0;
    if (real_roots == 0) {
        report.free = true;
        return report;
    }

    report.free = false;
    FreenessWitness w;
    std::vector<Rat> rroots = rational_roots(sf);
    std::erase_if(rroots, [](const Rat& r) { return sgn(r) == 0; });
    if (!rroots.empty()) {
        Rat s = rroots.front();
        w.rational_t = true;
        w.t = Rat(-1) / s;
        w.factor = Poly::linear_root(s);
        // Kernel of the stacked system at s: eigenvector of a' in ker(a'').
        std::vector<Vec> rows;
        for (int i = 0; i < k; ++i) {
            Vec rvec(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j) {
                rvec[static_cast<size_t>(j)] = as.a_prime.at(i, j);
                if (i == j) rvec[static_cast<size_t>(j)] -= s;
            }
            rows.push_back(std::move(rvec));
        }
        for (int i = 0; i < rr.rank; ++i) rows.push_back(row(rr.r, i));
        auto kb = kernel_basis(mat_from_rows(rows));
        if (kb.empty()) throw InternalCheckFailure("minor gcd root without kernel vector");
        w.x = spec.lattice_point(kb.front());
        // Re-verify (1 + t a) x = 0.
        Vec check = vadd(w.x, vscale(w.t, spec.apply_a(kb.front())));
        if (!is_zero(check)) throw InternalCheckFailure("freeness witness fails re-verification");
    } else {
        auto intervals = isolate_real_roots(sf);
        if (intervals.empty())
            throw InternalCheckFailure("real roots counted but none isolated");
        auto [lo, hi] = intervals.front();
        // Refine until the interval lies strictly on one side of 0 (the
        // s = 0 roots were divided out, so this terminates).
        SturmChain ch = sturm_chain(sf);
        while (!(sgn(lo) == sgn(hi) && sgn(lo) != 0)) {
            Rat mid = (lo + hi) / 2;
            if (count_real_roots(ch, lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
        w.rational_t = false;
        w.factor = sf;
        w.s_lo = lo;
        w.s_hi = hi;
        Rat a = Rat(-1) / lo, b = Rat(-1) / hi;
        w.t_lo = std::min(a, b);
        w.t_hi = std::max(a, b);
    }
    report.witness = std::move(w);
    return report;
}

GroupGenerators build_group(const TypeISpec& spec) {
    auto bad = validate_type_i(spec);
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    std::vector<AffineIsometry> gens;
    gens.reserve(spec.lattice_basis.size());
    for (const Vec& b : spec.lattice_basis)
        gens.push_back(AffineIsometry{Mat::identity(spec.space.dim), b});
    return GroupGenerators::create(spec.space, std::move(gens));
}

GroupGenerators build_group(const TypeIISpec& spec, bool allow_non_free) {
    require_valid(spec);
    if (!allow_non_free) {
        FreenessReport fr = freeness_check(spec);
        if (!fr.free) throw NonFreeSpec("freeness condition fails; pass allow_non_free to study it");
    }
    std::vector<AffineIsometry> gens;
    Vec coords = zero_vec(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) {
        coords[static_cast<size_t>(i)] = 1;
        gens.push_back(group_element_continuous(spec, coords));
        coords[static_cast<size_t>(i)] = 0;
    }
    return GroupGenerators::create(spec.space, std::move(gens));
}

AffineIsometry group_element_continuous(const TypeIISpec& spec, const Vec& coords) {
    Vec x = spec.lattice_point(coords);
    Vec ax = spec.apply_a(coords);
    Mat lin = nu_transform(spec.space, spec.v0, spec.v1, ax);
    Vec tr = vsub(x, vscale(spec.space.eval(ax, x) / 2, spec.v0));
    return AffineIsometry{std::move(lin), std::move(tr)};
}

AffineIsometry group_element(const TypeIISpec& spec, const std::vector<Int>& coeffs) {
    Vec coords(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) coords[i] = Rat(coeffs[i]);
    return group_element_continuous(spec, coords);
}

OrbitRep orbit_representative(const TypeIISpec& spec, const Vec& v) {
    require_valid(spec);
    FreenessReport fr = freeness_check(spec);
    if (!fr.free) throw NonFreeSpec("orbit sections need a free action");

    const QuadraticSpace& sp = spec.space;
    Rat t = spec.level(v);
    int k = spec.rank();

    // Images of the lattice basis under (1 + t a); independent by freeness.
    std::vector<Vec> ut(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        ut[static_cast<size_t>(i)] = vadd(spec.lattice_basis[static_cast<size_t>(i)],
                                          vscale(t, spec.a_images[static_cast<size_t>(i)]));

    // N-component of v.
    Rat beta = sp.eval(v, spec.v1);
    Vec wn = vsub(vsub(v, vscale(t, spec.v1)), vscale(beta, spec.v0));

    // Orthogonal projection of wn onto span(ut); solve the Gram system.
    Mat gram_u(k, k);
    Vec rhs(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            gram_u.at(i, j) = sp.eval(ut[static_cast<size_t>(i)], ut[static_cast<size_t>(j)]);
            gram_u.at(j, i) = gram_u.at(i, j);
        }
        rhs[static_cast<size_t>(i)] = sp.eval(ut[static_cast<size_t>(i)], wn);
    }
    auto alpha = solve(gram_u, rhs);
    if (!alpha) throw InternalCheckFailure("section Gram system inconsistent under freeness");

    // u + (1 + t a)x = 0 with u = sum alpha_i ut_i gives x = -sum alpha_i b_i.
    Vec x_coords = vneg(*alpha);
    AffineIsometry g = group_element_continuous(spec, x_coords);
    OrbitRep out{apply_isometry(g, v), x_coords};

    if (spec.level(out.rep) != t)
        throw InternalCheckFailure("orbit representative left its level set");
    for (int i = 0; i < k; ++i)
        if (sgn(sp.eval(out.rep, ut[static_cast<size_t>(i)])) != 0)
            throw InternalCheckFailure("orbit representative misses the section");
    return out;
}

}  // namespace lorq
