#include "lorq/isometry.hpp"

#include "lorq/errors.hpp"

namespace lorq {

bool is_causal_isometry(const QuadraticSpace& space, const AffineIsometry& g) {
    if (g.linear.rows != space.dim || g.linear.cols != space.dim) return false;
    if (static_cast<int>(g.translation.size()) != space.dim) return false;
    Mat gtGg = mul(transpose(g.linear), mul(space.gram, g.linear));
    if (!(gtGg == space.gram)) return false;
    return is_future(cone_classify(space, mul(g.linear, space.cone_selector)));
}

void validate_isometry(const QuadraticSpace& space, const AffineIsometry& g) {
    if (g.linear.rows != space.dim || g.linear.cols != space.dim ||
        static_cast<int>(g.translation.size()) != space.dim)
        throw DimensionMismatch("isometry must match the ambient dimension");
    Mat gtGg = mul(transpose(g.linear), mul(space.gram, g.linear));
    if (!(gtGg == space.gram))
        throw NotACausalIsometry("linear part does not preserve the form");
    if (!is_future(cone_classify(space, mul(g.linear, space.cone_selector))))
        throw NotACausalIsometry("linear part does not preserve the selected cone");
}

AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b) {
    return AffineIsometry{mul(a.linear, b.linear),
                          vadd(mul(a.linear, b.translation), a.translation)};
}

AffineIsometry inverse_isometry(const AffineIsometry& g) {
    auto inv = inverse(g.linear);
    if (!inv) throw Error("isometry linear part is singular");
    return AffineIsometry{*inv, vneg(mul(*inv, g.translation))};
}

AffineIsometry identity_isometry(int dim) {
    return AffineIsometry{Mat::identity(dim), zero_vec(dim)};
}

Vec apply_isometry(const AffineIsometry& g, const Vec& v) {
    return vadd(mul(g.linear, v), g.translation);
}

Subspace fixed_space(const Mat& g) {
    if (g.rows != g.cols) throw DimensionMismatch("fixed space of non-square matrix");
    return Subspace{kernel_basis(sub(g, Mat::identity(g.rows)))};
}

Subspace displacement_space(const Mat& g) {
    if (g.rows != g.cols) throw DimensionMismatch("displacement space of non-square matrix");
    Mat d = sub(g, Mat::identity(g.rows));
    Subspace out{column_space_basis(d)};
    if (fixed_space(g).dim() + out.dim() != g.rows)
        throw InternalCheckFailure("rank-nullity failed for displacement space");
    return out;
}

std::string to_string(IsometryClass::Tag t) {
    switch (t) {
        case IsometryClass::Tag::Elliptic: return "Elliptic";
        case IsometryClass::Tag::Parabolic: return "Parabolic";
        case IsometryClass::Tag::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

namespace {

Vec future_null_eigenvector(const QuadraticSpace& space, const Mat& g, const Rat& mu) {
    Mat shifted = g;
    for (int i = 0; i < g.rows; ++i) shifted.at(i, i) -= mu;
    auto kb = kernel_basis(shifted);
    if (kb.empty()) throw InternalCheckFailure("eigenvalue without eigenvector");
    for (const Vec& v : kb) {
        ConeClass c = cone_classify(space, v);
        if (c == ConeClass::BoundaryFuture) return v;
        if (c == ConeClass::BoundaryPast) return vneg(v);
    }
    // An eigenvector for real mu != +-1 of a form-preserving map is null, so
    // some kernel vector must classify on the boundary.
    throw InternalCheckFailure("hyperbolic eigenvector not on the cone boundary");
}

}  // namespace

IsometryClass classify_isometry(const QuadraticSpace& space, const Mat& g) {
    validate_isometry(space, AffineIsometry{g, zero_vec(space.dim)});
    IsometryClass out;

    Subspace fixed = fixed_space(g);
    if (auto pos = positive_direction(space, fixed)) {
        out.tag = IsometryClass::Tag::Elliptic;
        Vec w = *pos;
        if (sgn(space.eval(w, space.cone_selector)) < 0) w = vneg(w);
        out.elliptic_fixed_point = w;
        return out;
    }

    Poly p = char_poly(g);
    remove_root(p, Rat(1));
    remove_root(p, Rat(-1));
    if (p.degree() >= 1) {
        Poly sf = squarefree_part(p);
        SturmChain ch = sturm_chain(sf);
        if (count_real_roots(ch, Rat(0), std::nullopt) > 0) {
            out.tag = IsometryClass::Tag::Hyperbolic;
            HyperbolicCertificate cert;
            // Certify with the expanding eigenvalue (mu and 1/mu pair up).
            std::vector<Rat> rroots = rational_roots(sf);
            for (auto it = rroots.rbegin(); it != rroots.rend(); ++it) {
                if (sgn(*it) <= 0 || *it == 1) continue;
                cert.rational = true;
                cert.mu = *it;
                cert.eigenvector = future_null_eigenvector(space, g, *it);
                cert.factor = Poly::linear_root(*it);
                break;
            }
            if (!cert.rational) {
                for (const auto& [lo, hi] : isolate_real_roots(sf)) {
                    if (sgn(hi) <= 0) continue;
                    cert.factor = sf;
                    cert.lo = lo;
                    cert.hi = hi;
                    break;
                }
            }
            out.hyperbolic = std::move(cert);
            return out;
        }
        // A cone-preserving non-elliptic map with real eigenvalues off {1,-1}
        // must have a positive one; none positive means none at all.
        if (count_real_roots(ch, std::nullopt, std::nullopt) > 0)
            throw InternalCheckFailure("negative real eigenvalue without a positive partner");
    }
    out.tag = IsometryClass::Tag::Parabolic;
    return out;
}

GroupGenerators GroupGenerators::create(QuadraticSpace space, std::vector<AffineIsometry> gens) {
    if (gens.empty()) throw SpecInvalid({"generator list must be nonempty"});
    for (const AffineIsometry& g : gens) validate_isometry(space, g);
    GroupGenerators gg;
    gg.space = std::move(space);
    gg.gens = std::move(gens);
    return gg;
}

Subspace common_fixed_space(const GroupGenerators& gg) {
    std::vector<Vec> rows;
    Mat id = Mat::identity(gg.space.dim);
    for (const AffineIsometry& g : gg.gens) {
        Mat d = sub(g.linear, id);
        for (int i = 0; i < d.rows; ++i) rows.push_back(row(d, i));
    }
    return Subspace{kernel_basis(mat_from_rows(rows))};
}

EllipticityResult ellipticity_check(const GroupGenerators& gg) {
    EllipticityResult out;
    Subspace f = common_fixed_space(gg);
    if (auto pos = positive_direction(gg.space, f)) {
        out.elliptic = true;
        Vec w = *pos;
        if (sgn(gg.space.eval(w, gg.space.cone_selector)) < 0) w = vneg(w);
        out.certificate = w;
    }
    return out;
}

Mat nu_transform(const QuadraticSpace& space, const Vec& v0, const Vec& v1, const Vec& x) {
    auto require = [&](bool ok, const std::string& eq) {
        if (!ok) throw PreconditionViolated(eq);
    };
    require(sgn(space.norm(v0)) == 0, "l(v0,v0) = 0");
    require(sgn(space.norm(v1)) == 0, "l(v1,v1) = 0");
    require(space.eval(v0, v1) == 1, "l(v0,v1) = 1");
    require(sgn(space.eval(x, v0)) == 0, "l(x,v0) = 0");
    require(sgn(space.eval(x, v1)) == 0, "l(x,v1) = 0");

    int n = space.dim;
    Rat xx = space.norm(x);
    Mat m(n, n);
    for (int j = 0; j < n; ++j) {
        Vec e = unit_vec(n, j);
        Rat l0 = space.eval(e, v0);
        // v + l0(v) x - (l(v,x) + l0(v) l(x,x)/2) v0
        Vec img = vadd(e, vscale(l0, x));
        Rat coeff = space.eval(e, x) + l0 * xx / 2;
        img = vsub(img, vscale(coeff, v0));
        for (int i = 0; i < n; ++i) m.at(i, j) = img[static_cast<size_t>(i)];
    }

    // Postconditions from the construction.
    if (!(mul(transpose(m), mul(space.gram, m)) == space.gram))
        throw InternalCheckFailure("nu image not form-preserving");
    Mat d = sub(m, Mat::identity(n));
    if (!is_zero(mat_pow(d, 3))) throw InternalCheckFailure("nu image not unipotent of index <= 3");
    if (!(mul(m, v0) == v0)) throw InternalCheckFailure("nu image moves v0");
    return m;
}

SemidirectMetric semidirect_metric(const QuadraticSpace& space, const Vec& v0) {
    if (cone_classify(space, v0) != ConeClass::InteriorFuture)
        throw PreconditionViolated("v0 in Int C");
    // H_t = t (G v0)(G v0)^T - G, monotone in t, positive definite for large t.
    Vec gv0 = mul(space.gram, v0);
    Mat p(space.dim, space.dim);
    for (int i = 0; i < space.dim; ++i)
        for (int j = 0; j < space.dim; ++j)
            p.at(i, j) = gv0[static_cast<size_t>(i)] * gv0[static_cast<size_t>(j)];
    auto form_at = [&](unsigned long t) { return sub(scale(Rat(static_cast<long>(t)), p), space.gram); };
    unsigned long hi = 1;
    while (!is_positive_definite(form_at(hi))) {
        hi *= 2;
        if (hi > (1ul << 40)) throw InternalCheckFailure("no positive definite level found");
    }
    unsigned long lo = hi / 2;  // form_at(lo) not positive definite (or lo == 0)
    while (lo + 1 < hi) {
        unsigned long mid = lo + (hi - lo) / 2;
        if (is_positive_definite(form_at(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return SemidirectMetric{hi, form_at(hi)};
}

}  // namespace lorq
