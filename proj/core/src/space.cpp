#include "lorq/space.hpp"

#include "lorq/errors.hpp"

namespace lorq {

QuadraticSpace QuadraticSpace::create(Mat gram, Vec cone_selector) {
    std::vector<std::string> bad;
    int n = gram.rows;
    if (n < 1 || gram.cols != n) bad.push_back("gram must be square and nonempty");
    if (static_cast<int>(cone_selector.size()) != n)
        bad.push_back("coneSelector length must equal dim");
    if (bad.empty()) {
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = i + 1; j < n; ++j)
                if (gram.at(i, j) != gram.at(j, i)) {
                    bad.push_back("gram not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
                    break;
                }
    }
    if (bad.empty()) {
        Signature s = signature_of_symmetric(gram);
        if (!(s.pos == 1 && s.zero == 0 && s.neg == n - 1))
            bad.push_back("signature must be (1, 0, " + std::to_string(n - 1) + "), got (" +
                          std::to_string(s.pos) + ", " + std::to_string(s.zero) + ", " +
                          std::to_string(s.neg) + ")");
    }
    QuadraticSpace space;
    space.dim = n;
    space.gram = std::move(gram);
    space.cone_selector = std::move(cone_selector);
    if (bad.empty() && sgn(space.eval(space.cone_selector, space.cone_selector)) <= 0)
        bad.push_back("coneSelector must satisfy l(c,c) > 0");
    if (!bad.empty()) throw SpecInvalid(std::move(bad));
    return space;
}

Rat QuadraticSpace::eval(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
        throw DimensionMismatch("form arguments must have length " + std::to_string(dim));
    Rat acc(0);
    for (int i = 0; i < dim; ++i) {
        if (sgn(u[static_cast<size_t>(i)]) == 0) continue;
        Rat rowsum(0);
        for (int j = 0; j < dim; ++j)
            if (sgn(gram.at(i, j)) != 0) rowsum += gram.at(i, j) * v[static_cast<size_t>(j)];
        acc += u[static_cast<size_t>(i)] * rowsum;
    }
    return acc;
}

std::string to_string(ConeClass c) {
    switch (c) {
        case ConeClass::InteriorFuture: return "InteriorFuture";
        case ConeClass::BoundaryFuture: return "BoundaryFuture";
        case ConeClass::InteriorPast: return "InteriorPast";
        case ConeClass::BoundaryPast: return "BoundaryPast";
        case ConeClass::Spacelike: return "Spacelike";
        case ConeClass::Zero: return "Zero";
    }
    return "?";
}

ConeClass cone_classify(const QuadraticSpace& space, const Vec& v) {
    if (static_cast<int>(v.size()) != space.dim)
        throw DimensionMismatch("cone_classify argument");
    if (is_zero(v)) return ConeClass::Zero;
    int nn = sgn(space.norm(v));
    if (nn < 0) return ConeClass::Spacelike;
    int ori = sgn(space.eval(v, space.cone_selector));
    // A nonzero vector of the double cone cannot be selector-orthogonal: the
    // selector is interior, so this would contradict the Lorentz signature.
    if (ori == 0) throw InternalCheckFailure("causal vector orthogonal to cone selector");
    if (nn > 0) return ori > 0 ? ConeClass::InteriorFuture : ConeClass::InteriorPast;
    return ori > 0 ? ConeClass::BoundaryFuture : ConeClass::BoundaryPast;
}

Subspace Subspace::from(std::vector<Vec> vectors) {
    if (!vectors_independent(vectors))
        throw SpecInvalid({"subspace basis vectors are linearly dependent"});
    Subspace s;
    s.basis = std::move(vectors);
    return s;
}

Subspace Subspace::spanning(const std::vector<Vec>& vectors) {
    Subspace s;
    s.basis = independent_subset(vectors);
    return s;
}

Mat restricted_gram(const QuadraticSpace& space, const Subspace& sub) {
    int k = sub.dim();
    Mat q(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            q.at(i, j) = space.eval(sub.basis[static_cast<size_t>(i)],
                                    sub.basis[static_cast<size_t>(j)]);
            q.at(j, i) = q.at(i, j);
        }
    return q;
}

Signature restricted_signature(const QuadraticSpace& space, const Subspace& sub) {
    for (const Vec& b : sub.basis)
        if (static_cast<int>(b.size()) != space.dim)
            throw DimensionMismatch("subspace vectors must live in the ambient space");
    return signature_of_symmetric(restricted_gram(space, sub));
}

bool is_spacelike(const QuadraticSpace& space, const Subspace& sub) {
    Signature s = restricted_signature(space, sub);
    return s.pos == 0 && s.zero == 0;
}

Subspace ortho_complement(const QuadraticSpace& space, const Subspace& sub) {
    if (sub.dim() == 0) {
        std::vector<Vec> full;
        for (int i = 0; i < space.dim; ++i) full.push_back(unit_vec(space.dim, i));
        return Subspace{full};
    }
    // x is orthogonal to sub iff (B^T G) x = 0.
    Mat constraints = mul(transpose(mat_from_columns(sub.basis)), space.gram);
    return Subspace{kernel_basis(constraints)};
}

std::optional<Vec> positive_direction(const QuadraticSpace& space, const Subspace& sub) {
    if (sub.dim() == 0) return std::nullopt;
    Congruence c = diagonalize_congruence(restricted_gram(space, sub));
    for (size_t i = 0; i < c.diag.size(); ++i) {
        if (sgn(c.diag[i]) <= 0) continue;
        Vec w = zero_vec(space.dim);
        for (int r = 0; r < c.s.rows; ++r)
            w = vadd(w, vscale(c.s.at(r, static_cast<int>(i)), sub.basis[static_cast<size_t>(r)]));
        return w;
    }
    return std::nullopt;
}

SupremumVerdict sup_form_on_affine(const QuadraticSpace& space, const Subspace& sub,
                                   const Vec& offset) {
    SupremumVerdict out;
    int k = sub.dim();
    if (k == 0) {
        out.kind = SupremumVerdict::Kind::Attained;
        out.value = space.norm(offset);
        out.argmax = zero_vec(space.dim);
        return out;
    }
    Mat q = restricted_gram(space, sub);
    Vec c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = space.eval(sub.basis[static_cast<size_t>(i)], offset);
    Rat c0 = space.norm(offset);

    // f(x) = x^T q x + 2 c.x + c0 over real x.
    Congruence cong = diagonalize_congruence(q);
    for (size_t i = 0; i < cong.diag.size(); ++i) {
        if (sgn(cong.diag[i]) <= 0) continue;
        Vec w = zero_vec(space.dim);
        for (int r = 0; r < k; ++r)
            w = vadd(w, vscale(cong.s.at(r, static_cast<int>(i)), sub.basis[static_cast<size_t>(r)]));
        out.kind = SupremumVerdict::Kind::Unbounded;
        out.direction = w;
        return out;
    }
    // q is negative semidefinite. A radical direction with nonzero linear term
    // makes f affine and unbounded along it.
    for (const Vec& kdir : kernel_basis(q)) {
        Rat lin(0);
        for (int i = 0; i < k; ++i) lin += c[static_cast<size_t>(i)] * kdir[static_cast<size_t>(i)];
        if (sgn(lin) != 0) {
            Vec w = zero_vec(space.dim);
            for (int i = 0; i < k; ++i)
                w = vadd(w, vscale(kdir[static_cast<size_t>(i)], sub.basis[static_cast<size_t>(i)]));
            out.kind = SupremumVerdict::Kind::Unbounded;
            out.direction = w;
            return out;
        }
    }
    // Stationarity: q x = -c is consistent (c is orthogonal to the radical),
    // and the maximum value is c.x + c0 there.
    auto x = solve(q, vneg(c));
    if (!x) throw InternalCheckFailure("stationary system inconsistent for semidefinite form");
    Rat value = c0;
    for (int i = 0; i < k; ++i) value += c[static_cast<size_t>(i)] * (*x)[static_cast<size_t>(i)];
    Vec w = zero_vec(space.dim);
    for (int i = 0; i < k; ++i)
        w = vadd(w, vscale((*x)[static_cast<size_t>(i)], sub.basis[static_cast<size_t>(i)]));
    out.kind = SupremumVerdict::Kind::Attained;
    out.value = value;
    out.argmax = w;
    return out;
}

}  // namespace lorq
