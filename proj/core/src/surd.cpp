#include "lorq/surd.hpp"

#include "lorq/errors.hpp"

namespace lorq {

namespace {

// n = s^2 * f with f square-free; returns (s, f). Trial division; the inputs
// here are desk-scale normalization constants.
std::pair<Int, Int> extract_square(Int n) {
    if (sgn(n) <= 0) throw Error("square extraction needs a positive integer");
    Int s(1), f(1);
    Int p(2);
    unsigned long steps = 0;
    while (p * p <= n) {
        if (++steps > 2000000ul) throw Error("radicand too large to normalize");
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) s *= p;
            if (e % 2) f *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    f *= n;
    return {s, f};
}

}  // namespace

Surd::Surd(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (sgn(d) <= 0) throw Error("radicand must be positive");
    if (sgn(b) == 0) d = 1;
    if (d == 1) {
        a += b;
        b = 0;
    }
}

Surd Surd::sqrt_of(const Rat& nonneg) {
    if (sgn(nonneg) < 0) throw Error("sqrt of negative rational");
    if (sgn(nonneg) == 0) return Surd(Rat(0));
    // sqrt(p/q) = sqrt(p q) / q.
    Int pq = nonneg.get_num() * nonneg.get_den();
    auto [s, f] = extract_square(pq);
    Rat coeff = Rat(s) / Rat(nonneg.get_den());
    if (f == 1) return Surd(coeff);
    return Surd(Rat(0), coeff, f);
}

int Surd::sign() const {
    if (sgn(b) == 0) return sgn(a);
    if (sgn(a) == 0) return sgn(b);
    if (sgn(a) == sgn(b)) return sgn(a);
    // Opposite signs: the rational part wins iff a^2 > b^2 d. Equality would
    // force sqrt(d) rational, impossible for square-free d > 1.
    Rat lhs = a * a, rhs = b * b * Rat(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sgn(a) : sgn(b);
}

bool Surd::operator==(const Surd& o) const {
    return (*this - o).is_zero();
}

namespace {
Int common_radicand(const Surd& x, const Surd& y) {
    if (x.d == y.d) return x.d;
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    throw Error("mixed radicands " + x.d.get_str() + " and " + y.d.get_str());
}
}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
    Int d = common_radicand(x, y);
    return Surd(x.a + y.a, x.b + y.b, d);
}

Surd operator-(const Surd& x, const Surd& y) {
    Int d = common_radicand(x, y);
    return Surd(x.a - y.a, x.b - y.b, d);
}

Surd operator*(const Surd& x, const Surd& y) {
    Int d = common_radicand(x, y);
    return Surd(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
}

Surd operator/(const Surd& x, const Surd& y) {
    if (y.is_zero()) throw Error("surd division by zero");
    Int d = common_radicand(x, y);
    Rat denom = y.a * y.a - y.b * y.b * Rat(d);
    if (sgn(denom) == 0) throw Error("surd conjugate norm vanishes");
    Surd conj(y.a, -y.b, d);
    Surd num = x * conj;
    return Surd(num.a / denom, num.b / denom, d);
}

std::string surd_to_string(const Surd& s) {
    if (s.is_rational()) return rat_to_string(s.a);
    return rat_to_string(s.a) + "+" + rat_to_string(s.b) + "*sqrt(" + s.d.get_str() + ")";
}

SurdMat SurdMat::identity(int n) {
    SurdMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Surd(Rat(1));
    return m;
}

SurdMat mul(const SurdMat& x, const SurdMat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("surd matrix product");
    SurdMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            Surd acc;
            for (int k = 0; k < x.cols; ++k) acc = acc + x.at(i, k) * y.at(k, j);
            z.at(i, j) = acc;
        }
    return z;
}

SurdVec mul(const SurdMat& m, const SurdVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("surd matrix-vector product");
    SurdVec out(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Surd acc;
        for (int j = 0; j < m.cols; ++j) acc = acc + m.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

SurdMat surd_mat_from_columns(const std::vector<SurdVec>& cols) {
    if (cols.empty()) return SurdMat(0, 0);
    SurdMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return m;
}

SurdMat surd_inverse(const SurdMat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("surd inverse");
    int n = m.rows;
    SurdMat w = m;
    SurdMat inv = SurdMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error("surd matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Surd p = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = w.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            Surd f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace lorq
