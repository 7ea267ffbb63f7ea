#include "lorq/linalg.hpp"

#include <algorithm>

#include "lorq/errors.hpp"

namespace lorq {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            throw DimensionMismatch("ragged rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat mat_from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows)
            throw DimensionMismatch("ragged columns");
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec column(const Mat& m, int j) {
    Vec v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

Vec row(const Mat& m, int i) {
    Vec v(m.cols);
    for (int j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
    return v;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (sgn(xik) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

Vec mul(const Mat& m, const Vec& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector product");
    Vec out(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (sgn(m.at(i, j)) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

Mat add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix sum");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Mat sub(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix difference");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Mat scale(const Rat& c, const Mat& m) {
    Mat z = m;
    for (auto& e : z.a) e *= c;
    return z;
}

Mat mat_pow(const Mat& m, unsigned e) {
    if (m.rows != m.cols) throw DimensionMismatch("power of non-square matrix");
    Mat acc = Mat::identity(m.rows);
    Mat base = m;
    while (e) {
        if (e & 1u) acc = mul(acc, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return acc;
}

Vec vadd(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector sum");
    Vec z = x;
    for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
    return z;
}

Vec vsub(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector difference");
    Vec z = x;
    for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
    return z;
}

Vec vscale(const Rat& c, const Vec& x) {
    Vec z = x;
    for (auto& e : z) e *= c;
    return z;
}

Vec vneg(const Vec& x) { return vscale(Rat(-1), x); }

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rat(0)); }

Vec unit_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

bool is_zero(const Mat& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const Rat& r) { return sgn(r) == 0; });
}

Rref rref(const Mat& m) {
    Rref out;
    out.r = m;
    Mat& r = out.r;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (sgn(r.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = Rat(1) / r.at(lead, col);
        for (int j = 0; j < r.cols; ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead || sgn(r.at(i, col)) == 0) continue;
            Rat f = r.at(i, col);
            for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Rat det(const Mat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
    Mat w = m;
    Rat d(1);
    int n = w.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (sgn(w.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        Rat inv = Rat(1) / w.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (sgn(w.at(i, col)) == 0) continue;
            Rat f = w.at(i, col) * inv;
            for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec v = zero_vec(m.cols);
        v[static_cast<size_t>(free)] = 1;
        for (int p = 0; p < rr.rank; ++p)
            v[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(p)])] = -rr.r.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> column_space_basis(const Mat& m) {
    Rref rr = rref(m);
    std::vector<Vec> basis;
    for (int c : rr.pivot_cols) basis.push_back(column(m, c));
    return basis;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    if (A.rows != static_cast<int>(b.size())) throw DimensionMismatch("solve");
    Mat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[static_cast<size_t>(i)];
    }
    Rref rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == A.cols) return std::nullopt;  // inconsistent
    Vec x = zero_vec(A.cols);
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
        x[static_cast<size_t>(rr.pivot_cols[p])] = rr.r.at(static_cast<int>(p), A.cols);
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[static_cast<size_t>(n - 1)] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

bool vectors_independent(const std::vector<Vec>& vs) {
    if (vs.empty()) return true;
    return rank(mat_from_columns(vs)) == static_cast<int>(vs.size());
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    for (const Vec& v : vs) {
        if (is_zero(v)) continue;
        out.push_back(v);
        if (!vectors_independent(out)) out.pop_back();
    }
    return out;
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() || b.empty()) return {};
    // [A | -B] (x; y) = 0  =>  A x = B y spans the intersection.
    int n = static_cast<int>(a[0].size());
    Mat m(n, static_cast<int>(a.size() + b.size()));
    for (size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = a[j][static_cast<size_t>(i)];
    for (size_t j = 0; j < b.size(); ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, static_cast<int>(a.size() + j)) = -b[j][static_cast<size_t>(i)];
    std::vector<Vec> generators;
    for (const Vec& k : kernel_basis(m)) {
        Vec v = zero_vec(n);
        for (size_t j = 0; j < a.size(); ++j) v = vadd(v, vscale(k[j], a[j]));
        if (!is_zero(v)) generators.push_back(std::move(v));
    }
    return independent_subset(generators);
}

std::vector<Vec> sum_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return independent_subset(all);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return solve(mat_from_columns(basis), v).has_value();
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(mat_from_columns(basis), v);
}

Vec reduce_mod_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return v;
    // Row-echelon the basis, then clear the pivot coordinates of v.
    Rref rr = rref(mat_from_rows(basis));
    Vec out = v;
    for (int p = 0; p < rr.rank; ++p) {
        int col = rr.pivot_cols[static_cast<size_t>(p)];
        Rat f = out[static_cast<size_t>(col)];
        if (sgn(f) == 0) continue;
        for (int j = 0; j < rr.r.cols; ++j) out[static_cast<size_t>(j)] -= f * rr.r.at(p, j);
    }
    return out;
}

Congruence diagonalize_congruence(const Mat& q) {
    if (q.rows != q.cols) throw DimensionMismatch("congruence of non-square matrix");
    int n = q.rows;
    Mat w = q;
    Mat s = Mat::identity(n);
    auto swap_cols = [&](Mat& m, int i, int j) {
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    };
    auto swap_rows = [&](Mat& m, int i, int j) {
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    };
    // col_j += f * col_i applied congruently to w, tracked in s.
    auto add_col = [&](int j, int i, const Rat& f) {
        for (int r = 0; r < n; ++r) w.at(r, j) += f * w.at(r, i);
        for (int r = 0; r < n; ++r) w.at(j, r) += f * w.at(i, r);
        for (int r = 0; r < n; ++r) s.at(r, j) += f * s.at(r, i);
    };
    for (int k = 0; k < n; ++k) {
        if (sgn(w.at(k, k)) == 0) {
            int d = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(w.at(i, i)) != 0) {
                    d = i;
                    break;
                }
            if (d >= 0) {
                swap_cols(w, k, d);
                swap_rows(w, k, d);
                swap_cols(s, k, d);
            } else {
                // All remaining diagonal entries are zero; pull in an
                // off-diagonal one (Q(e_i + e_j) = 2 q_ij != 0).
                int bi = -1, bj = -1;
                for (int i = k; i < n && bi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (sgn(w.at(i, j)) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;  // remaining block is zero
                add_col(bi, bj, Rat(1));
                if (bi != k) {
                    swap_cols(w, k, bi);
                    swap_rows(w, k, bi);
                    swap_cols(s, k, bi);
                }
            }
        }
        Rat piv = w.at(k, k);
        for (int j = k + 1; j < n; ++j) {
            if (sgn(w.at(k, j)) == 0) continue;
            add_col(j, k, -w.at(k, j) / piv);
        }
    }
    Congruence out;
    out.s = s;
    out.diag.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.diag[static_cast<size_t>(i)] = w.at(i, i);
    return out;
}

Signature signature_of_symmetric(const Mat& q) {
    Congruence c = diagonalize_congruence(q);
    Signature s;
    for (const Rat& d : c.diag) {
        int sg = sgn(d);
        if (sg > 0)
            ++s.pos;
        else if (sg < 0)
            ++s.neg;
        else
            ++s.zero;
    }
    return s;
}

bool is_positive_definite(const Mat& q) {
    Signature s = signature_of_symmetric(q);
    return s.pos == q.rows && s.zero == 0 && s.neg == 0;
}

bool is_negative_definite(const Mat& q) {
    Signature s = signature_of_symmetric(q);
    return s.neg == q.rows && s.zero == 0 && s.pos == 0;
}

}  // namespace lorq
