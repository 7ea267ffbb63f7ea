#pragma once

#include <optional>
#include <vector>

#include "lorq/rational.hpp"

namespace lorq {

// Dense row-major rational matrix. Desk scale (n <= 12), no sparsity.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    static Mat identity(int n);

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_from_rows(const std::vector<Vec>& rows);
Mat mat_from_columns(const std::vector<Vec>& cols);
Vec column(const Mat& m, int j);
Vec row(const Mat& m, int i);

Mat mul(const Mat& x, const Mat& y);
Vec mul(const Mat& m, const Vec& v);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Mat scale(const Rat& c, const Mat& m);
Mat mat_pow(const Mat& m, unsigned e);

Vec vadd(const Vec& x, const Vec& y);
Vec vsub(const Vec& x, const Vec& y);
Vec vscale(const Rat& c, const Vec& x);
Vec vneg(const Vec& x);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);
bool is_zero(const Mat& m);

// Reduced row echelon form with pivot bookkeeping.
struct Rref {
    Mat r;
    std::vector<int> pivot_cols;
    int rank = 0;
};
Rref rref(const Mat& m);

int rank(const Mat& m);
Rat det(const Mat& m);

// Basis of { x : m x = 0 }.
std::vector<Vec> kernel_basis(const Mat& m);
// Basis of the column space, as a subset-echelon of the columns.
std::vector<Vec> column_space_basis(const Mat& m);

// One solution of A x = b, if consistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);
// Inverse; std::nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

bool vectors_independent(const std::vector<Vec>& vs);
// Extracts a maximal independent subset, in input order.
std::vector<Vec> independent_subset(const std::vector<Vec>& vs);
// Basis of span(a) ∩ span(b).
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b);
// Basis of span(a) + span(b).
std::vector<Vec> sum_spans(const std::vector<Vec>& a, const std::vector<Vec>& b);
// Is v in span(basis)?
bool in_span(const std::vector<Vec>& basis, const Vec& v);
// Coordinates of v in the given (independent) basis, if v lies in its span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);

// Canonical coset representative of v modulo span(basis): subtracts multiples
// of the RREF basis so the pivot coordinates of the result vanish. Two vectors
// in the same coset map to the same representative.
Vec reduce_mod_span(const std::vector<Vec>& basis, const Vec& v);

// Symmetric congruence diagonalization: returns invertible S and diagonal d
// with S^T Q S = diag(d). Exact pivoting, no eigenvalues.
struct Congruence {
    Mat s;
    std::vector<Rat> diag;
};
Congruence diagonalize_congruence(const Mat& q);

struct Signature {
    int pos = 0, zero = 0, neg = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature_of_symmetric(const Mat& q);

// Sylvester test via congruence pivots (handles the zero-pivot cases exactly).
bool is_positive_definite(const Mat& q);
bool is_negative_definite(const Mat& q);

}  // namespace lorq
