#pragma once

#include <string>
#include <vector>

#include "lorq/rational.hpp"

namespace lorq {

// Number of the form a + b sqrt(d) with a, b rational and d a positive
// square-free integer. Arithmetic stays inside one fixed radicand; rational
// values are normalized to d = 1, b = 0.
struct Surd {
    Rat a, b;
    Int d = 1;

    Surd() : a(0), b(0) {}
    explicit Surd(const Rat& r) : a(r), b(0) {}
    Surd(Rat a_, Rat b_, Int d_);

    static Surd sqrt_of(const Rat& nonneg);  // exact; extracts the square part

    bool is_rational() const { return sgn(b) == 0; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    int sign() const;

    Surd operator-() const { return Surd(-a, -b, d); }
    bool operator==(const Surd& o) const;
};

Surd operator+(const Surd& x, const Surd& y);
Surd operator-(const Surd& x, const Surd& y);
Surd operator*(const Surd& x, const Surd& y);
Surd operator/(const Surd& x, const Surd& y);

// "p/q" for rational values, else "p/q+r/s*sqrt(d)".
std::string surd_to_string(const Surd& s);

using SurdVec = std::vector<Surd>;

// Small dense surd matrix; just enough linear algebra for basis changes.
struct SurdMat {
    int rows = 0, cols = 0;
    std::vector<Surd> a;

    SurdMat() = default;
    SurdMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static SurdMat identity(int n);

    Surd& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Surd& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

SurdMat mul(const SurdMat& x, const SurdMat& y);
SurdVec mul(const SurdMat& m, const SurdVec& v);
SurdMat surd_mat_from_columns(const std::vector<SurdVec>& cols);
SurdMat surd_inverse(const SurdMat& m);  // throws on singular input

}  // namespace lorq
