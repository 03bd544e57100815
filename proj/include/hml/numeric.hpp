#pragma once

// Numeric substrate: complex scalars, small exact rationals, 2x2 matrices,
// the complex gamma/beta functions, Moebius action, and 2x2 left eigenrows.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hml {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// i and the fixed primitive cube root of unity omega = (-1 + sqrt(3) i)/2.
inline constexpr Cplx kI{0.0, 1.0};
inline constexpr Cplx kOmega{-0.5, 0.866025403784438646763723170752936183};
inline constexpr Cplx kOmega2{-0.5, -0.866025403784438646763723170752936183};

// ---------------------------------------------------------------------------
// Rational: reduced fraction of 64-bit integers, denominator > 0.
// All parameters handled here have tiny denominators, so no overflow guard
// beyond the intermediate products is needed.
// ---------------------------------------------------------------------------
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }

    Rational operator-() const { return Rational(-num, den); }
    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string str() const;
};

// e^{2 pi i r} with the angle reduced exactly before trigonometry.
Cplx unit_root(const Rational& r);

// ---------------------------------------------------------------------------
// 2x2 matrices
// ---------------------------------------------------------------------------
struct Mat2 {
    Cplx a{}, b{}, c{}, d{};  // rows (a b; c d)

    Mat2() = default;
    Mat2(Cplx a_, Cplx b_, Cplx c_, Cplx d_) : a(a_), b(b_), c(c_), d(d_) {}

    Cplx det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(const Cplx& s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 inverse() const;
};

struct IntMat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;  // rows (a b; c d)

    std::int64_t det() const { return a * d - b * c; }
    IntMat2 operator*(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const IntMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    // inverse of a determinant-one matrix
    IntMat2 inverse_unimodular() const;
    IntMat2 neg() const { return {-a, -b, -c, -d}; }
    Mat2 to_mat2() const {
        return {Cplx(double(a), 0), Cplx(double(b), 0), Cplx(double(c), 0), Cplx(double(d), 0)};
    }
};

// Named generators of SL2(Z).
inline IntMat2 mat_T() { return {1, 1, 0, 1}; }
inline IntMat2 mat_J() { return {0, 1, -1, 0}; }
inline IntMat2 mat_W() { return {-1, -1, 1, 0}; }    // (JT)^{-1}
inline IntMat2 mat_W2() { return {0, 1, -1, -1}; }   // W^2
inline IntMat2 mat_I() { return {1, 0, 0, 1}; }

// ---------------------------------------------------------------------------
// gamma and friends
// ---------------------------------------------------------------------------

// Complex gamma by a fixed Lanczos approximation, reflection for Re(z) < 1/2.
// Relative error <= 1e-13 on |z| <= 30 away from the negative real axis.
// Throws std::domain_error at non-positive integers.
Cplx gamma_c(Cplx z);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b)
Cplx beta_c(Cplx a, Cplx b);

// ---------------------------------------------------------------------------
// Moebius action  g.tau = (a tau + b)/(c tau + d)
// ---------------------------------------------------------------------------
Cplx moebius(const Mat2& g, Cplx tau);
Cplx moebius(const IntMat2& g, Cplx tau);

// ---------------------------------------------------------------------------
// Left eigenrows of a 2x2 matrix: pairs (lambda, v) with v.m = lambda v,
// v scaled so its largest-magnitude component equals 1.
// ---------------------------------------------------------------------------
struct EigenRow {
    Cplx lambda;
    Cplx v1, v2;
};

struct Eigen2Result {
    std::vector<EigenRow> rows;  // two entries, or one when defective
    bool defective = false;      // repeated eigenvalue with 1-dim eigenspace
};

Eigen2Result eigen2(const Mat2& m);

}  // namespace hml
