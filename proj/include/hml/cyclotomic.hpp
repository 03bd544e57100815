#pragma once

// Exact arithmetic in the degree-8 field Q(zeta), zeta = e^{pi i/12} a
// primitive 24th root of unity with minimal polynomial zeta^8 = zeta^4 - 1.
// The field contains i = zeta^6, omega = zeta^8 and e^{pi i/6} = zeta^2, so
// every scalar appearing in the circuit matrices and the theta multiplier
// system lives here, and matrix identities become exact equality tests.

#include <array>
#include <optional>

#include "hml/numeric.hpp"

namespace hml {

class Cyc24 {
  public:
    Cyc24() = default;                        // zero
    explicit Cyc24(const Rational& r);        // rational embedded as r * zeta^0
    explicit Cyc24(int64_t n);

    static Cyc24 zeta_pow(int64_t k);         // zeta^k for any integer k
    // e^{2 pi i r}; requires den(r) | 24
    static Cyc24 unit(const Rational& r);

    Cyc24 operator+(const Cyc24& o) const;
    Cyc24 operator-(const Cyc24& o) const;
    Cyc24 operator-() const;
    Cyc24 operator*(const Cyc24& o) const;
    Cyc24 inverse() const;                    // throws std::domain_error on zero
    Cyc24 operator/(const Cyc24& o) const { return *this * o.inverse(); }

    bool operator==(const Cyc24& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc24& o) const { return !(*this == o); }
    bool is_zero() const;
    // the rational r when the element is r * zeta^0, otherwise empty
    std::optional<Rational> as_rational() const;
    std::optional<int64_t> as_integer() const;

    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Cplx to_complex() const;

  private:
    std::array<Rational, 8> c_{};             // coordinates over 1, zeta, ..., zeta^7
};

inline Cyc24 operator*(const Rational& r, const Cyc24& x) { return Cyc24(r) * x; }

// 2x2 matrices over the field
struct CycMat2 {
    Cyc24 a, b, c, d;

    static CycMat2 identity();
    static CycMat2 from_int(const IntMat2& m);

    CycMat2 operator*(const CycMat2& o) const;
    CycMat2 operator+(const CycMat2& o) const;
    CycMat2 operator-(const CycMat2& o) const;
    Cyc24 det() const;
    CycMat2 inverse() const;                  // throws std::domain_error when singular
    bool operator==(const CycMat2& o) const;
    bool operator!=(const CycMat2& o) const { return !(*this == o); }
    // integer matrix when all four entries are rational integers
    std::optional<IntMat2> as_integer_matrix() const;
    Mat2 to_mat2() const;
};

CycMat2 operator*(const Cyc24& s, const CycMat2& m);

}  // namespace hml
