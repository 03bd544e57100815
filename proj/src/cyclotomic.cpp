#include "hml/cyclotomic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hml {

Cyc24::Cyc24(const Rational& r) { c_[0] = r; }

Cyc24::Cyc24(int64_t n) { c_[0] = Rational(n); }

Cyc24 Cyc24::zeta_pow(int64_t k) {
    k %= 24;
    if (k < 0) k += 24;
    Cyc24 out;
    if (k < 8) {
        out.c_[static_cast<size_t>(k)] = Rational(1);
        return out;
    }
    // zeta^k = zeta^{k-8} (zeta^4 - 1) for 8 <= k < 16, once more for k >= 16
    Cyc24 z4m1;
    z4m1.c_[4] = Rational(1);
    z4m1.c_[0] = Rational(-1);
    out = zeta_pow(k - 8) * z4m1;
    return out;
}

Cyc24 Cyc24::unit(const Rational& r) {
    if (24 % r.den != 0)
        throw std::domain_error("Cyc24::unit: denominator must divide 24");
    return zeta_pow(r.num * (24 / r.den));
}

Cyc24 Cyc24::operator+(const Cyc24& o) const {
    Cyc24 out;
    for (size_t i = 0; i < 8; ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Cyc24 Cyc24::operator-(const Cyc24& o) const {
    Cyc24 out;
    for (size_t i = 0; i < 8; ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Cyc24 Cyc24::operator-() const {
    Cyc24 out;
    for (size_t i = 0; i < 8; ++i) out.c_[i] = Rational(0) - c_[i];
    return out;
}

Cyc24 Cyc24::operator*(const Cyc24& o) const {
    std::array<Rational, 15> conv{};
    for (size_t i = 0; i < 8; ++i) {
        if (c_[i].num == 0) continue;
        for (size_t j = 0; j < 8; ++j) {
            if (o.c_[j].num == 0) continue;
            conv[i + j] = conv[i + j] + c_[i] * o.c_[j];
        }
    }
    // fold zeta^{j} = zeta^{j-4} - zeta^{j-8} for j = 14 .. 8
    for (size_t j = 14; j >= 8; --j) {
        if (conv[j].num == 0) continue;
        conv[j - 4] = conv[j - 4] + conv[j];
        conv[j - 8] = conv[j - 8] - conv[j];
    }
    Cyc24 out;
    for (size_t i = 0; i < 8; ++i) out.c_[i] = conv[i];
    return out;
}

bool Cyc24::is_zero() const {
    for (const Rational& r : c_)
        if (r.num != 0) return false;
    return true;
}

std::optional<Rational> Cyc24::as_rational() const {
    for (size_t i = 1; i < 8; ++i)
        if (c_[i].num != 0) return std::nullopt;
    return c_[0];
}

std::optional<int64_t> Cyc24::as_integer() const {
    auto r = as_rational();
    if (!r || !r->is_integer()) return std::nullopt;
    return r->num;
}

Cplx Cyc24::to_complex() const {
    Cplx out{0.0, 0.0};
    for (int i = 0; i < 8; ++i) {
        if (c_[static_cast<size_t>(i)].num == 0) continue;
        out += c_[static_cast<size_t>(i)].value() * unit_root(Rational(i, 24));
    }
    return out;
}

Cyc24 Cyc24::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc24::inverse: zero element");
    // solve (this * x) = 1 as an 8x8 rational linear system; column j of the
    // matrix holds the coordinates of this * zeta^j
    std::array<std::array<Rational, 9>, 8> m{};  // augmented with e_0
    for (size_t j = 0; j < 8; ++j) {
        Cyc24 col = *this * zeta_pow(static_cast<int64_t>(j));
        for (size_t i = 0; i < 8; ++i) m[i][j] = col.c_[i];
    }
    m[0][8] = Rational(1);

    for (size_t piv = 0; piv < 8; ++piv) {
        size_t row = piv;
        while (row < 8 && m[row][piv].num == 0) ++row;
        if (row == 8) throw std::domain_error("Cyc24::inverse: singular system");
        std::swap(m[piv], m[row]);
        Rational inv_p = Rational(1) / m[piv][piv];
        for (size_t j = piv; j < 9; ++j) m[piv][j] = m[piv][j] * inv_p;
        for (size_t i = 0; i < 8; ++i) {
            if (i == piv || m[i][piv].num == 0) continue;
            Rational f = m[i][piv];
            for (size_t j = piv; j < 9; ++j) m[i][j] = m[i][j] - f * m[piv][j];
        }
    }
    Cyc24 out;
    for (size_t i = 0; i < 8; ++i) out.c_[i] = m[i][8];
    return out;
}

CycMat2 CycMat2::identity() { return {Cyc24(1), Cyc24(), Cyc24(), Cyc24(1)}; }

CycMat2 CycMat2::from_int(const IntMat2& m) {
    return {Cyc24(m.a), Cyc24(m.b), Cyc24(m.c), Cyc24(m.d)};
}

CycMat2 CycMat2::operator*(const CycMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

CycMat2 CycMat2::operator+(const CycMat2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
}

CycMat2 CycMat2::operator-(const CycMat2& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
}

Cyc24 CycMat2::det() const { return a * d - b * c; }

CycMat2 CycMat2::inverse() const {
    Cyc24 dinv = det().inverse();
    return {d * dinv, -b * dinv, -c * dinv, a * dinv};
}

bool CycMat2::operator==(const CycMat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::optional<IntMat2> CycMat2::as_integer_matrix() const {
    auto ia = a.as_integer(), ib = b.as_integer(), ic = c.as_integer(), id = d.as_integer();
    if (!ia || !ib || !ic || !id) return std::nullopt;
    return IntMat2{*ia, *ib, *ic, *id};
}

Mat2 CycMat2::to_mat2() const {
    return {a.to_complex(), b.to_complex(), c.to_complex(), d.to_complex()};
}

CycMat2 operator*(const Cyc24& s, const CycMat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
}

}  // namespace hml
