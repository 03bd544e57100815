#include "hml/numeric.hpp"

#include <cmath>
#include <numeric>

namespace hml {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Cplx unit_root(const Rational& r) {
    // reduce the angle to [0,1) exactly in integer arithmetic first
    std::int64_t n = r.num % r.den;
    if (n < 0) n += r.den;
    double t = 2.0 * kPi * (static_cast<double>(n) / static_cast<double>(r.den));
    return {std::cos(t), std::sin(t)};
}

Mat2 Mat2::inverse() const {
    Cplx dt = det();
    if (dt == Cplx(0.0, 0.0)) throw std::domain_error("Mat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

IntMat2 IntMat2::inverse_unimodular() const {
    if (det() != 1) throw std::domain_error("IntMat2: inverse requires det 1");
    return {d, -b, -c, a};
}

// ---------------------------------------------------------------------------
// Lanczos gamma, g = 7, 9 coefficients.  Worst-case relative error on the
// tested box (|z| <= 30, off the negative real axis) is below 1e-13.
// ---------------------------------------------------------------------------
namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// valid for Re(z) >= 0.5
Cplx gamma_positive_half(Cplx z) {
    Cplx x = z - 1.0;
    Cplx acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x + Cplx(double(k), 0.0));
    Cplx t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

Cplx gamma_c(Cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("gamma_c: pole at non-positive integer " + std::to_string((long long)z.real()));
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
    }
    return gamma_positive_half(z);
}

Cplx beta_c(Cplx a, Cplx b) {
    return gamma_c(a) * gamma_c(b) / gamma_c(a + b);
}

Cplx moebius(const Mat2& g, Cplx tau) {
    Cplx den = g.c * tau + g.d;
    if (den == Cplx(0.0, 0.0)) throw std::domain_error("moebius: pole of the transformation");
    return (g.a * tau + g.b) / den;
}

Cplx moebius(const IntMat2& g, Cplx tau) {
    return moebius(g.to_mat2(), tau);
}

Eigen2Result eigen2(const Mat2& m) {
    if (m.det() == Cplx(0.0, 0.0)) throw std::domain_error("eigen2: singular matrix");
    Cplx tr = m.a + m.d;
    Cplx disc = std::sqrt(tr * tr - 4.0 * m.det());
    Cplx l1 = (tr + disc) / 2.0;
    Cplx l2 = (tr - disc) / 2.0;

    auto row_for = [&m](Cplx lam) -> EigenRow {
        // left candidates: (c, lam - a) and (lam - d, b); take the larger
        Cplx u1 = m.c, u2 = lam - m.a;
        Cplx w1 = lam - m.d, w2 = m.b;
        double nu = std::abs(u1) + std::abs(u2);
        double nw = std::abs(w1) + std::abs(w2);
        Cplx v1 = nu >= nw ? u1 : w1;
        Cplx v2 = nu >= nw ? u2 : w2;
        if (std::abs(v1) < 1e-300 && std::abs(v2) < 1e-300) return {lam, 0.0, 0.0};
        Cplx piv = std::abs(v1) >= std::abs(v2) ? v1 : v2;
        return {lam, v1 / piv, v2 / piv};
    };

    Eigen2Result out;
    EigenRow r1 = row_for(l1);
    EigenRow r2 = row_for(l2);

    // repeated eigenvalue: eigenspace is 2-dim only for a scalar matrix
    if (std::abs(l1 - l2) < 1e-12 * (std::abs(l1) + 1.0)) {
        bool scalar = std::abs(m.b) == 0.0 && std::abs(m.c) == 0.0 && std::abs(m.a - m.d) == 0.0;
        if (scalar) {
            out.rows = {{l1, 1.0, 0.0}, {l1, 0.0, 1.0}};
        } else {
            out.rows = {r1};
            out.defective = true;
        }
        return out;
    }
    out.rows = {r1, r2};
    return out;
}

}  // namespace hml
