#include "hml/hypergeometric.hpp"

#include <cmath>
#include <stdexcept>

#include "hml/quadrature.hpp"

namespace hml {

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
        throw std::invalid_argument("SeriesConfig: rel_tol must lie in (0, 1e-6]");
    if (max_terms < 64)
        throw std::invalid_argument("SeriesConfig: max_terms must be >= 64");
}

namespace {

bool is_nonpositive_integer(const Rational& r) {
    return r.is_integer() && r.num <= 0;
}

void check_c(const HGParams& p) {
    if (is_nonpositive_integer(p.c))
        throw std::domain_error("hypergeometric: c is a non-positive integer");
}

// shared series kernel accumulating value and term-wise derivative
SeriesWithDerivative series_kernel(const HGParams& p, Cplx z, const SeriesConfig& cfg) {
    check_c(p);
    cfg.validate();
    if (std::abs(z) >= 1.0)
        throw std::domain_error("hg_series: |z| must be < 1");

    double a = p.av(), b = p.bv(), c = p.cv();
    Cplx cn{1.0, 0.0};   // series coefficient c_n
    Cplx zn{1.0, 0.0};   // z^n
    Cplx sum{1.0, 0.0};  // n = 0 term
    Cplx dsum{0.0, 0.0};
    int consecutive_small = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        cn *= (a + n) * (b + n) / ((c + n) * (1.0 + n));  // now c_{n+1}
        dsum += cn * double(n + 1) * zn;                  // c_{n+1} (n+1) z^n
        zn *= z;                                          // z^{n+1}
        Cplx term = cn * zn;
        sum += term;
        if (std::abs(term) < cfg.rel_tol * std::abs(sum)) {
            if (++consecutive_small >= 3) return {sum, dsum};
        } else {
            consecutive_small = 0;
        }
    }
    if (std::abs(z) >= 0.95)
        throw std::runtime_error("hg_series: no convergence within max_terms at |z| >= 0.95");
    return {sum, dsum};
}

}  // namespace

Cplx hg_series(const HGParams& p, Cplx z, const SeriesConfig& cfg) {
    return series_kernel(p, z, cfg).value;
}

SeriesWithDerivative hg_series_d(const HGParams& p, Cplx z, const SeriesConfig& cfg) {
    return series_kernel(p, z, cfg);
}

Cplx hg_principal(const HGParams& p, Cplx z) {
    check_c(p);
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw std::domain_error("hg_principal: z on the branch cut [1, oo)");

    if (std::abs(z) <= 0.8) return hg_series(p, z);

    Rational s = p.c - p.a - p.b;
    Cplx w = 1.0 - z;
    if (std::abs(w) <= 0.9 && !s.is_integer()) {
        // two-term connection at z = 1
        Cplx ga = gamma_c(Cplx(p.cv(), 0)) * gamma_c(Cplx(s.value(), 0)) /
                  (gamma_c(Cplx((p.c - p.a).value(), 0)) * gamma_c(Cplx((p.c - p.b).value(), 0)));
        Cplx gb = gamma_c(Cplx(p.cv(), 0)) * gamma_c(Cplx(-s.value(), 0)) /
                  (gamma_c(Cplx(p.av(), 0)) * gamma_c(Cplx(p.bv(), 0)));
        HGParams q1{p.a, p.b, p.a + p.b - p.c + Rational(1)};
        HGParams q2{p.c - p.a, p.c - p.b, p.c - p.a - p.b + Rational(1)};
        return ga * hg_series(q1, w) + gb * std::pow(w, Cplx(s.value(), 0)) * hg_series(q2, w);
    }

    Cplx ratio = z / (z - 1.0);
    if (std::abs(ratio) < 0.8) {
        // Pfaff: F(a,b,c;z) = (1-z)^{-a} F(a, c-b, c; z/(z-1))
        HGParams q{p.a, p.c - p.b, p.c};
        return std::pow(w, Cplx(-p.av(), 0)) * hg_series(q, ratio);
    }

    // last resort: the integral representation
    //   B(a, c-a) F(a,b,c;z) = int_0^1 s^{a-1} (1-s)^{c-a-1} (1-s z)^{-b} ds
    // is single valued off the cut whenever the endpoint exponents are
    // integrable, so it extends the evaluator to all of C \ [1, oo).
    if (p.av() > 0.0 && (p.c - p.a).value() > 0.0) {
        double a = p.av(), b = p.bv(), c = p.cv();
        auto f = [&](double s, double ms) -> Cplx {
            return std::pow(s, a - 1.0) * std::pow(ms, c - a - 1.0) *
                   std::pow(1.0 - s * z, Cplx(-b, 0));
        };
        return tanh_sinh_01(f, 1e-13).value /
               beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    }

    throw std::domain_error("hg_principal: z outside the covered continuation region");
}

namespace {

void check_basis_hypotheses(const HGParams& p) {
    if (p.a.is_integer() || p.b.is_integer())
        throw std::domain_error("hg_basis: a and b must not be integers");
    if (!(p.av() > 0.0))
        throw std::domain_error("hg_basis: Re(a) must be positive");
    if (!((p.b - p.c + Rational(1)).value() > 0.0))
        throw std::domain_error("hg_basis: Re(b-c+1) must be positive");
    if (!((p.c - p.a).value() > 0.0))
        throw std::domain_error("hg_basis: Re(c-a) must be positive");
}

}  // namespace

BasisPair hg_basis(const HGParams& p, Cplx z) {
    check_basis_hypotheses(p);
    // e^{-pi i (a-1)} as an exact root of unity: e^{2 pi i (1-a)/2}
    Cplx phase = unit_root((Rational(1) - p.a) / Rational(2));
    Cplx B1 = beta_c(Cplx(p.av(), 0), Cplx((p.b - p.c + Rational(1)).value(), 0));
    Cplx B2 = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    HGParams q{p.a, p.b, p.a + p.b - p.c + Rational(1)};
    Cplx f1 = phase * B1 * hg_principal(q, 1.0 - z);
    Cplx f2 = B2 * hg_principal(p, z);
    return {f1, f2};
}

Cplx euler_integral(const HGParams& p, Cplx z, EulerKind which) {
    check_basis_hypotheses(p);
    double a = p.av(), b = p.bv(), c = p.cv();
    const double tol = 1e-13;

    switch (which) {
        case EulerKind::f2: {
            // int_0^1 s^{a-1} (1-s)^{c-a-1} (1-s z)^{-b} ds
            auto f = [&](double s, double ms) -> Cplx {
                return std::pow(s, a - 1.0) * std::pow(ms, c - a - 1.0) *
                       std::pow(1.0 - s * z, Cplx(-b, 0));
            };
            return tanh_sinh_01(f, tol).value;
        }
        case EulerKind::f1: {
            // e^{-pi i (a-1)} int_0^1 s^{a-1} (1-s)^{b-c} (1 - s(1-z))^{-b} ds
            Cplx phase = unit_root((Rational(1) - p.a) / Rational(2));
            Cplx w = 1.0 - z;
            auto f = [&](double s, double ms) -> Cplx {
                return std::pow(s, a - 1.0) * std::pow(ms, b - c) *
                       std::pow(1.0 - s * w, Cplx(-b, 0));
            };
            return phase * tanh_sinh_01(f, tol).value;
        }
        case EulerKind::zero_to_z:
        case EulerKind::z_to_one: {
            if (z.imag() != 0.0 || z.real() <= 0.0 || z.real() >= 1.0)
                throw std::domain_error("euler_integral: zero_to_z / z_to_one need z real in (0,1)");
            double x = z.real();
            if (which == EulerKind::zero_to_z) {
                // int_0^x t^{b-c} (t-x)^{-b} (1-t)^{c-a-1} dt continued through
                // the upper half t-plane: (t-x)^{-b} -> e^{-i pi b} (x-t)^{-b},
                // (t-1)^{c-a-1} -> e^{i pi (c-a-1)} (1-t)^{c-a-1}.
                // Substitute t = x s:  x^{1-c} int_0^1 s^{b-c} (1-s)^{-b} (1-x s)^{c-a-1} ds
                Cplx phase = unit_root((p.c - p.a - p.b) / Rational(2) - Rational(1, 2));
                auto f = [&](double s, double ms) -> Cplx {
                    return std::pow(s, b - c) * std::pow(ms, -b) * std::pow(1.0 - x * s, c - a - 1.0);
                };
                return phase * std::pow(x, 1.0 - c) * tanh_sinh_01(f, tol).value;
            }
            // int_x^1 t^{b-c} (t-x)^{-b} (1-t)^{c-a-1} dt with the single phase
            // e^{i pi (c-a-1)}.  Substitute t = x + (1-x)s:
            //   (1-x)^{c-a-b} int_0^1 s^{-b} (1-s)^{c-a-1} (x+(1-x)s)^{b-c} ds
            Cplx phase = unit_root((p.c - p.a - Rational(1)) / Rational(2));
            auto f = [&](double s, double ms) -> Cplx {
                return std::pow(s, -b) * std::pow(ms, c - a - 1.0) * std::pow(x + (1.0 - x) * s, b - c);
            };
            return phase * std::pow(1.0 - x, c - a - b) * tanh_sinh_01(f, tol).value;
        }
    }
    throw std::logic_error("euler_integral: unreachable");
}

Cplx gauss_limit(const HGParams& p) {
    Rational s = p.c - p.a - p.b;
    if (!(s.value() > 0.0))
        throw std::domain_error("gauss_limit: requires Re(c-a-b) > 0");
    return gamma_c(Cplx(p.cv(), 0)) * gamma_c(Cplx(s.value(), 0)) /
           (gamma_c(Cplx((p.c - p.a).value(), 0)) * gamma_c(Cplx((p.c - p.b).value(), 0)));
}

double wronskian_residual(const HGParams& p, Cplx z) {
    HGParams q{p.a, p.b, p.a + p.b - p.c + Rational(1)};
    SeriesWithDerivative top = hg_series_d(q, 1.0 - z);   // F(a,b,a+b-c+1;1-z)
    SeriesWithDerivative bot = hg_series_d(p, z);         // F(a,b,c;z)
    // d/dz of the 1-z series flips the sign of the inner derivative
    Cplx det = top.value * bot.derivative - (-top.derivative) * bot.value;
    double a = p.av(), b = p.bv(), c = p.cv();
    Cplx closed = gamma_c(Cplx(c, 0)) * gamma_c(Cplx(a + b - c + 1.0, 0)) /
                  (gamma_c(Cplx(a, 0)) * gamma_c(Cplx(b, 0))) *
                  std::pow(z, Cplx(-c, 0)) * std::pow(1.0 - z, Cplx(c - a - b - 1.0, 0));
    return std::abs(det - closed);
}

double ode_residual(const HGParams& p, Cplx z) {
    check_c(p);
    if (std::abs(z) >= 0.95)
        throw std::domain_error("ode_residual: requires |z| < 0.95");
    double a = p.av(), b = p.bv(), c = p.cv();

    // accumulate S, S', S'' term by term with exact coefficient recurrences
    Cplx coef{1.0, 0.0};  // c_n
    Cplx S{0.0, 0.0}, S1{0.0, 0.0}, S2{0.0, 0.0};
    Cplx zn{1.0, 0.0};    // z^n
    Cplx znm1{0.0, 0.0};  // z^{n-1}
    Cplx znm2{0.0, 0.0};  // z^{n-2}
    const int N = 600;
    for (int n = 0; n < N; ++n) {
        S += coef * zn;
        if (n >= 1) S1 += coef * double(n) * znm1;
        if (n >= 2) S2 += coef * double(n) * double(n - 1) * znm2;
        coef *= (a + n) * (b + n) / ((c + n) * (1.0 + n));
        znm2 = znm1;
        znm1 = zn;
        zn *= z;
        if (std::abs(coef * zn) < 1e-19 * std::abs(S) && n > 8) break;
    }
    Cplx resid = z * (1.0 - z) * S2 + (c - (a + b + 1.0) * z) * S1 - a * b * S;
    return std::abs(resid);
}

}  // namespace hml
