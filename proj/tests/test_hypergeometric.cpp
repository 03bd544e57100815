#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hml/hypergeometric.hpp"
#include "hml/numeric.hpp"
#include "hml/quadrature.hpp"

using namespace hml;

namespace {

// theta(i) = pi^{1/4} / Gamma(3/4); the square is the classical value of
// F(1/2,1/2,1;1/2).  Frozen from the closed form, not from this library.
const double kThetaAtI = 1.08643481121330801;

double rel_err(Cplx got, Cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("series: value 1 at the origin for every stock parameter triple") {
    for (const HGParams& p : {params_half(), params_sixth(), params_twelfth()}) {
        CHECK(hg_series(p, Cplx(0, 0)) == Cplx(1.0, 0.0));
    }
}

TEST_CASE("series: classical value at z = 1/2 for (1/2,1/2,1)") {
    Cplx got = hg_series(params_half(), Cplx(0.5, 0));
    CHECK(rel_err(got, Cplx(kThetaAtI * kThetaAtI, 0)) < 1e-12);
}

TEST_CASE("series vs Euler integral oracle at z = 0.3 for (1/6,1/2,1)") {
    HGParams p = params_sixth();
    Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    Cplx via_integral = euler_integral(p, Cplx(0.3, 0), EulerKind::f2) / b;
    CHECK(rel_err(hg_series(p, Cplx(0.3, 0)), via_integral) < 1e-9);
}

TEST_CASE("series vs Euler integral oracle on a complex grid") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> rad(0.05, 0.75), ang(0.0, 2.0 * kPi);
    for (const HGParams& p : {params_half(), params_sixth(), params_twelfth()}) {
        Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
        for (int k = 0; k < 8; ++k) {
            double r = rad(rng), t = ang(rng);
            Cplx z = std::polar(r, t);
            Cplx via_integral = euler_integral(p, z, EulerKind::f2) / b;
            CHECK(rel_err(hg_series(p, z), via_integral) < 1e-9);
        }
    }
}

TEST_CASE("series: domain and convergence errors") {
    HGParams p = params_half();
    CHECK_THROWS_AS(hg_series(p, Cplx(1.0, 0)), std::domain_error);
    CHECK_THROWS_AS(hg_series(p, Cplx(0.8, 0.7)), std::domain_error);
    SeriesConfig tight;
    tight.max_terms = 64;
    CHECK_THROWS_AS(hg_series(p, Cplx(0.96, 0), tight), std::runtime_error);
    HGParams bad{Rational(1, 2), Rational(1, 2), Rational(-2)};
    CHECK_THROWS_AS(hg_series(bad, Cplx(0.1, 0)), std::domain_error);
}

TEST_CASE("series config validation") {
    SeriesConfig cfg;
    cfg.rel_tol = 1e-3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.rel_tol = 1e-15;
    cfg.max_terms = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("series derivative matches a central difference") {
    HGParams p = params_sixth();
    Cplx z(0.3, 0.2);
    double h = 1e-6;
    SeriesWithDerivative sd = hg_series_d(p, z);
    Cplx fd = (hg_series(p, z + h) - hg_series(p, z - h)) / (2.0 * h);
    CHECK(std::abs(sd.derivative - fd) < 1e-7);
}

TEST_CASE("principal branch: agrees with the series inside the disc") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.0, 0.93), ang(0.0, 2.0 * kPi);
    SeriesConfig wide;
    wide.max_terms = 20000;
    for (const HGParams& p : {params_half(), params_sixth(), params_twelfth()}) {
        for (int k = 0; k < 40; ++k) {
            Cplx z = std::polar(rad(rng), ang(rng));
            if (z.imag() == 0.0 && z.real() >= 1.0) continue;
            CHECK(rel_err(hg_principal(p, z), hg_series(p, z, wide)) < 1e-11);
        }
    }
}

TEST_CASE("principal branch: far negative real axis against the integral oracle") {
    HGParams p = params_sixth();
    Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    Cplx want = euler_integral(p, Cplx(-5.0, 0), EulerKind::f2) / b;
    CHECK(rel_err(hg_principal(p, Cplx(-5.0, 0)), want) < 1e-9);
    // Pfaff region sanity: z/(z-1) = 5/6 < 0.8 fails; -5 -> |1-z| = 6, so this
    // point exercises the integral fallback too.  A nearer point takes Pfaff.
    Cplx want2 = euler_integral(p, Cplx(-2.0, 0), EulerKind::f2) / b;
    CHECK(rel_err(hg_principal(p, Cplx(-2.0, 0)), want2) < 1e-9);
}

TEST_CASE("principal branch: generic complex point against the integral oracle") {
    HGParams p = params_twelfth();
    Cplx z(3.0, 4.0);
    Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    Cplx want = euler_integral(p, z, EulerKind::f2) / b;
    CHECK(rel_err(hg_principal(p, z), want) < 1e-9);
}

TEST_CASE("principal branch: connection and Pfaff regions against the integral oracle") {
    // |1-z| small -> two-term connection (c-a-b not an integer for these two)
    for (const HGParams& p : {params_sixth(), params_twelfth()}) {
        Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
        for (Cplx z : {Cplx(0.9, 0.25), Cplx(1.05, 0.3), Cplx(0.95, -0.2)}) {
            Cplx want = euler_integral(p, z, EulerKind::f2) / b;
            CHECK(rel_err(hg_principal(p, z), want) < 1e-9);
        }
        for (Cplx z : {Cplx(-1.2, 0.4), Cplx(-0.6, -1.0)}) {
            Cplx want = euler_integral(p, z, EulerKind::f2) / b;
            CHECK(rel_err(hg_principal(p, z), want) < 1e-9);
        }
    }
}

TEST_CASE("principal branch: half parameters where the connection degenerates") {
    // c-a-b = 0 for (1/2,1/2,1): the two-term connection is unavailable and
    // points near z=1 must route through Pfaff or the integral.
    HGParams p = params_half();
    Cplx b = beta_c(Cplx(p.av(), 0), Cplx((p.c - p.a).value(), 0));
    for (Cplx z : {Cplx(0.85, 0.0), Cplx(0.9, 0.3), Cplx(-3.0, 0.0), Cplx(2.0, 2.0)}) {
        Cplx want = euler_integral(p, z, EulerKind::f2) / b;
        CHECK(rel_err(hg_principal(p, z), want) < 1e-9);
    }
}

TEST_CASE("principal branch: rejects the cut") {
    CHECK_THROWS_AS(hg_principal(params_half(), Cplx(1.0, 0)), std::domain_error);
    CHECK_THROWS_AS(hg_principal(params_sixth(), Cplx(2.5, 0)), std::domain_error);
}

TEST_CASE("basis pair: ratio i at z = 1/2 for (1/2,1/2,1)") {
    BasisPair fp = hg_basis(params_half(), Cplx(0.5, 0));
    CHECK(std::abs(fp.f1 / fp.f2 - kI) < 1e-12);
}

TEST_CASE("basis pair matches both Euler integrals at z = 1/2 for (1/6,1/2,1)") {
    HGParams p = params_sixth();
    BasisPair fp = hg_basis(p, Cplx(0.5, 0));
    CHECK(rel_err(fp.f1, euler_integral(p, Cplx(0.5, 0), EulerKind::f1)) < 1e-9);
    CHECK(rel_err(fp.f2, euler_integral(p, Cplx(0.5, 0), EulerKind::f2)) < 1e-9);
}

TEST_CASE("basis pair endpoint limit for (1/12,5/12,1)") {
    HGParams p = params_twelfth();
    BasisPair fp = hg_basis(p, Cplx(1.0 - 1e-9, 0));
    Cplx want = unit_root(Rational(11, 24)) *
                beta_c(Cplx(1.0 / 12.0, 0), Cplx(5.0 / 12.0, 0));
    CHECK(rel_err(fp.f1, want) < 1e-6);
}

TEST_CASE("basis hypothesis checks reject bad parameters") {
    HGParams integer_a{Rational(2), Rational(1, 2), Rational(1)};
    CHECK_THROWS_AS(hg_basis(integer_a, Cplx(0.5, 0)), std::domain_error);
    HGParams c_too_big{Rational(1, 2), Rational(1, 3), Rational(7, 2)};
    CHECK_THROWS_AS(hg_basis(c_too_big, Cplx(0.5, 0)), std::domain_error);
}

TEST_CASE("euler integral: beta value at z = 0") {
    Cplx got = euler_integral(params_half(), Cplx(0, 0), EulerKind::f2);
    CHECK(rel_err(got, Cplx(kPi, 0)) < 1e-11);
}

TEST_CASE("euler integral: f1 closed form at z = 1/2 for (1/6,1/2,1)") {
    HGParams p = params_sixth();
    Cplx got = euler_integral(p, Cplx(0.5, 0), EulerKind::f1);
    HGParams q{p.a, p.b, p.a + p.b - p.c + Rational(1)};
    Cplx want = unit_root(Rational(5, 12)) *
                beta_c(Cplx(1.0 / 6.0, 0), Cplx(0.5, 0)) * hg_series(q, Cplx(0.5, 0));
    CHECK(rel_err(got, want) < 1e-9);
}

TEST_CASE("euler integral: interval pieces demand z real in (0,1)") {
    CHECK_THROWS_AS(euler_integral(params_sixth(), Cplx(0.5, 0.1), EulerKind::zero_to_z),
                    std::domain_error);
    CHECK_THROWS_AS(euler_integral(params_sixth(), Cplx(1.5, 0), EulerKind::z_to_one),
                    std::domain_error);
}

TEST_CASE("euler integral: interval pieces recombine into the basis pair") {
    // The loop-eigenfunction combinations, specialised to c = 1 where the
    // path from 0 to z is proportional to f2 alone:
    //   int_0^z = (e(a)-e(c))/(e(a+b)-e(a)) f2        (the f1 weight vanishes)
    //   int_z^1 = (e(c)-e(b))/(e(b)-1) f1 - (e(a+b)-e(c))/(e(a+b)-e(a)) f2
    // with e(x) = exp(2 pi i x).
    for (const HGParams& p : {params_sixth(), params_twelfth()}) {
        for (double x : {0.25, 0.4, 0.7}) {
            Cplx ea = unit_root(p.a), eb = unit_root(p.b), ec = unit_root(p.c);
            Cplx eab = unit_root(p.a + p.b);
            BasisPair fp = hg_basis(p, Cplx(x, 0));
            Cplx c1 = -(ec - 1.0) / (eb - 1.0);
            Cplx c2 = (ea - ec) / (eab - ea);
            Cplx got0 = euler_integral(p, Cplx(x, 0), EulerKind::zero_to_z);
            CHECK(rel_err(got0, c1 * fp.f1 + c2 * fp.f2) < 1e-9);
            Cplx d1 = (ec - eb) / (eb - 1.0);
            Cplx d2 = -(eab - ec) / (eab - ea);
            Cplx got1 = euler_integral(p, Cplx(x, 0), EulerKind::z_to_one);
            CHECK(rel_err(got1, d1 * fp.f1 + d2 * fp.f2) < 1e-9);
        }
    }
}

TEST_CASE("gauss limit: closed forms and hypothesis check") {
    Cplx want6 = gamma_c(Cplx(1, 0)) * gamma_c(Cplx(1.0 / 3.0, 0)) /
                 (gamma_c(Cplx(5.0 / 6.0, 0)) * gamma_c(Cplx(0.5, 0)));
    CHECK(rel_err(gauss_limit(params_sixth()), want6) < 1e-14);
    Cplx want12 = gamma_c(Cplx(1, 0)) * gamma_c(Cplx(0.5, 0)) /
                  (gamma_c(Cplx(11.0 / 12.0, 0)) * gamma_c(Cplx(7.0 / 12.0, 0)));
    CHECK(rel_err(gauss_limit(params_twelfth()), want12) < 1e-14);
    CHECK_THROWS_AS(gauss_limit(params_half()), std::domain_error);
}

TEST_CASE("gauss limit: the series closes in on it monotonically") {
    HGParams p = params_twelfth();
    Cplx limit = gauss_limit(p);
    SeriesConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.max_terms = 200000;
    double prev = 1e300;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        double gap = std::abs(hg_series(p, Cplx(1.0 - eps, 0), cfg) - limit);
        CHECK(gap < prev);
        prev = gap;
    }
    // three significant digits at the tightest approach
    CHECK(prev / std::abs(limit) < 5e-3);
}

TEST_CASE("wronskian residual: vanishes at the contract points") {
    CHECK(wronskian_residual(params_half(), Cplx(0.5, 0)) < 1e-9);
    CHECK(wronskian_residual(params_sixth(), Cplx(0.3, 0)) < 1e-9);
    CHECK(wronskian_residual(params_twelfth(), Cplx(0.6, 0)) < 1e-9);
}

TEST_CASE("wronskian residual: small across the overlap lens") {
    // points where both z and 1-z are inside the series disc
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> re(0.15, 0.85), im(-0.35, 0.35);
    for (const HGParams& p : {params_half(), params_sixth(), params_twelfth()}) {
        int used = 0;
        while (used < 20) {
            Cplx z(re(rng), im(rng));
            if (std::abs(z) > 0.9 || std::abs(1.0 - z) > 0.9) continue;
            ++used;
            CHECK(wronskian_residual(p, z) < 1e-9);
        }
    }
}

TEST_CASE("ode residual: zero at the origin, tiny elsewhere") {
    CHECK(ode_residual(params_half(), Cplx(0, 0)) == 0.0);
    CHECK(ode_residual(params_half(), Cplx(0.4, 0)) < 1e-10);
    CHECK(ode_residual(params_sixth(), Cplx(0.2, 0.3)) < 1e-10);
    CHECK(ode_residual(params_twelfth(), Cplx(-0.5, 0.3)) < 1e-10);
    CHECK_THROWS_AS(ode_residual(params_half(), Cplx(0.97, 0)), std::domain_error);
}
