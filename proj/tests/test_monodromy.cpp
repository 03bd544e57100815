#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hml/cyclotomic.hpp"
#include "hml/monodromy.hpp"
#include "hml/numeric.hpp"

using namespace hml;

namespace {

Cyc24 cyc(int64_t n) { return Cyc24(n); }
Cyc24 u(int64_t num, int64_t den) { return Cyc24::unit(Rational(num, den)); }

const HGParams kHalf = params_half();
const HGParams kSixth = params_sixth();
const HGParams kTwelfth = params_twelfth();

}  // namespace

TEST_CASE("cyclotomic: power basis reduction and special elements") {
    // zeta^8 = zeta^4 - 1
    Cyc24 z8 = Cyc24::zeta_pow(8);
    CHECK(z8 == Cyc24::zeta_pow(4) - cyc(1));
    CHECK(Cyc24::zeta_pow(24) == cyc(1));
    CHECK(Cyc24::zeta_pow(-1) == Cyc24::zeta_pow(23));
    // omega = zeta^8, i = zeta^6, omega^2 = -zeta^4
    CHECK(u(1, 3) == z8);
    CHECK(u(1, 4) == Cyc24::zeta_pow(6));
    CHECK(u(2, 3) == -Cyc24::zeta_pow(4));
    CHECK(std::abs(u(1, 3).to_complex() - kOmega) < 1e-15);
    CHECK(std::abs(u(1, 4).to_complex() - kI) < 1e-15);
    CHECK(std::abs(u(7, 12).to_complex() - unit_root(Rational(7, 12))) < 1e-15);
    CHECK_THROWS_AS(Cyc24::unit(Rational(1, 5)), std::domain_error);
}

TEST_CASE("cyclotomic: ring identities hold exactly") {
    Cyc24 z = Cyc24::zeta_pow(1);
    CHECK((cyc(1) + z) * (cyc(1) - z) == cyc(1) - z * z);
    CHECK(u(1, 3) * u(1, 3) * u(1, 3) == cyc(1));
    CHECK(u(1, 4) * u(1, 4) == -cyc(1));
    CHECK(u(1, 2) == -cyc(1));
    // 1 + omega + omega^2 = 0
    CHECK((cyc(1) + u(1, 3) + u(2, 3)).is_zero());
}

TEST_CASE("cyclotomic: inverses via the linear system") {
    std::mt19937 rng(501);
    std::uniform_int_distribution<int64_t> coe(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Cyc24 x;
        for (int k = 0; k < 8; ++k)
            x = x + Rational(coe(rng)) * Cyc24::zeta_pow(k);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == cyc(1));
        CHECK(std::abs(x.to_complex() * x.inverse().to_complex() - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(Cyc24().inverse(), std::domain_error);
}

TEST_CASE("cyclotomic: rational detection and complex embedding") {
    CHECK(cyc(5).as_integer() == 5);
    CHECK(!Cyc24::zeta_pow(2).as_rational().has_value());
    CHECK(Cyc24(Rational(3, 2)).as_rational() == Rational(3, 2));
    std::mt19937 rng(77);
    std::uniform_int_distribution<int64_t> coe(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        Cyc24 x;
        Cplx direct{0, 0};
        for (int k = 0; k < 8; ++k) {
            int64_t c = coe(rng);
            x = x + Rational(c) * Cyc24::zeta_pow(k);
            direct += double(c) * unit_root(Rational(k, 24));
        }
        CHECK(std::abs(x.to_complex() - direct) < 1e-13);
    }
}

TEST_CASE("cyclotomic: matrix algebra") {
    CycMat2 m{cyc(1) + Cyc24::zeta_pow(3), u(1, 4), -u(2, 3), cyc(2)};
    CHECK(m * m.inverse() == CycMat2::identity());
    CHECK((m * m.inverse()).as_integer_matrix() == mat_I());
    CHECK(!m.as_integer_matrix().has_value());
    CHECK(CycMat2::from_int(mat_W()).det() == cyc(1));
}

TEST_CASE("riemann scheme: exponents and differences") {
    RiemannScheme rs = riemann_scheme(kSixth);
    CHECK(rs.diff0 == Rational(0));
    CHECK(rs.diff1 == Rational(1, 3));
    CHECK(rs.diffinf == Rational(1, 3));
    CHECK(rs.at1[1] == Rational(1, 3));
    CHECK(rs.atinf[0] == Rational(1, 6));

    rs = riemann_scheme(kTwelfth);
    CHECK(rs.diff0 == Rational(0));
    CHECK(rs.diff1 == Rational(1, 2));
    CHECK(rs.diffinf == Rational(1, 3));

    rs = riemann_scheme(kHalf);
    CHECK(rs.diff0 == Rational(0));
    CHECK(rs.diff1 == Rational(0));
    CHECK(rs.diffinf == Rational(0));
}

TEST_CASE("circuit matrices: exact entries for the three triples") {
    CircuitSet cs = circuit_matrices(kHalf);
    CHECK(cs.m0 == CycMat2::from_int(IntMat2{1, 2, 0, 1}));
    CHECK(cs.m1 == CycMat2::from_int(IntMat2{1, 0, -2, 1}));

    cs = circuit_matrices(kSixth);
    CHECK(cs.m0 == (CycMat2{cyc(1), -u(2, 3), Cyc24(), cyc(1)}));
    CHECK(cs.m1 == (CycMat2{cyc(1), Cyc24(), cyc(-2), u(1, 3)}));

    cs = circuit_matrices(kTwelfth);
    CHECK(cs.m0 == (CycMat2{cyc(1), cyc(1) - u(-1, 12), Cyc24(), cyc(1)}));
    CHECK(cs.m1 == (CycMat2{cyc(1), Cyc24(), u(7, 12) - cyc(1), cyc(-1)}));
}

TEST_CASE("circuit matrices: eigenvalues match the scheme exponentials exactly") {
    for (const HGParams& p : {kHalf, kSixth, kTwelfth}) {
        CircuitSet cs = circuit_matrices(p);
        CHECK(cs.m0.a == Cyc24::unit(Rational(0) - p.c));
        CHECK(cs.m0.d == cyc(1));
        CHECK(cs.m0.c.is_zero());
        CHECK(cs.m1.a == cyc(1));
        CHECK(cs.m1.d == Cyc24::unit(p.c - p.a - p.b));
        CHECK(cs.m1.b.is_zero());
        // trace/determinant pin the infinity eigenvalues {e(a), e(b)}
        CHECK(cs.minf.a + cs.minf.d == Cyc24::unit(p.a) + Cyc24::unit(p.b));
        CHECK(cs.minf.det() == Cyc24::unit(p.a + p.b));
        CHECK(cs.minf_prime.a + cs.minf_prime.d == Cyc24::unit(p.a) + Cyc24::unit(p.b));
        CHECK(cs.minf_prime.det() == Cyc24::unit(p.a + p.b));
    }
}

TEST_CASE("infinity circuit: exact matrix for (1/2,1/2,1) and the (1,1) row") {
    CircuitSet cs = circuit_matrices(kHalf);
    InfinityCircuit up = infinity_circuit(cs, kHalf, Orientation::upper);
    CHECK(up.m == CycMat2::from_int(IntMat2{1, -2, 2, -3}));
    InfinityCircuit low = infinity_circuit(cs, kHalf, Orientation::lower);
    CHECK(low.row_b.v1 == cyc(1));
    CHECK(low.row_b.v2 == cyc(1));
    CHECK(low.row_b.lambda == u(1, 2));
}

TEST_CASE("infinity circuit: eigen rows satisfy v g = lambda v") {
    // a generic triple with 24-smooth denominators plus the two stock ones
    HGParams generic{Rational(1, 8), Rational(1, 3), Rational(1, 2)};
    for (const HGParams& p : {kSixth, kTwelfth, generic}) {
        CircuitSet cs = circuit_matrices(p);
        for (Orientation o : {Orientation::upper, Orientation::lower}) {
            InfinityCircuit ic = infinity_circuit(cs, p, o);
            Mat2 g = ic.m.to_mat2();
            for (const ExactEigenRow& row : {ic.row_a, ic.row_b}) {
                Cplx v1 = row.v1.to_complex(), v2 = row.v2.to_complex();
                Cplx lam = row.lambda.to_complex();
                CHECK(std::abs(v1 * g.a + v2 * g.c - lam * v1) < 1e-12);
                CHECK(std::abs(v1 * g.b + v2 * g.d - lam * v2) < 1e-12);
            }
        }
    }
}

TEST_CASE("conjugation: sixth triple lands on T^2 and omega^2 W") {
    ConjugationResult cr = find_conjugator(kSixth);
    CHECK(cr.r == (CycMat2{cyc(-2) * u(1, 3), u(2, 3), Cyc24(), cyc(1)}));
    CHECK(cr.n0 == mat_T() * mat_T());
    CHECK(cr.n1 == mat_W());
    CHECK(cr.scalar0 == cyc(1));
    CHECK(cr.scalar1 == u(2, 3));

    // defining property, exactly
    CircuitSet cs = circuit_matrices(kSixth);
    CHECK(cr.r * cs.m0 * cr.r.inverse() == cr.scalar0 * CycMat2::from_int(cr.n0));
    CHECK(cr.r * cs.m1 * cr.r.inverse() == cr.scalar1 * CycMat2::from_int(cr.n1));
}

TEST_CASE("conjugation: twelfth triple lands on T and i J") {
    ConjugationResult cr = find_conjugator(kTwelfth);
    CHECK(cr.r == (CycMat2{-u(1, 4) - u(1, 3), -u(1, 4), Cyc24(), cyc(1)}));
    CHECK(cr.n0 == mat_T());
    CHECK(cr.n1 == mat_J());
    CHECK(cr.scalar0 == cyc(1));
    CHECK(cr.scalar1 == u(1, 4));

    CircuitSet cs = circuit_matrices(kTwelfth);
    CHECK(cr.r * cs.m0 * cr.r.inverse() == cr.scalar0 * CycMat2::from_int(cr.n0));
    CHECK(cr.r * cs.m1 * cr.r.inverse() == cr.scalar1 * CycMat2::from_int(cr.n1));
}

TEST_CASE("conjugation: unipotent loop rejects the construction") {
    CHECK_THROWS_AS(find_conjugator(kHalf), std::domain_error);
}

TEST_CASE("infinity element after conjugation: cubes to a scalar") {
    // sixth: N_inf = (N0 N1)^{-1} = omega [[0,1],[-1,1]], cube -I
    ConjugationResult cr = find_conjugator(kSixth);
    CycMat2 n0 = cr.scalar0 * CycMat2::from_int(cr.n0);
    CycMat2 n1 = cr.scalar1 * CycMat2::from_int(cr.n1);
    CycMat2 ninf = (n0 * n1).inverse();
    CHECK(ninf == u(1, 3) * CycMat2::from_int(IntMat2{0, 1, -1, 1}));
    CHECK(ninf * ninf * ninf == cyc(-1) * CycMat2::identity());
    CHECK(projective_order(ninf) == 3);

    // twelfth: N_inf = i [[0,1],[-1,1]], cube i I
    cr = find_conjugator(kTwelfth);
    n0 = cr.scalar0 * CycMat2::from_int(cr.n0);
    n1 = cr.scalar1 * CycMat2::from_int(cr.n1);
    ninf = (n0 * n1).inverse();
    CHECK(ninf == u(1, 4) * CycMat2::from_int(IntMat2{0, 1, -1, 1}));
    CHECK(ninf * ninf * ninf == u(1, 4) * CycMat2::identity());
    CHECK(projective_order(ninf) == 3);
    CHECK(projective_order(ninf.to_mat2()) == 3);
}

TEST_CASE("group membership: congruence conditions") {
    CHECK(group_membership(mat_T() * mat_T(), GroupId::Gamma2));
    CHECK(!group_membership(mat_T(), GroupId::Gamma2));
    CHECK(group_membership(mat_W(), GroupId::Gamma2CubeRoot));
    CHECK(!group_membership(mat_W(), GroupId::Gamma2));
    CHECK(group_membership(IntMat2{1, -2, 2, -3}, GroupId::Gamma24));
    CHECK(group_membership(IntMat2{1, -2, 2, -3}, GroupId::Gamma2));
    // -I is in Gamma(2) but not Gamma(2,4)
    CHECK(group_membership(mat_I().neg(), GroupId::Gamma2));
    CHECK(!group_membership(mat_I().neg(), GroupId::Gamma24));
    CHECK(group_membership(mat_J(), GroupId::Gamma12));
    CHECK(!group_membership(mat_T(), GroupId::Gamma12));
    CHECK(group_membership(mat_T() * mat_T(), GroupId::Gamma12));
    CHECK(group_membership(IntMat2{2, 1, 1, 1}, GroupId::SL2Z));
    CHECK_THROWS_AS(group_membership(IntMat2{1, 0, 0, -1}, GroupId::Gamma2),
                    std::domain_error);
}

TEST_CASE("projective order: parabolic, elliptic, scalar") {
    CHECK(!projective_order(mat_T().to_mat2()).has_value());
    CHECK(!projective_order(CycMat2::from_int(mat_T())).has_value());
    CHECK(projective_order(mat_J().to_mat2()) == 2);
    CHECK(projective_order(mat_W().to_mat2()) == 3);
    CHECK(projective_order(mat_I().neg().to_mat2()) == 1);
    CHECK(projective_order(Mat2{Cplx(3, 0), Cplx(0, 0), Cplx(0, 0), Cplx(3, 0)}) == 1);
    // hyperbolic fast path
    CHECK(!projective_order(Mat2{Cplx(2, 0), Cplx(1, 0), Cplx(1, 0), Cplx(1, 0)}).has_value());
}

TEST_CASE("triangle data: angles and vertex orders") {
    TriangleData td = triangle_data(kHalf);
    CHECK(!td.order0.has_value());
    CHECK(!td.order1.has_value());
    CHECK(!td.orderinf.has_value());

    td = triangle_data(kSixth);
    CHECK(td.angle1 == Rational(1, 3));
    CHECK(!td.order0.has_value());
    CHECK(td.order1 == 3);
    CHECK(td.orderinf == 3);

    td = triangle_data(kTwelfth);
    CHECK(!td.order0.has_value());
    CHECK(td.order1 == 2);
    CHECK(td.orderinf == 3);
}

TEST_CASE("coset enumeration: indices 6 and 3 with the expected representatives") {
    std::vector<IntMat2> six = coset_representatives(GroupId::Gamma2, GroupId::SL2Z);
    CHECK(six.size() == 6);
    std::vector<IntMat2> expected{
        mat_I(), mat_W(), mat_W2(), mat_J(), mat_T(),
        mat_J().inverse_unimodular() * mat_T() * mat_J()};
    for (const IntMat2& e : expected) {
        int hits = 0;
        for (const IntMat2& r : six)
            if (group_membership(e * r.inverse_unimodular(), GroupId::Gamma2)) ++hits;
        CHECK(hits == 1);
    }

    std::vector<IntMat2> three =
        coset_representatives(GroupId::Gamma2, GroupId::Gamma2CubeRoot);
    CHECK(three.size() == 3);
    for (const IntMat2& e : {mat_I(), mat_W(), mat_W2()}) {
        int hits = 0;
        for (const IntMat2& r : three)
            if (group_membership(e * r.inverse_unimodular(), GroupId::Gamma2)) ++hits;
        CHECK(hits == 1);
    }
    CHECK_THROWS_AS(coset_representatives(GroupId::Gamma24, GroupId::SL2Z),
                    std::domain_error);
}

TEST_CASE("random words in the conjugated generators stay in the stated groups") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> pick(0, 1), len(1, 12);

    ConjugationResult six = find_conjugator(kSixth);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat2 word = mat_I();
        int n = len(rng);
        for (int k = 0; k < n; ++k) word = word * (pick(rng) ? six.n1 : six.n0);
        CHECK(group_membership(word, GroupId::Gamma2CubeRoot));
    }

    ConjugationResult twelve = find_conjugator(kTwelfth);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat2 word = mat_I();
        Cyc24 scalar = cyc(1);
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            if (pick(rng)) {
                word = word * twelve.n1;
                scalar = scalar * twelve.scalar1;
            } else {
                word = word * twelve.n0;
                scalar = scalar * twelve.scalar0;
            }
        }
        CHECK(word.det() == 1);
        bool power_of_i = scalar == cyc(1) || scalar == u(1, 4) ||
                          scalar == u(1, 2) || scalar == u(3, 4);
        CHECK(power_of_i);
    }
}

TEST_CASE("connection check: interval integrals match the basis combinations") {
    ConnectionResidual r = connection_check(kSixth, 0.5);
    CHECK(r.from_zero < 1e-8);
    CHECK(r.to_one < 1e-8);

    r = connection_check(kTwelfth, 0.3);
    CHECK(r.from_zero < 1e-8);
    CHECK(r.to_one < 1e-8);

    r = connection_check(kHalf, 0.5);
    CHECK(r.from_zero < 1e-8);
    CHECK(r.to_one < 1e-8);
    // contour additivity: the full-interval integral equals the sum of the
    // two combination predictions
    Cplx whole = euler_integral(kHalf, Cplx(0.5, 0), EulerKind::zero_to_z) +
                 euler_integral(kHalf, Cplx(0.5, 0), EulerKind::z_to_one);
    Cplx ea = unit_root(kHalf.a), eb = unit_root(kHalf.b), ec = unit_root(kHalf.c);
    Cplx eab = unit_root(kHalf.a + kHalf.b);
    BasisPair fp = hg_basis(kHalf, Cplx(0.5, 0));
    Cplx pred = (-(ec - 1.0) / (eb - 1.0) + (ec - eb) / (eb - 1.0)) * fp.f1 +
                ((ea - ec) / (eab - ea) - (eab - ec) / (eab - ea)) * fp.f2;
    CHECK(std::abs(whole - pred) < 1e-8);

    CHECK_THROWS_AS(connection_check(kSixth, 1.5), std::domain_error);
}
