#include "hml/monodromy.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hml {

namespace {

Rational rational_abs(const Rational& r) { return r.num < 0 ? Rational(-r.num, r.den) : r; }

Cyc24 unit(const Rational& r) { return Cyc24::unit(r); }

}  // namespace

RiemannScheme riemann_scheme(const HGParams& p) {
    RiemannScheme rs;
    rs.at0[0] = Rational(0);
    rs.at0[1] = Rational(1) - p.c;
    rs.at1[0] = Rational(0);
    rs.at1[1] = p.c - p.a - p.b;
    rs.atinf[0] = p.a;
    rs.atinf[1] = p.b;
    rs.diff0 = rs.at0[1] - rs.at0[0];
    rs.diff1 = rs.at1[1] - rs.at1[0];
    rs.diffinf = p.b - p.a;
    return rs;
}

CircuitSet circuit_matrices(const HGParams& p) {
    CircuitSet cs;
    // against the basis (f1, f2): the loop around 0 is upper triangular,
    // the loop around 1 lower triangular
    cs.m0 = {unit(-p.c), unit(-p.c) - unit(-p.a), Cyc24(), Cyc24(1)};
    cs.m1 = {Cyc24(1), Cyc24(), unit(p.c - p.b) - Cyc24(1), unit(p.c - p.a - p.b)};
    cs.minf = (cs.m0 * cs.m1).inverse();
    cs.minf_prime = (cs.m1 * cs.m0).inverse();
    return cs;
}

InfinityCircuit infinity_circuit(const CircuitSet& cs, const HGParams& p,
                                 Orientation orientation) {
    InfinityCircuit out;
    Cyc24 ea = unit(p.a), eb = unit(p.b), ec = unit(p.c);
    Cyc24 eab = unit(p.a + p.b), eac = unit(p.a + p.c), ebc = unit(p.b + p.c);
    if (orientation == Orientation::upper) {
        out.m = cs.minf;
        out.row_a = {ea, eab - eac, ea - ec};
        out.row_b = {eb, ea, Cyc24(1)};
    } else {
        out.m = cs.minf_prime;
        out.row_a = {ea, eab - eac, eab - ebc};
        out.row_b = {eb, Cyc24(1), Cyc24(1)};
    }
    return out;
}

namespace {

// nonzero rationals ordered by height max(|num|, den), then numerically
std::vector<Rational> root_candidates(int64_t max_height) {
    std::vector<Rational> out;
    for (int64_t h = 1; h <= max_height; ++h) {
        for (int64_t den = 1; den <= h; ++den) {
            for (int64_t num = -h; num <= h; ++num) {
                if (num == 0) continue;
                Rational r(num, den);
                if (r.num == num && r.den == den &&
                    std::max<int64_t>(std::llabs(num), den) == h)
                    out.push_back(r);
            }
        }
    }
    return out;
}

}  // namespace

ConjugationResult find_conjugator(const HGParams& p) {
    CircuitSet cs = circuit_matrices(p);
    Cyc24 mu = cs.m1.d;        // e^{2 pi i (c-a-b)}
    Cyc24 m21 = cs.m1.c;
    if (mu == Cyc24(1) || m21.is_zero())
        throw std::domain_error("find_conjugator: loop around 1 is not diagonalizable "
                                "with a nontrivial root-of-unity eigenvalue");

    // target data keyed by the nontrivial eigenvalue: an integer matrix W_t,
    // a scalar s1 with s1 * eig(W_t) = (1, mu), and the diagonalizer Q of W_t
    // normalized to second components 1
    IntMat2 wt;
    Cyc24 s1;
    CycMat2 q;
    if (mu == unit(Rational(1, 3))) {
        wt = mat_W();                       // order 3, eigenvalues (omega, omega^2)
        s1 = unit(Rational(2, 3));
        q = {unit(Rational(1, 3)), unit(Rational(2, 3)), Cyc24(1), Cyc24(1)};
    } else if (mu == unit(Rational(1, 2))) {
        wt = mat_J();                       // order 4, eigenvalues (-i, i) after s1 = i
        s1 = unit(Rational(1, 4));
        q = {unit(Rational(1, 4)), unit(Rational(-1, 4)), Cyc24(1), Cyc24(1)};
    } else {
        throw std::domain_error("find_conjugator: unsupported eigenvalue pair");
    }

    // eigenvector (v1, 1) of m1 for eigenvalue 1
    Cyc24 v1 = (Cyc24(1) - mu) / m21;

    // S(x) = q * [[x, 0], [-1, v1]] is R_x stripped of the det(P_x) scale; the
    // (2,1)-entry of R_x m0 R_x^{-1} vanishes exactly when
    // num(x) = [S m0 adj(S)]_{21} does (x = 0 excluded)
    auto num_at = [&](const Cyc24& x) -> Cyc24 {
        CycMat2 s{q.a * x - q.b, q.b * v1, q.c * x - q.d, q.d * v1};
        CycMat2 adj{s.d, -s.b, -s.c, s.a};
        CycMat2 prod = s * cs.m0 * adj;
        return prod.c;
    };
    Cyc24 gamma = num_at(Cyc24(0));
    Cyc24 at1 = num_at(Cyc24(1));
    Cyc24 atm1 = num_at(Cyc24(-1));
    Cyc24 half(Rational(1, 2));
    Cyc24 alpha = half * (at1 + atm1) - gamma;
    Cyc24 beta = half * (at1 - atm1);

    for (const Rational& cand : root_candidates(24)) {
        Cyc24 x(cand);
        if ((alpha * x * x + beta * x + gamma).is_zero()) {
            // R = q * P_x^{-1}, P_x = [[v1, 0], [1, x]]
            CycMat2 px{v1, Cyc24(), Cyc24(1), x};
            CycMat2 r = q * px.inverse();
            CycMat2 n0c = r * cs.m0 * r.inverse();
            auto n0 = n0c.as_integer_matrix();
            if (!n0) continue;
            CycMat2 n1c = r * cs.m1 * r.inverse();
            if (n1c != s1 * CycMat2::from_int(wt))
                throw std::logic_error("find_conjugator: target conjugation failed");
            return {r, *n0, wt, Cyc24(1), s1};
        }
    }
    throw std::runtime_error("find_conjugator: no rational root of the (2,1)-entry "
                             "polynomial yields an integral conjugate");
}

bool group_membership(const IntMat2& g, GroupId id) {
    if (g.det() != 1) throw std::domain_error("group_membership: determinant must be 1");
    auto even = [](int64_t x) { return x % 2 == 0; };
    auto one_mod4 = [](int64_t x) { return ((x % 4) + 4) % 4 == 1; };
    switch (id) {
        case GroupId::SL2Z:
            return true;
        case GroupId::Gamma2:
            return even(g.a - 1) && even(g.d - 1) && even(g.b) && even(g.c);
        case GroupId::Gamma24:
            return one_mod4(g.a) && one_mod4(g.d) && even(g.b) && even(g.c);
        case GroupId::Gamma2CubeRoot: {
            IntMat2 g3 = g * g * g;
            return group_membership(g3, GroupId::Gamma2);
        }
        case GroupId::Gamma12:
            return even(g.a * g.b) && even(g.c * g.d);
    }
    throw std::logic_error("group_membership: unreachable");
}

std::optional<int> projective_order(const Mat2& g) {
    double scale = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
    if (scale == 0.0) throw std::domain_error("projective_order: zero matrix");
    // fast path: a strictly hyperbolic real matrix (det normalized) has
    // infinite projective order
    double im = std::max({std::abs(g.a.imag()), std::abs(g.b.imag()),
                          std::abs(g.c.imag()), std::abs(g.d.imag())});
    Cplx det = g.det();
    if (im < 1e-14 * scale && std::abs(det) > 0.0) {
        double tr_n = std::abs((g.a + g.d).real()) / std::sqrt(std::abs(det));
        bool scalar = std::abs(g.b) < 1e-12 * scale && std::abs(g.c) < 1e-12 * scale &&
                      std::abs(g.a - g.d) < 1e-12 * scale;
        if (tr_n > 2.0 + 1e-9 && !scalar) return std::nullopt;
    }
    Mat2 pw = g;
    for (int n = 1; n <= 24; ++n) {
        double s = std::max({std::abs(pw.a), std::abs(pw.b), std::abs(pw.c), std::abs(pw.d)});
        if (std::abs(pw.b) < 1e-9 * s && std::abs(pw.c) < 1e-9 * s &&
            std::abs(pw.a - pw.d) < 1e-9 * s)
            return n;
        pw = pw * g;
    }
    return std::nullopt;
}

std::optional<int> projective_order(const CycMat2& g) {
    CycMat2 pw = g;
    for (int n = 1; n <= 24; ++n) {
        if (pw.b.is_zero() && pw.c.is_zero() && pw.a == pw.d) return n;
        pw = pw * g;
    }
    return std::nullopt;
}

TriangleData triangle_data(const HGParams& p) {
    TriangleData td;
    td.angle0 = rational_abs(Rational(1) - p.c);
    td.angle1 = rational_abs(p.c - p.a - p.b);
    td.angleinf = rational_abs(p.a - p.b);
    auto order_of = [](const Rational& angle) -> std::optional<int> {
        if (angle.num == 0) return std::nullopt;
        return static_cast<int>(angle.den);  // least k with k*angle an integer
    };
    td.order0 = order_of(td.angle0);
    td.order1 = order_of(td.angle1);
    td.orderinf = order_of(td.angleinf);
    return td;
}

std::vector<IntMat2> coset_representatives(GroupId subgroup, GroupId whole) {
    if (subgroup != GroupId::Gamma2 ||
        (whole != GroupId::SL2Z && whole != GroupId::Gamma2CubeRoot))
        throw std::domain_error("coset_representatives: unsupported pair");

    std::vector<IntMat2> gens;
    if (whole == GroupId::SL2Z) {
        gens = {mat_T(), mat_J()};
    } else {
        gens = {mat_W(), mat_T() * mat_T(), IntMat2{1, 0, 2, 1}};
    }

    std::vector<IntMat2> reps{mat_I()};
    size_t head = 0;
    while (head < reps.size()) {
        IntMat2 r = reps[head++];
        for (const IntMat2& s : gens) {
            IntMat2 cand = r * s;
            bool known = false;
            for (const IntMat2& other : reps) {
                if (group_membership(cand * other.inverse_unimodular(), GroupId::Gamma2)) {
                    known = true;
                    break;
                }
            }
            if (!known) reps.push_back(cand);
        }
        if (reps.size() > 64)
            throw std::runtime_error("coset_representatives: enumeration did not close");
    }
    return reps;
}

ConnectionResidual connection_check(const HGParams& p, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("connection_check: z must lie in (0,1)");
    Cplx ea = unit_root(p.a), eb = unit_root(p.b), ec = unit_root(p.c);
    Cplx eab = unit_root(p.a + p.b);
    BasisPair fp = hg_basis(p, Cplx(z, 0));

    Cplx c1 = -(ec - 1.0) / (eb - 1.0);
    Cplx c2 = (ea - ec) / (eab - ea);
    Cplx from_zero = euler_integral(p, Cplx(z, 0), EulerKind::zero_to_z);
    double r0 = std::abs(from_zero - (c1 * fp.f1 + c2 * fp.f2));

    Cplx d1 = (ec - eb) / (eb - 1.0);
    Cplx d2 = -(eab - ec) / (eab - ea);
    Cplx to_one = euler_integral(p, Cplx(z, 0), EulerKind::z_to_one);
    double r1 = std::abs(to_one - (d1 * fp.f1 + d2 * fp.f2));

    return {r0, r1};
}

}  // namespace hml
