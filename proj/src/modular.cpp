#include "hml/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hml {

namespace {

Cplx ipow(std::int64_t k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Cplx sq(Cplx z) { return z * z; }

// one step of the walk toward the fundamental domain
struct Step {
    bool invert = false;    // true: next = -1/cur; false: next = cur - shift
    std::int64_t shift = 0;
    Cplx before;            // value before the step
};

Reduction reduce_sl2z(Cplx tau, std::vector<Step>* steps) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("reduce_fundamental: tau must lie in the upper half plane");
    Cplx t = tau;
    IntMat2 g{1, 0, 0, 1};
    const IntMat2 j_inv{0, -1, 1, 0};
    for (int iter = 0; iter < 10000; ++iter) {
        double re = t.real();
        std::int64_t m = std::llround(re);
        if (re - static_cast<double>(m) <= -0.5) m -= 1;  // land in (-1/2, 1/2]
        if (m != 0) {
            if (steps) steps->push_back({false, m, t});
            t -= static_cast<double>(m);
            g = g * IntMat2{1, m, 0, 1};
        }
        if (std::norm(t) < 1.0 - 1e-14) {
            if (steps) steps->push_back({true, 0, t});
            t = -1.0 / t;
            g = g * j_inv;
            continue;
        }
        // the left half of the unit arc is the J-image of the right half
        if (std::abs(std::norm(t) - 1.0) <= 1e-12 && t.real() < -1e-15) {
            if (steps) steps->push_back({true, 0, t});
            t = -1.0 / t;
            g = g * j_inv;
        }
        return {t, g};
    }
    throw std::runtime_error("reduce_fundamental: no convergence after 10^4 steps");
}

void require_im(Cplx tau, const char* who) {
    if (!(tau.imag() >= 0.05)) {
        throw std::domain_error(std::string(who) +
                                ": Im(tau) < 0.05; reduce to the fundamental domain first");
    }
}

// value/pole bookkeeping shared by nu and j
ModularValue guarded_ratio(Cplx num, Cplx den) {
    ModularValue out;
    out.at_pole = std::abs(den) < 1e-13 * std::abs(num);
    if (den != Cplx{0.0, 0.0}) {
        out.value = num / den;
    } else {
        out.value = Cplx{std::numeric_limits<double>::infinity(), 0.0};
    }
    return out;
}

}  // namespace

QConfig default_qconfig(Cplx tau) {
    require_im(tau, "theta");
    double im = tau.imag();
    int n = 1;
    while (kPi * im * n * n <= 40.0) ++n;
    double r = n + 0.5;  // slowest-decaying characteristic has half-integral index
    return {n, std::exp(-kPi * im * r * r)};
}

Cplx theta(ThetaChar ch, Cplx tau, const QConfig& cfg) {
    if ((ch.p != 0 && ch.p != 1) || (ch.q != 0 && ch.q != 1))
        throw std::domain_error("theta: characteristics must be 0 or 1");
    require_im(tau, "theta");
    if (cfg.n_max < 1) throw std::domain_error("theta: empty summation range");
    if (ch.p == 1 && ch.q == 1) return {0.0, 0.0};  // odd characteristic: identically zero
    Cplx acc{0.0, 0.0};
    double hp = 0.5 * ch.p;
    for (std::int64_t n = -cfg.n_max; n <= cfg.n_max; ++n) {
        double r = static_cast<double>(n) + hp;
        acc += std::exp(kI * kPi * (r * r * tau + r * static_cast<double>(ch.q)));
    }
    return acc;
}

Cplx theta(ThetaChar ch, Cplx tau) { return theta(ch, tau, default_qconfig(tau)); }

ThetaSqTriple theta_sq_triple(Cplx tau) {
    std::vector<Step> steps;
    Reduction base = reduce_sl2z(tau, &steps);
    QConfig cfg = default_qconfig(base.tau0);
    Cplx a = theta({0, 0}, base.tau0, cfg);
    Cplx b = theta({0, 1}, base.tau0, cfg);
    Cplx c = theta({1, 0}, base.tau0, cfg);
    ThetaSqTriple t{a * a, b * b, c * c};
    // walk the reduction backwards, applying the squared-theta laws exactly
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->invert) {
            // values at s from values at -1/s: divide by (-i s) and swap 01/10
            Cplx f = -kI * it->before;
            t = {t.t00 / f, t.t10 / f, t.t01 / f};
        } else {
            // values at s + m from values at s: swap 00/01 when m is odd
            bool odd = (it->shift % 2) != 0;
            ThetaSqTriple s = t;
            t.t00 = odd ? s.t01 : s.t00;
            t.t01 = odd ? s.t00 : s.t01;
            t.t10 = ipow(it->shift) * s.t10;
        }
    }
    return t;
}

ThetaLaw theta_transform(ThetaChar ch, SpecialElement g, Cplx tau) {
    if ((ch.p != 0 && ch.p != 1) || (ch.q != 0 && ch.q != 1))
        throw std::domain_error("theta_transform: characteristics must be 0 or 1");
    if (ch.p == 1 && ch.q == 1)
        throw std::domain_error("theta_transform: no law for the vanishing characteristic");
    const ThetaChar chars[3] = {{0, 0}, {0, 1}, {1, 0}};
    int idx = ch.p == 1 ? 2 : ch.q;
    int src = idx;
    Cplx f{1.0, 0.0};
    switch (g) {
        case SpecialElement::T: {
            // swaps 00 and 01, multiplies the 10-square by i
            const int srcs[3] = {1, 0, 2};
            const Cplx fs[3] = {{1.0, 0.0}, {1.0, 0.0}, kI};
            src = srcs[idx];
            f = fs[idx];
        } break;
        case SpecialElement::J: {
            // common factor -i tau, swaps 01 and 10
            const int srcs[3] = {0, 2, 1};
            src = srcs[idx];
            f = -kI * tau;
        } break;
        case SpecialElement::Sigma: {
            // J^{-1} T J: composition of the two rows above
            const int srcs[3] = {2, 1, 0};
            const Cplx fs[3] = {1.0 - tau, kI * (1.0 - tau), 1.0 - tau};
            src = srcs[idx];
            f = fs[idx];
        } break;
        case SpecialElement::W: {
            const int srcs[3] = {2, 0, 1};
            const Cplx fs[3] = {-kI * tau, -kI * tau, -tau};
            src = srcs[idx];
            f = fs[idx];
        } break;
        case SpecialElement::W2: {
            const int srcs[3] = {1, 2, 0};
            const Cplx fs[3] = {-kI * (tau + 1.0), tau + 1.0, -kI * (tau + 1.0)};
            src = srcs[idx];
            f = fs[idx];
        } break;
    }
    Cplx base = theta(chars[src], tau);
    return {f * base * base, f};
}

ThetaLaw theta_transform_gamma12(const IntMat2& g_in, Cplx tau) {
    if (g_in.det() != 1)
        throw std::domain_error("theta_transform_gamma12: determinant must be 1");
    if (!group_membership(g_in, GroupId::Gamma12))
        throw std::domain_error("theta_transform_gamma12: element outside the theta group");
    IntMat2 g = g_in;
    // the multiplier formula is stated for g21 > 0, or g21 = 0 and g22 > 0;
    // both signs act identically, so normalize silently
    if (g.c < 0 || (g.c == 0 && g.d < 0)) g = g.neg();
    Cplx chi = (g.c % 2 == 0) ? ipow(g.d - 1)  // g22 odd
                              : ipow(-g.c);    // g21 odd, g22 even
    Cplx f = chi * (static_cast<double>(g.c) * tau + static_cast<double>(g.d));
    Cplx base = theta({0, 0}, tau);
    return {f * base * base, f};
}

Cplx lambda_fn(Cplx tau) {
    require_im(tau, "lambda");
    ThetaSqTriple t = theta_sq_triple(tau);
    return sq(t.t10) / sq(t.t00);
}

ModularValue nu(Cplx tau, NuForm form) {
    require_im(tau, "nu");
    const double three_root_three = 3.0 * std::sqrt(3.0);
    if (form == NuForm::theta) {
        ThetaSqTriple t = theta_sq_triple(tau);
        Cplx f00 = sq(t.t00), f01 = sq(t.t01), f10 = sq(t.t10);  // fourth powers
        Cplx den = f00 + kOmega * f10;
        return guarded_ratio(three_root_three * kI * f00 * f01 * f10, den * den * den);
    }
    Cplx l = lambda_fn(tau);
    Cplx den = l + kOmega2;
    return guarded_ratio(three_root_three * kI * l * (1.0 - l), den * den * den);
}

ModularValue j_invariant(Cplx tau, JForm form) {
    require_im(tau, "j_invariant");
    if (form == JForm::theta) {
        ThetaSqTriple t = theta_sq_triple(tau);
        Cplx e00 = sq(sq(t.t00)), e01 = sq(sq(t.t01)), e10 = sq(sq(t.t10));  // eighth powers
        Cplx s = e00 + e01 + e10;
        return guarded_ratio(s * s * s / 54.0, e00 * e01 * e10);
    }
    Cplx l = lambda_fn(tau);
    Cplx num = l * l - l + 1.0;
    Cplx den = l * (1.0 - l);
    return guarded_ratio((4.0 / 27.0) * num * num * num, den * den);
}

Cplx e4(Cplx tau, E4Method method, int lattice_radius) {
    require_im(tau, "e4");
    switch (method) {
        case E4Method::theta: {
            ThetaSqTriple t = theta_sq_triple(tau);
            return (sq(sq(t.t00)) + sq(sq(t.t01)) + sq(sq(t.t10))) / 2.0;
        }
        case E4Method::fourier: {
            // Lambert form 1 + 240 sum n^3 q^n / (1 - q^n)
            Cplx q = std::exp(2.0 * kPi * kI * tau);
            Cplx acc{1.0, 0.0};
            Cplx qn{1.0, 0.0};
            for (int n = 1; n <= 4000; ++n) {
                qn *= q;
                double n3 = static_cast<double>(n) * n * n;
                Cplx term = 240.0 * n3 * qn / (1.0 - qn);
                acc += term;
                if (std::abs(term) < 1e-18 * std::abs(acc)) break;
            }
            return acc;
        }
        case E4Method::lattice: {
            if (lattice_radius < 1)
                throw std::domain_error("e4: lattice radius must be positive");
            Cplx acc{0.0, 0.0};
            for (std::int64_t n1 = -lattice_radius; n1 <= lattice_radius; ++n1) {
                for (std::int64_t n2 = -lattice_radius; n2 <= lattice_radius; ++n2) {
                    if (n1 == 0 && n2 == 0) continue;
                    Cplx w = static_cast<double>(n1) * tau + static_cast<double>(n2);
                    acc += 1.0 / sq(sq(w));
                }
            }
            double zeta4 = kPi * kPi * kPi * kPi / 90.0;
            return acc / (2.0 * zeta4);
        }
    }
    throw std::logic_error("e4: unreachable");
}

Reduction reduce_fundamental(Cplx tau, DomainGroup group) {
    Reduction r = reduce_sl2z(tau, nullptr);
    if (group == DomainGroup::SL2Z) return r;
    if (group_membership(r.g, GroupId::Gamma2CubeRoot)) return r;
    // odd coset: move tau0 into the doubled region, restoring even parity.
    // A translate off the arc keeps |tau0 - 1| >= 1; an arc point must be
    // flipped instead, since translating it would land on |tau + 1| = 1.
    if (std::abs(std::norm(r.tau0) - 1.0) <= 1e-9) {
        return {-1.0 / r.tau0, r.g * IntMat2{0, -1, 1, 0}};
    }
    return {r.tau0 - 1.0, r.g * IntMat2{1, 1, 0, 1}};
}

bool in_domain_d(Cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) return false;
    double re = tau.real();
    double a = std::abs(tau);
    if (re <= -0.5 - tol || re > 0.5 + tol) return false;
    if (a < 1.0 - tol) return false;
    if (a <= 1.0 + tol && re < -tol) return false;  // only the right half of the arc
    return true;
}

bool in_domain_dtilde(Cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) return false;
    double re = tau.real();
    if (re <= -1.5 - tol || re > 0.5 + tol) return false;
    if (std::abs(tau) < 1.0 - tol) return false;
    if (std::abs(tau + 1.0) < 1.0 - tol) return false;
    return true;
}

FourierSeries q_expand(const std::function<Cplx(Cplx)>& fn, int n_coeffs, double im0,
                       bool with_leading_inv_q) {
    if (n_coeffs < 0) throw std::domain_error("q_expand: coefficient count must be nonnegative");
    if (!(im0 > 0.0)) throw std::domain_error("q_expand: sampling height must be positive");

    const int m_pts = std::max(4 * n_coeffs, 64);
    std::vector<Cplx> samples(m_pts);
    for (int m = 0; m < m_pts; ++m) {
        double x = static_cast<double>(m) / m_pts - 0.5;
        samples[m] = fn(Cplx{x, im0});
    }
    auto hat = [&](int k) {
        Cplx acc{0.0, 0.0};
        for (int m = 0; m < m_pts; ++m) {
            double x = static_cast<double>(m) / m_pts - 0.5;
            acc += samples[m] * std::exp(-2.0 * kPi * kI * (static_cast<double>(k) * x));
        }
        return acc / static_cast<double>(m_pts);
    };

    // raw spectrum out to twice the requested order; a periodic holomorphic
    // sample must decay there, otherwise the scaled coefficients are aliased
    const int k_hi = std::min(2 * n_coeffs + 8, m_pts / 2);
    std::vector<Cplx> raw(k_hi + 1);
    double spec_max = 0.0;
    for (int k = 0; k <= k_hi; ++k) {
        raw[k] = hat(k);
        spec_max = std::max(spec_max, std::abs(raw[k]));
    }
    double tail_max = 0.0;
    for (int k = std::max(n_coeffs + 1, k_hi - 3); k <= k_hi; ++k)
        tail_max = std::max(tail_max, std::abs(raw[k]));
    if (tail_max > 1e-6 * spec_max)
        throw std::runtime_error("q_expand: trailing coefficients fail the decay check (aliasing)");

    FourierSeries out;
    out.coeffs.resize(n_coeffs + 1);
    for (int k = 0; k <= n_coeffs; ++k)
        out.coeffs[k] = raw[k] * std::exp(2.0 * kPi * static_cast<double>(k) * im0);
    if (with_leading_inv_q) out.leading_inv_q = hat(-1) * std::exp(-2.0 * kPi * im0);

    // reconstruction error at off-grid points
    for (int j = 0; j < 5; ++j) {
        double x = (static_cast<double>(j) + 0.37) / 5.0 - 0.5;
        Cplx taus{x, im0};
        Cplx q = std::exp(2.0 * kPi * kI * taus);
        Cplx rec{0.0, 0.0};
        Cplx qk{1.0, 0.0};
        for (int k = 0; k <= n_coeffs; ++k) {
            rec += out.coeffs[k] * qk;
            qk *= q;
        }
        if (with_leading_inv_q) rec += out.leading_inv_q / q;
        out.residual = std::max(out.residual, std::abs(rec - fn(taus)));
    }
    return out;
}

}  // namespace hml
