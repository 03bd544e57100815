#include "hml/schwarz.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hml/modular.hpp"

namespace hml {

namespace {

// numerator parameters: the same (a, b) with third entry a + b, so the
// argument 1 - z sees local exponent difference zero (logarithmic vertex)
HGParams upper_params(SchwarzId id) {
    HGParams p = schwarz_params(id);
    return {p.a, p.b, p.a + p.b};
}

}  // namespace

HGParams schwarz_params(SchwarzId id) {
    switch (id) {
        case SchwarzId::phi0: return params_half();
        case SchwarzId::phi1: return params_sixth();
        case SchwarzId::phi2: return params_twelfth();
    }
    throw std::logic_error("schwarz_params: unreachable");
}

SchwarzValue schwarz_map(SchwarzId id, Cplx z) {
    // the z = 0 vertex is logarithmic for every tag: the value is the cusp
    if (std::abs(z) < 1e-12) {
        return {Cplx{0.0, std::numeric_limits<double>::infinity()}, true};
    }
    HGParams lower = schwarz_params(id);
    HGParams upper = upper_params(id);
    Cplx num, den;
    if (std::abs(1.0 - z) < 1e-12) {
        // the z = 1 vertex: the numerator series collapses to 1 and the
        // denominator tends to its endpoint limit (divergent for phi0,
        // whose vertex is the cusp tau = 0)
        num = Cplx{1.0, 0.0};
        den = gauss_limit(lower);
    } else {
        num = hg_principal(upper, 1.0 - z);
        den = hg_principal(lower, z);
    }
    bool cusp = std::abs(num) > 1e8 * std::abs(den);
    Cplx ratio = num / den;
    switch (id) {
        case SchwarzId::phi0:
            return {kI * ratio, cusp};
        case SchwarzId::phi1: {
            Cplx scale = beta_c(Cplx{1.0 / 6.0, 0.0}, Cplx{0.5, 0.0}) / kPi;
            return {kOmega2 + kI * scale * ratio, cusp};
        }
        case SchwarzId::phi2: {
            Cplx scale = beta_c(Cplx{1.0 / 12.0, 0.0}, Cplx{5.0 / 12.0, 0.0}) / (2.0 * kPi);
            return {kI * scale * ratio - kI, cusp};
        }
    }
    throw std::logic_error("schwarz_map: unreachable");
}

VertexLimits vertex_limits(SchwarzId id) {
    switch (id) {
        case SchwarzId::phi0:
            return {{true, {}}, {false, {0.0, 0.0}}, {false, {1.0, 0.0}}};
        case SchwarzId::phi1:
            return {{true, {}}, {false, kOmega}, {false, -kOmega2}};
        case SchwarzId::phi2:
            return {{true, {}}, {false, kI}, {false, -kOmega2}};
    }
    throw std::logic_error("vertex_limits: unreachable");
}

double roundtrip_residual(SchwarzId id, Cplx z) {
    if (std::abs(z) < 1e-3 || std::abs(1.0 - z) < 1e-3)
        throw std::domain_error("roundtrip_residual: z too close to a vertex");
    SchwarzValue v = schwarz_map(id, z);
    if (v.at_cusp) throw std::domain_error("roundtrip_residual: image at the cusp");
    switch (id) {
        case SchwarzId::phi0:
            return std::abs(lambda_fn(v.tau) - z);
        case SchwarzId::phi1: {
            ModularValue n = nu(v.tau);
            if (n.at_pole) throw std::domain_error("roundtrip_residual: nu pole hit");
            return std::abs(n.value - z);
        }
        case SchwarzId::phi2: {
            ModularValue j = j_invariant(v.tau);
            if (j.at_pole) throw std::domain_error("roundtrip_residual: j pole hit");
            return std::abs(1.0 / j.value - z);
        }
    }
    throw std::logic_error("roundtrip_residual: unreachable");
}

}  // namespace hml
