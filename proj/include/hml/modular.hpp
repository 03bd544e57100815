#pragma once

// Theta constants and their transformation laws, the modular functions
// lambda, nu, j, the Eisenstein series E4, reduction to the classical
// fundamental domains, and Fourier coefficient extraction.

#include <functional>
#include <vector>

#include "hml/monodromy.hpp"
#include "hml/numeric.hpp"

namespace hml {

struct ThetaChar {
    int p = 0, q = 0;  // each 0 or 1; (1,1) is identically zero on H
};

struct QConfig {
    int n_max = 0;           // symmetric summation range -n_max .. n_max
    double tail_bound = 0.0; // magnitude of the first omitted term
};

// smallest range with pi * Im(tau) * n^2 > 40 (first omitted term < 1e-17)
QConfig default_qconfig(Cplx tau);

// direct q-series partial sum; requires Im(tau) >= 0.05
Cplx theta(ThetaChar ch, Cplx tau);
Cplx theta(ThetaChar ch, Cplx tau, const QConfig& cfg);

// squared theta constants evaluated by reduction to the fundamental domain
// followed by exact transport along the reduction word
struct ThetaSqTriple {
    Cplx t00, t01, t10;  // values of theta_pq(tau)^2
};

ThetaSqTriple theta_sq_triple(Cplx tau);

// transformation laws for squared theta constants
enum class SpecialElement { T, J, Sigma, W, W2 };  // Sigma = J^{-1} T J

struct ThetaLaw {
    Cplx expected;  // right-hand side of the law: factor * theta_xx(tau)^2
    Cplx factor;    // automorphy factor alone
};

ThetaLaw theta_transform(ThetaChar ch, SpecialElement g, Cplx tau);
// Fact on the Gamma_12 multiplier for theta_00^2; g must satisfy the
// normalization g21 > 0, or g21 = 0 and g22 > 0
ThetaLaw theta_transform_gamma12(const IntMat2& g, Cplx tau);

// value plus a marker for evaluation on a pole orbit
struct ModularValue {
    Cplx value{0.0, 0.0};
    bool at_pole = false;
};

Cplx lambda_fn(Cplx tau);

enum class NuForm { theta, lambda_based };
ModularValue nu(Cplx tau, NuForm form = NuForm::theta);

enum class JForm { theta, lambda_based };
ModularValue j_invariant(Cplx tau, JForm form = JForm::theta);

enum class E4Method { theta, fourier, lattice };
Cplx e4(Cplx tau, E4Method method = E4Method::theta, int lattice_radius = 200);

// fundamental-domain reduction: returns tau0 and g with g * tau0 = tau;
// SL2Z targets D = {-1/2 < Re <= 1/2, |tau| > 1} plus the arc
// {|tau| = 1, 0 <= Re <= 1/2}; Gamma2CubeRoot targets
// D~ = {-3/2 < Re <= 1/2, |tau| >= 1, |tau+1| > 1}
enum class DomainGroup { SL2Z, Gamma2CubeRoot };

struct Reduction {
    Cplx tau0;
    IntMat2 g;
};

Reduction reduce_fundamental(Cplx tau, DomainGroup group);

bool in_domain_d(Cplx tau, double tol = 1e-9);
bool in_domain_dtilde(Cplx tau, double tol = 1e-9);

// Fourier coefficients of a 1-periodic function on {Im > im0} by discrete
// orthogonality over M = max(4N, 64) points; optionally extracts a 1/q term
struct FourierSeries {
    std::vector<Cplx> coeffs;        // c_0 .. c_N
    Cplx leading_inv_q{0.0, 0.0};    // coefficient of 1/q when requested
    double residual = 0.0;           // off-grid reconstruction error
};

FourierSeries q_expand(const std::function<Cplx(Cplx)>& fn, int n_coeffs,
                       double im0 = 1.1, bool with_leading_inv_q = false);

}  // namespace hml
