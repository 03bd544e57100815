#pragma once

// The Gauss hypergeometric series F(a,b,c;z), its principal continuation to
// C - [1,oo), the two-integral solution basis (f1,f2) of the hypergeometric
// equation, Euler-integral quadrature oracles, the Gauss limit at z=1, and
// Wronskian / ODE residual diagnostics.

#include <complex>

#include "hml/numeric.hpp"

namespace hml {

struct HGParams {
    Rational a, b, c;

    double av() const { return a.value(); }
    double bv() const { return b.value(); }
    double cv() const { return c.value(); }
};

// named triples used throughout
inline HGParams params_half() { return {{1, 2}, {1, 2}, {1, 1}}; }        // (1/2,1/2,1)
inline HGParams params_sixth() { return {{1, 6}, {1, 2}, {1, 1}}; }       // (1/6,1/2,1)
inline HGParams params_twelfth() { return {{1, 12}, {5, 12}, {1, 1}}; }   // (1/12,5/12,1)

struct SeriesConfig {
    double rel_tol = 1e-15;   // must lie in (0, 1e-6]
    int max_terms = 4000;     // must be >= 64

    void validate() const;
};

struct BasisPair {
    Cplx f1;
    Cplx f2;
};

// Direct power series; requires |z| < 1.  Terminates once three consecutive
// terms fall below rel_tol times the partial sum.  Throws when max_terms is
// exhausted with |z| >= 0.95 (no-convergence); otherwise returns the partial
// sum reached.
Cplx hg_series(const HGParams& p, Cplx z, const SeriesConfig& cfg = {});

// Value and term-wise derivative of the series, same contract as hg_series.
struct SeriesWithDerivative {
    Cplx value;
    Cplx derivative;
};
SeriesWithDerivative hg_series_d(const HGParams& p, Cplx z, const SeriesConfig& cfg = {});

// Single-valued principal branch on C - [1, oo).  Selection order:
//   |z| <= 0.8                   direct series
//   |1-z| <= 0.9, c-a-b not in Z two-term connection at z=1
//   |z/(z-1)| < 0.8              Pfaff transformation
// Throws std::domain_error on the cut or outside the covered region.
Cplx hg_principal(const HGParams& p, Cplx z);

// The basis of solutions around 1/2:
//   f1 = e^{-pi i (a-1)} B(a, b-c+1) F(a, b, a+b-c+1; 1-z)
//   f2 = B(a, c-a) F(a, b, c; z)
// Requires a,b not integers and Re(a), Re(b-c+1), Re(c-a) > 0.
BasisPair hg_basis(const HGParams& p, Cplx z);

enum class EulerKind { f1, f2, zero_to_z, z_to_one };

// Quadrature oracle for the integral representations.  For zero_to_z and
// z_to_one the branch phases follow the continuation of the integrand
// through the upper half t-plane, and z must be real in (0,1).
Cplx euler_integral(const HGParams& p, Cplx z, EulerKind which);

// Gauss's evaluation F(a,b,c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b));
// requires Re(c-a-b) > 0.
Cplx gauss_limit(const HGParams& p);

// |det [[F(a,b,a+b-c+1;1-z), d/dz ...],[F(a,b,c;z), d/dz ...]] - closed form|
// with the closed form Gamma(c)Gamma(a+b-c+1)/(Gamma(a)Gamma(b)) z^{-c} (1-z)^{c-a-b-1}.
double wronskian_residual(const HGParams& p, Cplx z);

// Residual of z(1-z)F'' + (c-(a+b+1)z)F' - abF applied to the truncated
// series with exact term-wise derivatives; requires |z| < 0.95.
double ode_residual(const HGParams& p, Cplx z);

}  // namespace hml
