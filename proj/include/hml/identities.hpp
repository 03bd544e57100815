#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hml/numeric.hpp"

namespace hml {

// Named residual checks.  Tags ending in a parameter hint sample tau inside
// the matching fundamental region; fe/pullback tags sample z; fourier tags
// expand along a horizontal line and compare integer coefficients.
enum class IdentityId {
    jacobi_id_theta,          // theta00^4 = theta01^4 + theta10^4 on H
    jacobi_formula,           // theta00^2 = F(1/2,1/2,1;lambda) on D(2) interior
    jacobi_T,                 // theta01^2 = F(1/2,1/2,1;lambda/(lambda-1))
    jacobi_pullback,          // the pair pulled back through phi0
    j621,                     // theta00^4 + w theta10^4 = F(1/6,1/2,1;nu)^2
    j621_inv,                 // theta01^4 - w theta10^4 = F(1/6,1/2,1;nu/(nu-1))^2
    theta_quartic_relations,  // chained quartic consequences of Jacobi's identity
    e4_product,               // E4 = F(1/6,..;nu)^2 F(1/6,..;nu/(nu-1))^2
    e4_j_formula,             // E4 = F(1/12,5/12,1;1/j)^4 on D interior
    pullback_phi1,            // the sixth-family pullbacks through phi1
    pullback_phi2,            // F(1/12,5/12,1;z)^4 = E4(phi2(z))
    fe1,                      // functional equation, (1+wz)^3 argument
    fe2,                      // functional equation, (z+w)^3 argument
    fe3,                      // F(1/12,..)^2 = F(1/6,..;z) F(1/6,..;z/(z-1))
    fe4,                      // quartic functional equation
    fourier_e4,               // 1, 240, 2160, 6720
    fourier_F2,               // 1, 120, -6120, 737760
    fourier_F1,               // 1, 60, -4860, 660480
    fourier_1728j,            // 1/q, 744, 196884
};

std::vector<IdentityId> all_identities();
const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

struct CheckReport {
    IdentityId id;
    Cplx point{0.0, 0.0};  // tau, z, or i*height for fourier tags
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double residual = 0.0;      // |lhs - rhs|
    double rel_residual = 0.0;  // residual / max(|lhs|, |rhs|)
    double tol = 1e-8;
    bool pass = false;     // residual <= tol or rel_residual <= tol
    bool skipped = false;  // pole-orbit point: excluded, not failed
    std::string label;     // sub-check name for multi-part identities
};

// Worst sub-check at one point.  Throws std::domain_error when the point is
// outside the identity's stated region; pole hits come back marked skipped.
CheckReport check_identity(IdentityId id, Cplx point, double tol = 1e-8);

// Every sub-check over the tag's own low-discrepancy grid (fourier tags
// ignore n_points; they produce one report per published coefficient).
std::vector<CheckReport> run_identity(IdentityId id, int n_points, double tol,
                                      unsigned skip = 0);

// Integer Fourier-coefficient comparisons for all four fourier tags.
std::vector<CheckReport> fourier_acceptance();

// The chained quartic equalities at one tau (nine reports, relative 1e-12).
std::vector<CheckReport> check_theta_quartics(Cplx tau);

struct SuiteGrid {
    int tau_points = 10;
    int z_points = 10;
    unsigned skip = 0;  // leading low-discrepancy points to drop
};

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool all_pass() const { return failed == 0; }
};

// Runs every tag over its grid (parallel across points, merged in a fixed
// order).  Failures are data, not errors.
SuiteSummary verify_suite(const SuiteGrid& grid, double tol,
                          std::vector<CheckReport>* reports = nullptr);

}  // namespace hml
