#pragma once

// Circuit matrices of the hypergeometric equation on the basis (f1, f2),
// exact conjugation into scalar multiples of SL2(Z), congruence-subgroup
// membership, and the triangle data of the projective monodromy group.

#include <optional>
#include <vector>

#include "hml/cyclotomic.hpp"
#include "hml/hypergeometric.hpp"
#include "hml/numeric.hpp"

namespace hml {

struct RiemannScheme {
    Rational at0[2];    // exponents at z = 0: (0, 1-c)
    Rational at1[2];    // at z = 1: (0, c-a-b)
    Rational atinf[2];  // at z = infinity: (a, b)
    Rational diff0, diff1, diffinf;  // second minus first exponent per column
};

RiemannScheme riemann_scheme(const HGParams& p);

struct CircuitSet {
    CycMat2 m0;          // loop around 0
    CycMat2 m1;          // loop around 1
    CycMat2 minf;        // (m0 m1)^{-1}
    CycMat2 minf_prime;  // (m1 m0)^{-1}
};

CircuitSet circuit_matrices(const HGParams& p);

enum class Orientation { upper, lower };

struct ExactEigenRow {
    Cyc24 lambda;  // eigenvalue
    Cyc24 v1, v2;  // left row vector: (v1 v2) g = lambda (v1 v2)
};

struct InfinityCircuit {
    CycMat2 m;
    ExactEigenRow row_a;  // eigenvalue e^{2 pi i a}
    ExactEigenRow row_b;  // eigenvalue e^{2 pi i b}
};

InfinityCircuit infinity_circuit(const CircuitSet& cs, const HGParams& p,
                                 Orientation orientation);

struct ConjugationResult {
    CycMat2 r;       // r mi r^{-1} = scalar_i * ni
    IntMat2 n0, n1;
    Cyc24 scalar0, scalar1;
};

ConjugationResult find_conjugator(const HGParams& p);

enum class GroupId { SL2Z, Gamma2, Gamma24, Gamma2CubeRoot, Gamma12 };

bool group_membership(const IntMat2& g, GroupId id);

// least n <= 24 with g^n scalar; empty = infinite projective order
std::optional<int> projective_order(const Mat2& g);
std::optional<int> projective_order(const CycMat2& g);

struct TriangleData {
    Rational angle0, angle1, angleinf;           // in units of pi
    std::optional<int> order0, order1, orderinf;  // empty = infinite
};

TriangleData triangle_data(const HGParams& p);

// representatives of subgroup\whole, identity first; supports
// Gamma2 in SL2Z (6 cosets) and Gamma2 in Gamma2CubeRoot (3 cosets)
std::vector<IntMat2> coset_representatives(GroupId subgroup, GroupId whole);

struct ConnectionResidual {
    double from_zero;  // | quadrature(0..z) - combination of (f1, f2) |
    double to_one;     // | quadrature(z..1) - combination of (f1, f2) |
};

ConnectionResidual connection_check(const HGParams& p, double z);

}  // namespace hml
