#pragma once

// Double-exponential (tanh-sinh) quadrature on (0,1) for integrands with
// algebraic endpoint singularities.  The integrand receives both s and 1-s
// computed without cancellation so that factors like s^{a-1} (1-s)^{c-a-1}
// stay accurate at both ends.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hml/numeric.hpp"

namespace hml {

struct QuadResult {
    Cplx value;
    double err_estimate;  // |last level correction|
    int levels_used;
};

// Integrate f(s, 1-s) over s in (0,1).  rel_tol is the target relative
// accuracy of the result; throws std::runtime_error when the level cap is
// reached without meeting it.
template <typename F>
QuadResult tanh_sinh_01(F&& f, double rel_tol = 1e-12) {
    // abscissa at parameter u: s = 1/(1+e^{-2t}), t = (pi/2) sinh u
    // weight: ds/du = (pi/2) cosh(u) / (2 cosh^2 t)
    auto eval_pair = [&f](double u) -> Cplx {
        double t = 0.5 * kPi * std::sinh(u);
        double e2 = std::exp(-2.0 * std::abs(t));
        double small = e2 / (1.0 + e2);   // min(s, 1-s)
        double big = 1.0 / (1.0 + e2);    // max(s, 1-s)
        double ch = std::cosh(t);
        double w = 0.5 * kPi * std::cosh(u) / (2.0 * ch * ch);
        if (w == 0.0 || small == 0.0) return {0.0, 0.0};
        Cplx v = (t >= 0.0) ? f(big, small) : f(small, big);
        return w * v;
    };

    // u_max must reach far enough that the double-exponential weight crushes
    // the strongest endpoint singularity in use (s^{-11/12}); at u = 6 the
    // weighted integrand is below 1e-20 for every exponent > -1.
    const double u_max = 6.0;
    const int max_level = 12;

    // level 0: trapezoid with h = 1
    double h = 1.0;
    Cplx sum = eval_pair(0.0);
    for (int k = 1; k * h <= u_max; ++k) sum += eval_pair(k * h) + eval_pair(-k * h);
    Cplx integral = sum * h;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        Cplx add{0.0, 0.0};
        for (double u = h; u <= u_max; u += 2.0 * h) add += eval_pair(u) + eval_pair(-u);
        Cplx refined = integral * 0.5 + add * h;
        double delta = std::abs(refined - integral);
        integral = refined;
        if (level >= 3 && delta <= rel_tol * std::max(std::abs(integral), 1e-300))
            return {integral, delta, level};
    }
    throw std::runtime_error("tanh_sinh_01: quadrature did not converge");
}

}  // namespace hml
