#pragma once

#include "mahler/numeric.hpp"

#include <functional>
#include <vector>

namespace mahler {

struct QuadratureSpec {
    enum class Rule { adaptive_gauss_legendre, double_exponential };
    Rule rule = Rule::adaptive_gauss_legendre;
    // Absolute tolerance; clamped to >= 2^-(precision-16).
    Real abs_tol = Real(0);
    // Split point between pointwise-quadrature and q-expansion regimes.
    Real split_point = Real(Rational(3, 10));
    // Number of q-expansion terms used for closed-form tails.
    long tail_order = 360;

    Real effective_tol() const;
};

struct QuadResult {
    Real value;
    Real error_bound;
};

using RealFn = std::function<Real(const Real&)>;

// Gauss-Legendre nodes/weights on [-1,1]; cached per (order, precision).
const std::pair<std::vector<Real>, std::vector<Real>>& gauss_legendre_rule(int order);

QuadResult integrate_gl_adaptive(const RealFn& f, const Real& a, const Real& b, const Real& abs_tol,
                                 int order = 24, int max_depth = 36);

// tanh-sinh rule; robust for endpoint decay/singularities on finite intervals.
QuadResult integrate_tanh_sinh(const RealFn& f, const Real& a, const Real& b, const Real& abs_tol);

QuadResult integrate(const QuadratureSpec& spec, const RealFn& f, const Real& a, const Real& b);

}  // namespace mahler
