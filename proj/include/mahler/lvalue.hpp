#pragma once

#include "mahler/forms.hpp"
#include "mahler/numeric.hpp"
#include "mahler/symconst.hpp"

namespace mahler {

// Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0 (Euler-Maclaurin).
Real hurwitz_zeta(long s, const Rational& a);

// L(chi, s) for integer s >= 2 via periodized Hurwitz zeta summation.
struct DirichletLResult {
    Real value;
    Real error_bound;
};
DirichletLResult dirichlet_l(const DirichletChar& chi, long s);

// Chowla-Selberg period Omega_15 for Q(sqrt(-15)).
Real chowla_selberg_omega15();

// Numeric values of the opaque symbolic constants.
SymContext make_sym_context();

struct LValueResult {
    Real value;
    Real error_bound;
    enum class Method { direct_sum, mellin_split, closed_form, nested_quadrature } method;
};

// Single L-values used by the paper:
//  - Eisenstein combinations evaluated through their zeta/Dirichlet closed
//    forms (with the bracket limit at p = 1 killing the zeta pole),
//  - f15 at p = 4 by direct summation with a divisor-bound tail.
LValueResult lvalue_single(FormId id, int p);

// Independent f15 route: Mellin split at the Fricke point with the measured
// involution constant.
LValueResult lvalue_f15_mellin();

// Fricke data for f15: constant c in f15(-1/(15 z)) = c z^3 f15(z), fitted
// numerically; `spread` is the max pairwise deviation across sample points.
struct FrickeFit {
    Complex constant;
    Real spread;
};
FrickeFit f15_fricke_fit(int sample_count = 20);

// Exact symbolic values from the section-7 chain.
SymExpr lvalue_f1_at2_symbolic();       // -(3/8) pi^2 L(chi_-3, 2)
SymExpr lvalue_f1f2hat_at3_symbolic();  // -(7/27) pi^2 zeta(3)

// Coefficients of f15 through q^order as machine integers (sparse route).
std::vector<long long> f15_coefficients(long order);

}  // namespace mahler
