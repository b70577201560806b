#pragma once

#include "mahler/cheb.hpp"
#include "mahler/forms.hpp"
#include "mahler/lvalue.hpp"
#include "mahler/quadrature.hpp"

namespace mahler {

// Double L-value of holomorphic forms via the Lambda-integral representation:
//   L(inner, outer, p, s2)
//     = (2 pi)^{p+s2} / (Gamma(p) Gamma(s2)) * sum_{m=0}^{p-1} Lambda(p-m, s2+m),
//   Lambda(s1, s2) = int_0^inf t^{s2-1} outer(it) int_t^inf v^{s1-1} inner(iv) dv dt.
// The inner form must vanish at infinity. Integrals split at spec.split_point:
// q-expansions with incomplete-gamma closed forms above, Chebyshev models of
// the eta-reduced point values below. Returns exact zero when s2 <= 0.
LValueResult double_l_holo(FormId inner, FormId outer, int p, int s2, const QuadratureSpec& spec);

// The meromorphic weight-4 double L-values of the main theorem,
//   L(g_j, g_1, 3, 1) = (2 pi)^4 int_0^inf g1(is) A3(s) ds,  j in {2, 3},
// with A3 the triple tail-antiderivative of g_j along the imaginary axis.
LValueResult double_l_merom(int j, const QuadratureSpec& spec);

// Value of Lambda's inner integrand magnitude at a small t (decay check).
Real holo_integrand_magnitude(FormId inner, FormId outer, int s1, int s2, const Real& t,
                              const QuadratureSpec& spec);

}  // namespace mahler
