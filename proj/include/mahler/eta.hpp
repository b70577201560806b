#pragma once

#include "mahler/numeric.hpp"
#include "mahler/qseries.hpp"

#include <vector>

namespace mahler {

// Product Prod_j eta(d_j z)^{k_j}.
struct EtaQuotient {
    struct Factor {
        long scale;     // d > 0
        long exponent;  // k, any nonzero integer
    };
    std::vector<Factor> factors;

    Rational weight() const;
    Rational lead_exponent() const;  // sum d_j k_j / 24
};

// Prod_{n>=1} (1 - q^n) truncated at `order` (Euler pentagonal numbers).
QSeries<Rational> euler_product_series(long order);

// eta = q^{1/24} Prod (1 - q^n); lead_exp = 1/24.
QSeries<Rational> eta_series(long order);

// eta(z)^k (any integer k != 0); cube uses the Jacobi expansion.
QSeries<Rational> eta_power_series(long k, long order);

QSeries<Rational> eta_quotient_series(const EtaQuotient& eq, long order);

// Coefficients of eta(az)^3 eta(bz)^3 through q^order (integers, sparse
// Jacobi convolution); valid when 3(a+b)/24 is a positive integer lead.
std::vector<long long> eta3_pair_coefficients(long a, long b, long order);

// eta(tau) to the current working precision; reduces by T and S moves with
// the exact multiplier system until Im(tau) >= 1/2, then evaluates the
// q-product.
Complex eta_value(const Complex& tau);

}  // namespace mahler
