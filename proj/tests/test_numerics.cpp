#include <doctest.h>

#include "mahler/cheb.hpp"
#include "mahler/numeric.hpp"
#include "mahler/quadrature.hpp"

using namespace mahler;

TEST_CASE("precision guard switches and restores") {
    unsigned before = precision_bits();
    {
        PrecisionGuard guard(128);
        CHECK(precision_bits() == 128);
    }
    CHECK(precision_bits() == before);
}

TEST_CASE("kronecker symbol tables") {
    // chi_-3: period 3 pattern 1, -1, 0
    CHECK(kronecker_symbol(-3, 1) == 1);
    CHECK(kronecker_symbol(-3, 2) == -1);
    CHECK(kronecker_symbol(-3, 4) == 1);
    CHECK(kronecker_symbol(-3, 5) == -1);
    // chi_-15: +1 at {1,2,4,8}, -1 at {7,11,13,14} mod 15
    for (long j : {1, 2, 4, 8}) CHECK(kronecker_symbol(-15, j) == 1);
    for (long j : {7, 11, 13, 14}) CHECK(kronecker_symbol(-15, j) == -1);
    CHECK(kronecker_symbol(-15, 3) == 0);
    CHECK(kronecker_symbol(-15, 5) == 0);
    // complete multiplicativity on a small grid
    for (long a = 1; a <= 40; ++a)
        for (long b = 1; b <= 40; ++b)
            CHECK(kronecker_symbol(-15, a * b) == kronecker_symbol(-15, a) * kronecker_symbol(-15, b));
}

TEST_CASE("bernoulli numbers") {
    auto b = bernoulli_numbers(10);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[3] == 0);
}

TEST_CASE("complex arithmetic") {
    PrecisionGuard guard(128);
    Complex i(Real(0), Real(1));
    Complex z = sqrt(i);
    CHECK(abs(z * z - i) < pow2(-120));
    Complex w = exp(Complex(Real(0), pi_value()));
    CHECK(abs(w + Complex(Real(1))) < pow2(-120));
    Complex r = pow_int(Complex(Real(1), Real(1)), 4);
    CHECK(abs(r + Complex(Real(4))) < pow2(-120));
    CHECK(abs(exp_2pi_i(Rational(1, 4)) - i) < pow2(-120));
}

TEST_CASE("gauss-legendre integrates polynomials exactly and adapts") {
    PrecisionGuard guard(192);
    auto cubic = [](const Real& x) { return Real(x * x * x); };
    QuadResult r = integrate_gl_adaptive(cubic, Real(0), Real(1), pow2(-150));
    CHECK(abs(r.value - Rational(1, 4)) < pow2(-140));
    auto decay = [](const Real& x) { return Real(exp(-x)); };
    QuadResult d = integrate_gl_adaptive(decay, Real(0), Real(3), pow2(-120));
    CHECK(abs(d.value - (1 - exp(Real(-3)))) < pow2(-110));
    CHECK(abs(d.value - (1 - exp(Real(-3)))) < d.error_bound + pow2(-140));
}

TEST_CASE("doubling the nodes changes results by less than the reported bound") {
    PrecisionGuard guard(160);
    auto f = [](const Real& x) { return Real(1 / (1 + x * x)); };
    QuadResult a = integrate_gl_adaptive(f, Real(0), Real(2), pow2(-100), 16);
    QuadResult b = integrate_gl_adaptive(f, Real(0), Real(2), pow2(-100), 32);
    CHECK(abs(a.value - b.value) < a.error_bound + pow2(-130));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    PrecisionGuard guard(160);
    auto f = [](const Real& x) { return Real(1 / sqrt(x)); };
    QuadResult r = integrate_tanh_sinh(f, Real(0), Real(1), pow2(-110));
    CHECK(abs(r.value - 2) < pow2(-100));
}

TEST_CASE("chebyshev fit, calculus and integration") {
    PrecisionGuard guard(160);
    Real a(0), b = pi_value();
    ChebSeries s = ChebSeries::fit([](const Real& x) { return Real(sin(x)); }, a, b, 48);
    Real x = pi_value() / 5;
    CHECK(abs(s.eval(x) - sin(x)) < pow2(-120));
    CHECK(abs(s.definite_integral() - 2) < pow2(-120));
    ChebSeries F = s.antiderivative(Real(0));  // 1 - cos
    CHECK(abs(F.eval(x) - (1 - cos(x))) < pow2(-115));
    ChebSeries p = s.multiply(s);
    CHECK(abs(p.eval(x) - sin(x) * sin(x)) < pow2(-110));
    CHECK(abs(p.definite_integral() - pi_value() / 2) < pow2(-110));
}
