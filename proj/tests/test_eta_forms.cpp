#include <doctest.h>

#include "mahler/eta.hpp"
#include "mahler/forms.hpp"

#include <random>

using namespace mahler;

TEST_CASE("euler product matches naive multiplication") {
    long n = 40;
    QSeries<Rational> naive = QSeries<Rational>::one(n);
    for (long k = 1; k <= n; ++k) {
        std::vector<Rational> f(static_cast<std::size_t>(n) + 1, Rational(0));
        f[0] = 1;
        f[static_cast<std::size_t>(k)] = -1;
        naive = naive * QSeries<Rational>(0, f);
    }
    CHECK(equal_through24(euler_product_series(n), naive, 24 * n));
}

TEST_CASE("eta expansion basics") {
    QSeries<Rational> e = eta_series(6);
    CHECK(e.lead_exp() == Rational(1, 24));
    CHECK(e[0] == 1);
    CHECK(e[1] == -1);
    CHECK(e[2] == -1);
    CHECK(e[3] == 0);  // pentagonal: no exponent 3
    CHECK(e[4] == 0);
    CHECK(e[5] == 1);
}

TEST_CASE("eta cube matches the generic power route") {
    long n = 60;
    QSeries<Rational> cube = eta_power_series(3, n);
    QSeries<Rational> generic = eta_series(n) * eta_series(n) * eta_series(n);
    CHECK(cube.lead24() == 3);
    CHECK(equal_through24(cube, generic, 24 * (n - 2)));
}

TEST_CASE("eta quotient lead exponents follow sum d_j k_j / 24") {
    const EtaQuotient cases[] = {
        {{{6, 8}, {1, 4}, {3, -4}, {2, -8}}},
        {{{2, 6}, {3, 1}, {1, -3}, {6, -2}}},
        {{{2, 6}, {6, 6}, {1, -6}, {3, -6}}},
        {{{1, 4}, {3, 4}, {2, -2}, {6, -2}}},
        {{{3, 3}, {5, 3}}},
    };
    for (const auto& eq : cases) {
        QSeries<Rational> s = eta_quotient_series(eq, 12);
        CHECK(Rational(s.lead24(), 24) == eq.lead_exponent());
        CHECK(s[0] != 0);
    }
}

TEST_CASE("printed parametrization expansions") {
    FormRegistry& reg = FormRegistry::instance();
    QSeries<Rational> t3 = reg.expansion(FormId::t3, 8);
    CHECK(t3.coeff_at24(24) == -1);
    CHECK(t3.coeff_at24(48) == -6);
    CHECK(t3.coeff_at24(72) == -21);
    QSeries<Rational> f3 = reg.expansion(FormId::f3, 8);
    CHECK(f3.coeff_at24(0) == 1);
    CHECK(f3.coeff_at24(24) == -4);
    QSeries<Rational> f15 = reg.expansion(FormId::f15, 8);
    CHECK(f15.coeff_at24(24) == 1);
    CHECK(f15.coeff_at24(48) == 1);
    CHECK(f15.coeff_at24(72) == -3);
    CHECK(f15.coeff_at24(96) == -3);
}

TEST_CASE("the L2 pointwise derivative identity holds as a series identity") {
    // Dt = f^2 t (1-9t)(1-t) for the L2 parametrization, checked to order 200
    FormRegistry& reg = FormRegistry::instance();
    long n = 200;
    QSeries<Rational> t = reg.expansion(FormId::t2, n), f = reg.expansion(FormId::f2, n);
    QSeries<Rational> one = QSeries<Rational>::one(n);
    QSeries<Rational> lhs = derivative_D(t);
    QSeries<Rational> rhs = f * f * t * (one - scale_rational(Rational(9), t)) * (one - t);
    CHECK(equal_through24(lhs, rhs, 24 * n));
}

TEST_CASE("the L3 derivative square identity holds as a series identity") {
    // (Dt)^2 = f^2 t^2 (1-4t)(1-16t)
    FormRegistry& reg = FormRegistry::instance();
    long n = 200;
    QSeries<Rational> t = reg.expansion(FormId::t3, n), f = reg.expansion(FormId::f3, n);
    QSeries<Rational> one = QSeries<Rational>::one(n);
    QSeries<Rational> Dt = derivative_D(t);
    QSeries<Rational> rhs =
        f * f * t * t * (one - scale_rational(Rational(4), t)) * (one - scale_rational(Rational(16), t));
    CHECK(equal_through24(Dt * Dt, rhs, 24 * n));
}

TEST_CASE("shifted weight-3 expansion matches Eq (thm1g1)") {
    FormRegistry& reg = FormRegistry::instance();
    QSeries<Rational> g = reg.expansion(FormId::g1w3, 8);
    CHECK(g.coeff_at24(0) == 1);
    CHECK(g.coeff_at24(24) == 1);
    CHECK(g.coeff_at24(48) == -5);
    CHECK(g.coeff_at24(72) == 1);
    CHECK(g.coeff_at24(96) == 11);
    CHECK(g.coeff_at24(120) == -24);
}

TEST_CASE("E3chi Eisenstein data") {
    FormRegistry& reg = FormRegistry::instance();
    QSeries<Rational> e = reg.expansion(FormId::E3chi, 6);
    CHECK(e.coeff_at24(0) == Rational(-1, 9));
    CHECK(e.coeff_at24(24) == 1);
    CHECK(e.coeff_at24(48) == -3);  // 1 + chi(2) * 4
    QSeries<Rational> e4 = reg.expansion(FormId::E4, 6);
    CHECK(e4.coeff_at24(0) == Rational(1, 240));
    CHECK(e4.coeff_at24(48) == 9);  // sigma_3(2)
}

TEST_CASE("identity_check reports the first mismatch") {
    FormRegistry& reg = FormRegistry::instance();
    IdentityResult same = reg.identity_check({{Rational(1), FormId::f3, 1}}, {{Rational(1), FormId::f3, 1}}, 50);
    CHECK(same.equal);
    IdentityResult diff = reg.identity_check({{Rational(1), FormId::f3, 1}}, {{Rational(1), FormId::f2, 1}}, 50);
    CHECK_FALSE(diff.equal);
    CHECK(*diff.first_mismatch_exponent == 1);  // 1 + 3q vs 1 - 4q
}

TEST_CASE("eta_value at the S-fixed point and under translation") {
    PrecisionGuard guard(192);
    Complex i01(Real(0), Real(1));
    Complex direct = eta_value(i01);
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    using boost::multiprecision::pow;
    Real expected = gamma_value(Real(Rational(1, 4))) / (2 * pow(pi_value(), Real(Rational(3, 4))));
    CHECK(abs(direct.im) < pow2(-150));
    CHECK(abs(direct.re - expected) < pow2(-150));
    // eta(tau+1)/eta(tau) = e^{i pi / 12}
    Complex tau(Real(Rational(1, 3)), Real(Rational(7, 10)));
    Complex shifted = eta_value(tau + Complex(Real(1)));
    Complex ratio = shifted / eta_value(tau);
    Complex mult = exp_2pi_i(Rational(1, 24));
    CHECK(abs(ratio - mult) < pow2(-150));
}

TEST_CASE("eta functional equation on random points") {
    PrecisionGuard guard(160);
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.05, 3.0);
    for (int k = 0; k < 100; ++k) {
        Complex tau{Real(re(rng)), Real(im(rng))};
        Complex lhs = eta_value(Complex(Real(-1)) / tau);
        Complex rhs = sqrt(Complex(tau.im, -tau.re)) * eta_value(tau);
        CHECK(abs(lhs - rhs) < pow2(-150) * (1 + abs(rhs)));
    }
}

TEST_CASE("level-15 involution instance at s = 0.05") {
    PrecisionGuard guard(192);
    Real s = Real(5) / 100;
    Complex z(Real(0), 15 * s);  // 15 * i s
    Complex lhs = eta_value(Complex(Real(-1)) / Complex(Real(0), 15 * s));
    Complex rhs = eta_value(z);
    CHECK(abs(abs(lhs) - sqrt(15 * s) * abs(rhs)) < pow2(-150));
}

TEST_CASE("form values agree with expansions for Im z >= 1") {
    PrecisionGuard guard(192);
    FormRegistry& reg = FormRegistry::instance();
    const FormId ids[] = {FormId::t3, FormId::f3,   FormId::t2,   FormId::f2,    FormId::f15,
                          FormId::E3chi, FormId::g1w3, FormId::g1w4, FormId::f2sec7, FormId::E4};
    Complex z(Real(Rational(1, 5)), Real(Rational(11, 10)));
    Real twopi = 2 * pi_value();
    Real s24 = to_real(Rational(1, 24));
    Complex q24 = exp(Complex(-twopi * z.im * s24, twopi * z.re * s24));
    for (FormId id : ids) {
        QSeries<Rational> s = reg.expansion(id, 96);
        Complex by_series = eval_q24(s, q24);
        Complex by_value = reg.value(id, z);
        CHECK(abs(by_series - by_value) < pow2(-120) * (1 + abs(by_value)));
    }
}

TEST_CASE("meromorphic forms: series vs value at Im z = 1/2, poles limit below") {
    // The q-expansions of g2w4/g3w4 converge only for Im z above ~0.1614 (the
    // nearest t=1 pole); at 1/2 both routes must agree.
    PrecisionGuard guard(192);
    FormRegistry& reg = FormRegistry::instance();
    Complex z(Real(0), Real(Rational(1, 2)));
    Real twopi = 2 * pi_value();
    Complex q24 = exp(Complex(-twopi * z.im / 24, twopi * z.re / 24));
    for (FormId id : {FormId::g2w4, FormId::g3w4}) {
        QSeries<Rational> s = reg.expansion(id, 160);
        Complex by_series = eval_q24(s, q24);
        Complex by_value = reg.value(id, z);
        CHECK(abs(by_series - by_value) < pow2(-80) * (1 + abs(by_value)));
    }
}

TEST_CASE("t3 is real and negative along the imaginary axis") {
    PrecisionGuard guard(128);
    FormRegistry& reg = FormRegistry::instance();
    for (double s : {0.1, 1.0, 10.0}) {
        Complex t = reg.value(FormId::t3, Complex(Real(0), Real(s)));
        CHECK(abs(t.im) < pow2(-90) * (1 + abs(t)));
        CHECK(t.re < 0);
    }
}

TEST_CASE("g3w4 decays like e^{-2 pi s} and g-forms stay bounded toward 0") {
    PrecisionGuard guard(128);
    FormRegistry& reg = FormRegistry::instance();
    // |g(is)| e^{2 pi s} bounded on s in [1, 6]
    for (FormId id : {FormId::g2w4, FormId::g3w4}) {
        for (double s : {1.0, 2.0, 4.0, 6.0}) {
            Real mag = abs(reg.value(id, Complex(Real(0), Real(s))));
            CHECK(mag * exp(2 * pi_value() * Real(s)) < 400);
        }
    }
    // boundedness of g_j(is) on small s (the o(s) claim is out of scope)
    for (FormId id : {FormId::g1w4, FormId::g2w4, FormId::g3w4}) {
        for (double s : {0.001, 0.01, 0.1, 0.5, 1.0}) {
            Real mag = abs(reg.value(id, Complex(Real(0), Real(s))));
            CHECK(mag < 60);
        }
    }
}

TEST_CASE("pole proximity raises an error") {
    PrecisionGuard guard(128);
    // Near the CM point 1/8 + sqrt(-15)/24 the function t is 1; approach it.
    FormRegistry& reg = FormRegistry::instance();
    Complex pole(Real(Rational(1, 8)), sqrt(Real(15)) / 24);
    CHECK_THROWS_AS(reg.value(FormId::g2w4, pole), std::domain_error);
}

TEST_CASE("registry recipes serialize") {
    FormRegistry& reg = FormRegistry::instance();
    std::string j = reg.recipe_json(FormId::f15);
    CHECK(j.find("eta(3z)^3 eta(5z)^3") != std::string::npos);
}
