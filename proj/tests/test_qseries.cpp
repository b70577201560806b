#include <doctest.h>

#include "mahler/forms.hpp"
#include "mahler/qseries.hpp"

#include <random>

using namespace mahler;

namespace {
QSeries<Rational> random_series(std::mt19937_64& rng, long order, long lead = 0) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = Rational(num(rng), den(rng));
    return QSeries<Rational>(24 * lead, std::move(c));
}
}  // namespace

TEST_CASE("geometric series inverse") {
    long n = 32;
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    a[0] = 1;
    a[1] = -1;  // 1 - q
    QSeries<Rational> one_minus_q(0, a);
    QSeries<Rational> geo = QSeries<Rational>::one(n) / one_minus_q;
    for (long i = 0; i <= n; ++i) CHECK(geo[i] == 1);
    CHECK((one_minus_q * geo + (-QSeries<Rational>::one(n))).is_zero_through_order());
}

TEST_CASE("f(z)^2 for the L3 parametrization starts 1 - 8q + 24q^2 - 40q^3") {
    // hand convolution of the printed expansion 1 - 4q + 4q^2 - 4q^3
    QSeries<Rational> f(0, {Rational(1), Rational(-4), Rational(4), Rational(-4)});
    QSeries<Rational> f2 = f * f;
    CHECK(f2[0] == 1);
    CHECK(f2[1] == -8);
    CHECK(f2[2] == 24);
    CHECK(f2[3] == -40);
}

TEST_CASE("t*f for the L2 parametrization starts q - q^2 + q^3") {
    QSeries<Rational> t(24, {Rational(1), Rational(-4), Rational(10)});
    QSeries<Rational> f(0, {Rational(1), Rational(3), Rational(3)});
    QSeries<Rational> tf = t * f;
    CHECK(tf.lead24() == 24);
    CHECK(tf[0] == 1);
    CHECK(tf[1] == -1);
    CHECK(tf[2] == 1);
}

TEST_CASE("substitute t/(1-t) into t3 gives -q - 5q^2") {
    QSeries<Rational> outer(24, {Rational(1), Rational(1), Rational(1)});  // t + t^2 + t^3
    QSeries<Rational> inner(24, {Rational(-1), Rational(-6)});             // -q - 6q^2
    QSeries<Rational> comp = substitute(outer, inner);
    CHECK(comp.coeff_at24(24) == -1);
    CHECK(comp.coeff_at24(48) == -5);
}

TEST_CASE("substitute identity and constants") {
    std::mt19937_64 rng(7);
    QSeries<Rational> inner = random_series(rng, 12, 1);
    QSeries<Rational> identity = QSeries<Rational>::monomial(1, 12);
    QSeries<Rational> comp = substitute(identity, inner);
    CHECK(equal_through24(comp, inner, inner.known_through24()));
    QSeries<Rational> one = QSeries<Rational>::one(12);
    CHECK(substitute(one, inner)[0] == 1);
    CHECK(substitute(one, inner).is_zero_through_order() == false);
    CHECK_THROWS_AS(substitute(identity, QSeries<Rational>::one(12)), std::domain_error);
}

TEST_CASE("ring axioms on random exact series to order 64") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 4; ++rep) {
        QSeries<Rational> a = random_series(rng, 64), b = random_series(rng, 64), c = random_series(rng, 64);
        CHECK(equal_through24((a * b) * c, a * (b * c), 24 * 64));
        CHECK(equal_through24(a * (b + c), a * b + a * c, 24 * 64));
        CHECK(equal_through24(a + b, b + a, 24 * 64));
        CHECK(equal_through24(a * b, b * a, 24 * 64));
    }
}

TEST_CASE("alternate_signs is an involution and fixes constants") {
    std::mt19937_64 rng(1);
    QSeries<Rational> a = random_series(rng, 40);
    CHECK(equal_through24(alternate_signs(alternate_signs(a)), a, 24 * 40));
    QSeries<Rational> c = QSeries<Rational>::constant(Rational(5, 7), 10);
    CHECK(equal_through24(alternate_signs(c), c, 24 * 10));
    QSeries<Rational> frac(1, {Rational(1)});
    CHECK_THROWS_AS(alternate_signs(frac), std::domain_error);
}

TEST_CASE("D and D_inv are mutually inverse") {
    CHECK(integrate_D_inv(QSeries<Rational>::one(8)).log_coeff == 1);
    std::mt19937_64 rng(5);
    QSeries<Rational> g = random_series(rng, 50);
    LogSeries<Rational> li = integrate_D_inv(g);
    CHECK(equal_through24(derivative_D(li), g, 24 * 50));
}

TEST_CASE("triple D_inv divides coefficients by n^3") {
    // g2 of the weight-4 family starts -q - 7q^2 - 6q^3
    QSeries<Rational> g(24, {Rational(-1), Rational(-7), Rational(-6)});
    QSeries<Rational> s = g;
    for (int r = 0; r < 3; ++r) s = integrate_D_inv(s).series;
    CHECK(s.coeff_at24(24) == -1);
    CHECK(s.coeff_at24(48) == Rational(-7, 8));
    CHECK(s.coeff_at24(72) == Rational(-6, 27));
}

TEST_CASE("division by an identically-zero series is rejected") {
    QSeries<Rational> z = QSeries<Rational>::zero(10);
    CHECK_THROWS_AS(QSeries<Rational>::one(10) / z, std::domain_error);
}

TEST_CASE("reading past the truncation order is an error, not zero") {
    QSeries<Rational> a(0, {Rational(1), Rational(2)});
    CHECK(a.coeff_at24(24) == 2);
    CHECK_THROWS_AS(a.coeff_at24(48), std::out_of_range);
    QSeries<Rational> b(0, {Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK_THROWS_AS(first_mismatch24(a, b, 24 * 3), std::out_of_range);
}

TEST_CASE("binary operations truncate to the minimum valid order") {
    QSeries<Rational> a(0, std::vector<Rational>(21, Rational(1)));
    QSeries<Rational> b(0, std::vector<Rational>(11, Rational(1)));
    CHECK((a * b).order() == 10);
    CHECK((a + b).order() == 10);
    QSeries<Rational> c(24, std::vector<Rational>(11, Rational(1)));
    CHECK((a + c).known_through24() == 24 * 11);
}

TEST_CASE("float backend agrees with the exact backend") {
    PrecisionGuard guard(128);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 999983);
    long order = 24;
    std::vector<Rational> ac(static_cast<std::size_t>(order) + 1), bc(ac);
    for (auto& v : ac) v = Rational(num(rng), den(rng));
    for (auto& v : bc) v = Rational(num(rng), den(rng));
    QSeries<Rational> a(0, ac), b(0, bc);
    std::vector<Real> af, bf;
    for (const auto& v : ac) af.push_back(to_real(v));
    for (const auto& v : bc) bf.push_back(to_real(v));
    QSeries<Real> fa(0, af), fb(0, bf);

    QSeries<Rational> exact = a * b + a;
    QSeries<Real> approx = fa * fb + fa;
    Real tol = pow2(-(128 - 8));
    for (long i = 0; i <= order; ++i) {
        Real ev = to_real(exact[i]);
        Real scale = abs(ev) > 1 ? abs(ev) : Real(1);
        CHECK(abs(approx[i] - ev) / scale < tol);
    }
}

TEST_CASE("JSON serialization round-trips exactly") {
    std::mt19937_64 rng(3);
    QSeries<Rational> a = random_series(rng, 16, 0);
    QSeries<Rational> eta_like(1, a.coeffs());  // lead 1/24
    std::string text = qseries_to_json(eta_like);
    QSeries<Rational> back = qseries_from_json(text);
    CHECK(back.lead24() == eta_like.lead24());
    CHECK(back.order() == eta_like.order());
    for (long i = 0; i <= back.order(); ++i) CHECK(back[i] == eta_like[i]);
}

TEST_CASE("pretty printer matches the expected shapes") {
    QSeries<Rational> g3(24, {Rational(13), Rational(316), Rational(2328)});
    CHECK(to_string(g3) == "13q + 316q^2 + 2328q^3");
    QSeries<Rational> e3(0, {Rational(-1, 9), Rational(1), Rational(-3)});
    CHECK(to_string(e3) == "-1/9 + q - 3q^2");
}
