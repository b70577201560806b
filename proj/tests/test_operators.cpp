#include <doctest.h>

#include "mahler/theta_op.hpp"

using namespace mahler;

namespace {
QSeries<Rational> series_from(std::initializer_list<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return QSeries<Rational>(0, std::move(c));
}
}  // namespace

TEST_CASE("L2 and L3 annihilate the printed constant-term sequences") {
    CHECK(op_L2().apply(series_from({1, 3, 15, 93, 639})).is_zero_through_order());
    CHECK(op_L3().apply(series_from({1, 4, 28, 256, 2716})).is_zero_through_order());
    CHECK(op_L4().apply(series_from({1, 5, 45, 545, 7885})).is_zero_through_order());
    // theta kills constants
    CHECK(ThetaOp::term(0, 1, 1).apply(QSeries<Rational>::one(6)).is_zero_through_order());
}

TEST_CASE("dual operators reproduce the paper's normal forms") {
    ThetaOpDual d2 = op_L2_tilde().dual();
    CHECK(d2.power == 2);
    CHECK(d2.op == op_L2());
    ThetaOpDual d3 = op_L3_tilde().dual();
    CHECK(d3.power == 2);
    CHECK(d3.op == Rational(-1) * op_L3());
    // involution up to prefactor bookkeeping
    CHECK(op_L2().dual().op == op_L2_tilde());
    CHECK(op_L3().dual().op == Rational(-1) * op_L3_tilde());
}

TEST_CASE("operator multiplication uses the commutation rule") {
    // theta * t = t * (theta + 1)
    ThetaOp theta = ThetaOp::term(0, 1, 1);
    ThetaOp t = ThetaOp::term(1, 0, 1);
    ThetaOp prod = theta * t;
    ThetaOp expected = ThetaOp::term(1, 1, 1) + ThetaOp::term(1, 0, 1);
    CHECK(prod == expected);
}

TEST_CASE("laurent_plus reproduces the kernel computations of Lemma 5.2") {
    // [L2~^{(2)}(1/t,-theta-1) 1/(1-lambda t)]_+ = (lambda-1)(lambda-9)/(1-lambda t)
    LRat K2 = laurent_plus(op_L2_tilde().section(2));
    {
        QRat at_l = eval_lambda(K2, 4);  // (3)(-5) = -15 over (1-4t)
        CHECK(at_l == QRat(QPoly{Rational(-15)}, QPoly{Rational(1), Rational(-4)}));
        CHECK(eval_lambda(K2, 1).is_zero());
        CHECK(eval_lambda(K2, 9).is_zero());
    }
    // [L2~^{(1)} ...]_+ = -(lambda-1)(lambda-9)/(1-lambda t)^2
    LRat K1 = laurent_plus(op_L2_tilde().section(1));
    {
        QRat at_l = eval_lambda(K1, 4);
        CHECK(at_l == QRat(QPoly{Rational(15)}, QPoly{Rational(1), Rational(-8), Rational(16)}));
    }
    // [L3~^{(3)} ...]_+ at lambda = 1 equals 45/(1-t)
    LRat K3 = laurent_plus(op_L3_tilde().section(3));
    CHECK(eval_lambda(K3, 1) == QRat(QPoly{Rational(45)}, QPoly{Rational(1), Rational(-1)}));
}

TEST_CASE("toy moment transform: L~ = theta, F = 1 on [0,1]") {
    ThetaOp op = ThetaOp::term(0, 1, 1);
    EndpointData a{Rational(0), {SymExpr(1)}, false};
    EndpointData b{Rational(1), {SymExpr(1)}, false};
    MomentRhs mr = moment_rhs(op, a, b, SymRatFunc());
    CHECK(mr.H_alpha.is_zero());
    QRat geo(QPoly{Rational(1)}, QPoly{Rational(1), Rational(-1)});
    CHECK(mr.H_beta == SymRatFunc(geo));
    CHECK(mr.h == SymRatFunc(Rational(-1) * geo));
    // consistency: (-theta-1) applied to sum t^n/(n+1) equals -1/(1-t)
    long n = 24;
    std::vector<Rational> bc(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) bc[static_cast<std::size_t>(k)] = Rational(1, k + 1);
    QSeries<Rational> bseries(0, bc);
    QSeries<Rational> lhs = apply_inverted(op, bseries);
    QSeries<Rational> rhs = laurent_at_zero(Rational(-1) * geo, n);
    CHECK(equal_through24(lhs, rhs, 24 * n));
}

TEST_CASE("unsupported divergence pattern is rejected") {
    // limit mode at an endpoint where the kernel does not vanish
    ThetaOp op = ThetaOp::term(0, 1, 1);
    EndpointData a{Rational(0), {SymExpr(0)}, false};
    EndpointData b{Rational(2), {SymExpr(1)}, true};
    CHECK_THROWS_AS(moment_rhs(op, a, b, SymRatFunc()), std::domain_error);
}

TEST_CASE("Frobenius basis at the MUM point 0 for L2~") {
    auto basis = frobenius_basis(op_L2_tilde(), 0, 24);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].strata.size() == 1);
    CHECK(basis[1].strata.size() == 2);
    // phi0 = 1 + lambda/3 + ...: independent recurrence oracle
    // 9 n^2 A_n = (10(n-1)^2 + 10(n-1) + 3) A_{n-1} - (n-1)^2 A_{n-2}
    std::vector<Rational> A{1};
    for (long n = 1; n <= 24; ++n) {
        Rational prev = A[static_cast<std::size_t>(n - 1)];
        Rational prev2 = n >= 2 ? A[static_cast<std::size_t>(n - 2)] : Rational(0);
        Rational rhs = (Rational(10) * (n - 1) * (n - 1) + 10 * (n - 1) + 3) * prev - Rational(n - 1) * (n - 1) * prev2;
        A.push_back(rhs / (Rational(9) * n * n));
    }
    CHECK(A[1] == Rational(1, 3));
    for (long n = 0; n <= 24; ++n) CHECK(basis[0].strata[0][n] == A[static_cast<std::size_t>(n)]);
    // the log solution has leading stratum 1 + O(lambda)
    CHECK(basis[1].strata[1][0] == 1);
    CHECK(basis[1].strata[0][0] == 0);
    // each basis element is annihilated to the available order
    for (const auto& sol : basis) {
        auto img = apply_to_strata(op_L2_tilde(), sol.strata);
        for (const auto& stratum : img) CHECK(stratum.is_zero_through_order());
    }
}

TEST_CASE("Frobenius basis of L3~ at 0 has strata pattern (1; log; log^2)") {
    auto basis = frobenius_basis(op_L3_tilde(), 0, 16);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].strata.size() == 1);
    CHECK(basis[1].strata.size() == 2);
    CHECK(basis[2].strata.size() == 3);
    CHECK(basis[2].strata[2][0] == 1);  // phi2 = log^2 (1 + O(lambda)) + ...
    for (const auto& sol : basis) {
        auto img = apply_to_strata(op_L3_tilde(), sol.strata);
        for (const auto& stratum : img) CHECK(stratum.is_zero_through_order());
    }
}

TEST_CASE("Frobenius basis at the MUM point 1 for L2~") {
    auto basis = frobenius_basis(op_L2_tilde(), 1, 16);
    REQUIRE(basis.size() == 2);
    // kappa_1 = log(lambda-1) kappa_0 + O(lambda-1)
    CHECK(basis[1].strata[1][0] == 1);
}

TEST_CASE("ordinary-point Taylor basis for L3~ at 1") {
    auto basis = ordinary_basis(op_L3_tilde(), 1, 20);
    REQUIRE(basis.size() == 3);
    // seeds are x^j + O(x^3)
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(basis[j].strata[0][static_cast<long>(i)] == (i == j ? 1 : 0));
    }
    // annihilation: apply the shifted operator
    DOp dop = theta_to_d(op_L3_tilde());
    ThetaOp local = d_to_theta(shift_variable(dop, 1));
    for (const auto& sol : basis) CHECK(local.apply(sol.strata[0]).is_zero_through_order());
}

TEST_CASE("MUM precondition is enforced") {
    // L3~ is nonsingular at 1, so the Frobenius MUM solver at 1 must reject it
    CHECK_THROWS_AS(frobenius_basis(op_L3_tilde(), 1, 8), std::domain_error);
    CHECK_THROWS_AS(frobenius_basis(op_L2_tilde(), Rational(1, 2), 8), std::invalid_argument);
}

TEST_CASE("nonhomogeneous solver on the Theorem 1 data") {
    // L2 psi = t/(1-t), psi = t + ...
    QRat rhs(QPoly{Rational(0), Rational(1)}, QPoly{Rational(1), Rational(-1)});
    QSeries<Rational> psi = solve_nonhomogeneous(op_L2(), laurent_at_zero(rhs, 32), 0, 32);
    CHECK(psi[0] == 0);
    CHECK(psi[1] == 1);
    // verify L2 psi = t/(1-t) termwise
    QSeries<Rational> img = op_L2().apply(psi);
    CHECK(equal_through24(img, laurent_at_zero(rhs, 30), 24 * 30));
}

TEST_CASE("nonhomogeneous solver with zero rhs recovers the principal period") {
    QSeries<Rational> phi = solve_nonhomogeneous(op_L3(), QSeries<Rational>::zero(8), 1, 8);
    CHECK(phi[0] == 1);
    CHECK(phi[1] == 4);
    CHECK(phi[2] == 28);
    CHECK(phi[3] == 256);
    CHECK(phi[4] == 2716);
}

TEST_CASE("solver rejects a right-hand side with a constant term") {
    CHECK_THROWS_AS(solve_nonhomogeneous(op_L2(), QSeries<Rational>::one(8), 0, 8), std::domain_error);
}
