#include <doctest.h>

#include "mahler/cterms.hpp"

using namespace mahler;

TEST_CASE("constant-term sequences match the printed lists") {
    std::vector<Integer> a2 = constant_terms(2, 4);
    CHECK(a2 == std::vector<Integer>{1, 3, 15, 93, 639});
    std::vector<Integer> a3 = constant_terms(3, 4);
    CHECK(a3 == std::vector<Integer>{1, 4, 28, 256, 2716});
    std::vector<Integer> a4 = constant_terms(4, 4);
    CHECK(a4 == std::vector<Integer>{1, 5, 45, 545, 7885});
}

TEST_CASE("a_0 is the empty product and a_1 = n + 1") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Integer> a = constant_terms(n, 1);
        CHECK(a[0] == 1);
        CHECK(a[1] == n + 1);
    }
}

TEST_CASE("precondition violations are rejected") {
    CHECK_THROWS_AS(constant_terms(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(constant_terms(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(constant_terms(4, 13), std::invalid_argument);
}

TEST_CASE("sparse polynomial bookkeeping") {
    LaurentPolyMulti p = LaurentPolyMulti::base_pn(2);
    // (1+x+y)(1+1/x+1/y): 3 on the diagonal, 6 off-diagonal monomials
    CHECK(p.term_count() == 7);
    CHECK(p.constant_term() == 3);
    LaurentPolyMulti sq = p.multiply(p);
    CHECK(sq.constant_term() == 15);
}

TEST_CASE("quasi-Monte Carlo direct estimates are reproducible and sane") {
    MahlerEstimate a = mahler_direct(2, 1 << 20, 7);
    MahlerEstimate b = mahler_direct(2, 1 << 20, 7);
    CHECK(a.value == b.value);  // deterministic for a fixed seed
    CHECK(a.std_error > 0);
    // m(1+x+y) = 0.32307...
    CHECK(std::abs(a.value - 0.3230659) < 0.002);
    MahlerEstimate c = mahler_direct(3, 1 << 20, 7);
    CHECK(std::abs(c.value - 0.4262783) < 0.003);
}
