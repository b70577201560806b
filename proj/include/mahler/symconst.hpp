#pragma once

#include "mahler/numeric.hpp"
#include "mahler/poly.hpp"

#include <compare>
#include <map>
#include <string>

namespace mahler {

// Monomial pi^a * Omega15^b * zeta(3)^c * L(chi_-3,2)^d * sqrt(rad); the
// transcendental constants of the paper are carried opaquely and only
// instantiated numerically at the very end.
struct SymMonomial {
    int pi = 0;
    int omega = 0;
    int zeta3 = 0;
    int lchi = 0;
    long long rad = 1;  // squarefree positive radicand

    auto operator<=>(const SymMonomial&) const = default;
    bool is_one() const { return pi == 0 && omega == 0 && zeta3 == 0 && lchi == 0 && rad == 1; }
};

// (monomial product, extracted rational square factor)
std::pair<SymMonomial, Rational> mul(const SymMonomial& a, const SymMonomial& b);

std::string to_string(const SymMonomial& m);

struct SymContext {
    Real pi, omega, zeta3, lchi;
    Real value_of(const SymMonomial& m) const;
};

class SymExpr {
public:
    SymExpr() = default;
    SymExpr(const Rational& r) { add_term(SymMonomial{}, r); }
    SymExpr(long r) { add_term(SymMonomial{}, Rational(r)); }
    static SymExpr term(const SymMonomial& m, const Rational& c) {
        SymExpr e;
        e.add_term(m, c);
        return e;
    }

    void add_term(const SymMonomial& m, const Rational& c);
    const std::map<SymMonomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
    friend SymExpr operator*(const Rational& s, const SymExpr& a);
    friend bool operator==(const SymExpr& a, const SymExpr& b) { return a.t_ == b.t_; }

    Real eval(const SymContext& ctx) const;
    std::string str() const;

private:
    std::map<SymMonomial, Rational> t_;
};

// Rational function of t with coefficients in the symbolic-constant ring,
// stored as one exact Q(t) part per monomial.
class SymRatFunc {
public:
    SymRatFunc() = default;
    SymRatFunc(const QRat& f) { add_part(SymMonomial{}, f); }

    void add_part(const SymMonomial& m, const QRat& f);
    const std::map<SymMonomial, QRat>& parts() const { return p_; }
    bool is_zero() const { return p_.empty(); }

    SymRatFunc& operator+=(const SymRatFunc& o);
    SymRatFunc& operator-=(const SymRatFunc& o);
    friend SymRatFunc operator+(SymRatFunc a, const SymRatFunc& b) { return a += b; }
    friend SymRatFunc operator-(SymRatFunc a, const SymRatFunc& b) { return a -= b; }
    friend SymRatFunc operator*(const SymExpr& s, const SymRatFunc& f);
    friend SymRatFunc operator*(const QRat& g, const SymRatFunc& f);
    friend bool operator==(const SymRatFunc& a, const SymRatFunc& b) { return a.p_ == b.p_; }

    std::string str(const std::string& var = "t") const;

private:
    std::map<SymMonomial, QRat> p_;
};

SymRatFunc sym_times(const SymExpr& s, const QRat& f);

}  // namespace mahler
