#pragma once

#include "mahler/numeric.hpp"

#include <functional>
#include <vector>

namespace mahler {

// Chebyshev series sum c_k T_k(u) on [a,b]; the workhorse for turning
// pointwise modular-form values on a segment into exact polynomial calculus.
class ChebSeries {
public:
    ChebSeries() : a_(0), b_(1) {}
    ChebSeries(Real a, Real b, std::vector<Real> coef) : a_(std::move(a)), b_(std::move(b)), coef_(std::move(coef)) {}

    // Interpolate f at n+1 Chebyshev points of the second kind.
    static ChebSeries fit(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int n);

    const Real& lower() const { return a_; }
    const Real& upper() const { return b_; }
    const std::vector<Real>& coefficients() const { return coef_; }

    Real eval(const Real& x) const;

    ChebSeries operator+(const ChebSeries& o) const;
    ChebSeries operator-(const ChebSeries& o) const;
    ChebSeries multiply(const ChebSeries& o) const;
    ChebSeries scaled(const Real& s) const;
    void add_constant(const Real& c);

    // Antiderivative F with F' = this and F(at) = 0.
    ChebSeries antiderivative(const Real& at) const;

    Real definite_integral() const;  // over [a,b]

    // Sum of |c_k| over the trailing `count` coefficients (truncation proxy).
    Real tail_bound(int count) const;

    static ChebSeries identity(const Real& a, const Real& b);  // the function x
    static ChebSeries constant(const Real& a, const Real& b, const Real& c);

private:
    void check_domain(const ChebSeries& o) const;
    Real a_, b_;
    std::vector<Real> coef_;
};

}  // namespace mahler
