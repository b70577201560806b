#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Global working precision in mantissa bits. Every Real constructed after a
// call to set_precision_bits carries at least this many bits.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// RAII scope for temporarily switching the working precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
    ~PrecisionGuard() { set_precision_bits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& n);

Real pi_value();
Real zeta_value(unsigned s);          // Riemann zeta at an integer s >= 2
Real gamma_value(const Real& x);      // x > 0
Real exp_integral_e1(const Real& x);  // E1(x) for x > 0
Real pow2(long e);                    // 2^e

// Kronecker symbol (a|n) for n > 0.
int kronecker_symbol(long long a, long long n);

// B_0 .. B_{count-1} with the convention B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(std::size_t count);

Rational binomial_coefficient(long n, long k);

// Minimal complex arithmetic over Real; boost::multiprecision has no
// mpc-backed complex in this build, and we only need a handful of operations.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    explicit Complex(long n) : re(n), im(0) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(const Real& s, Complex a) {
    a.re *= s;
    a.im *= s;
    return a;
}

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z);
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Complex sqrt(const Complex& z);  // principal branch
Complex exp(const Complex& z);
Complex pow_int(Complex z, long e);

// e^{2 pi i r} for an exact rational r.
Complex exp_2pi_i(const Rational& r);

std::string to_string(const Complex& z, unsigned digits = 0);

}  // namespace mahler
