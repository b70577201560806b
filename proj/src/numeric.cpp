#include "mahler/numeric.hpp"

#include <cmath>
#include <sstream>

namespace mahler {

namespace {
unsigned g_bits = 256;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24) throw std::invalid_argument("precision below 24 bits is not supported");
    g_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_bits; }

Real to_real(const Rational& q) { return Real(q); }
Real to_real(const Integer& n) { return Real(n); }

Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real zeta_value(unsigned s) {
    if (s < 2) throw std::invalid_argument("zeta_value requires s >= 2");
    Real z;
    mpfr_zeta_ui(z.backend().data(), s, MPFR_RNDN);
    return z;
}

Real gamma_value(const Real& x) {
    if (!(x > 0)) throw std::domain_error("gamma_value requires x > 0");
    Real g;
    mpfr_gamma(g.backend().data(), x.backend().data(), MPFR_RNDN);
    return g;
}

Real exp_integral_e1(const Real& x) {
    if (!(x > 0)) throw std::domain_error("exp_integral_e1 requires x > 0");
    // mpfr_eint(-x) = Ei(-x) = -E1(x) for x > 0.
    Real mx = -x, r;
    mpfr_eint(r.backend().data(), mx.backend().data(), MPFR_RNDN);
    return -r;
}

Real pow2(long e) {
    Real r(1);
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

namespace {
// Jacobi symbol for odd m > 0; periodic in a mod m.
int jacobi_odd(long long a, long long m) {
    a %= m;
    if (a < 0) a += m;
    int s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = m % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) s = -s;
        a %= m;
    }
    return m == 1 ? s : 0;
}
}  // namespace

int kronecker_symbol(long long a, long long n) {
    if (n <= 0) throw std::invalid_argument("kronecker_symbol requires n > 0");
    int s = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) s = -s;
    }
    return s * jacobi_odd(a, n);
}

std::vector<Rational> bernoulli_numbers(std::size_t count) {
    std::vector<Rational> b(count);
    for (std::size_t m = 0; m < count; ++m) {
        if (m == 0) {
            b[0] = 1;
            continue;
        }
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rational acc = 0;
        for (std::size_t k = 0; k < m; ++k)
            acc += binomial_coefficient(static_cast<long>(m) + 1, static_cast<long>(k)) * b[k];
        b[m] = -acc / Rational(static_cast<long>(m) + 1);
    }
    return b;
}

Rational binomial_coefficient(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Rational(r);
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    if (d == 0) throw std::domain_error("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Real abs(const Complex& z) {
    Real h;
    mpfr_hypot(h.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return h;
}

Complex sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    if (z.im == 0) {
        if (z.re >= 0) return Complex(sqrt(z.re), Real(0));
        return Complex(Real(0), sqrt(Real(-z.re)));
    }
    Real r = abs(z);
    if (z.re >= 0) {
        Real w = sqrt((r + z.re) / 2);
        return Complex(w, z.im / (2 * w));
    }
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return Complex(z.im / (2 * v), v);
}

Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex pow_int(Complex z, long e) {
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex acc(Real(1));
    while (k) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    if (inv) return Complex(Real(1)) / acc;
    return acc;
}

Complex exp_2pi_i(const Rational& r) {
    Real ang = 2 * pi_value() * to_real(r);
    return Complex(cos(ang), sin(ang));
}

std::string to_string(const Complex& z, unsigned digits) {
    std::ostringstream os;
    unsigned d = digits ? digits : bits_to_digits10(precision_bits());
    os.precision(d);
    os << z.re;
    if (z.im >= 0)
        os << " + " << z.im << "i";
    else
        os << " - " << -z.im << "i";
    return os.str();
}

}  // namespace mahler
