#include "mahler/eta.hpp"

namespace mahler {

Rational EtaQuotient::weight() const {
    Rational w = 0;
    for (const auto& f : factors) w += f.exponent;
    return w / 2;
}

Rational EtaQuotient::lead_exponent() const {
    Rational e = 0;
    for (const auto& f : factors) e += Rational(f.scale) * f.exponent;
    return e / 24;
}

QSeries<Rational> euler_product_series(long order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    // sum_{k in Z} (-1)^k q^{k(3k-1)/2}
    c[0] = 1;
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 > order && e2 > order) break;
        Rational s = (k % 2 == 0) ? 1 : -1;
        if (e1 <= order) c[static_cast<std::size_t>(e1)] += s;
        if (e2 <= order) c[static_cast<std::size_t>(e2)] += s;
    }
    return QSeries<Rational>(0, std::move(c));
}

QSeries<Rational> eta_series(long order) {
    if (order < 1) throw std::invalid_argument("eta_series requires order >= 1");
    return QSeries<Rational>(1, euler_product_series(order).coeffs());
}

namespace {
// Euler^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}  (Jacobi).
QSeries<Rational> euler_cube_series(long order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e > order) break;
        c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
    }
    return QSeries<Rational>(0, std::move(c));
}
}  // namespace

QSeries<Rational> eta_power_series(long k, long order) {
    if (k == 0) throw std::invalid_argument("eta^0 is trivial");
    long ak = k < 0 ? -k : k;
    QSeries<Rational> base = (ak % 3 == 0) ? pow_int(euler_cube_series(order), ak / 3)
                                           : pow_int(euler_product_series(order), ak);
    if (k < 0) base = QSeries<Rational>::one(order) / base;
    return QSeries<Rational>(k, base.coeffs());  // lead = k/24
}

QSeries<Rational> eta_quotient_series(const EtaQuotient& eq, long order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    QSeries<Rational> acc = QSeries<Rational>::one(order);
    long lead24 = 0;
    for (const auto& f : eq.factors) {
        if (f.scale < 1) throw std::invalid_argument("eta scale must be positive");
        long sub_order = order / f.scale + 1;
        QSeries<Rational> p = eta_power_series(f.exponent, sub_order);
        lead24 += f.scale * f.exponent;
        // strip the fractional prefix, rescale the integral part
        QSeries<Rational> body(0, p.coeffs());
        acc = acc * rescale(body, f.scale).truncated(order);
    }
    return QSeries<Rational>(lead24 + acc.lead24(), acc.coeffs());
}

std::vector<long long> eta3_pair_coefficients(long a, long b, long order) {
    long lead = (3 * a + 3 * b) / 24;
    if (lead * 24 != 3 * a + 3 * b) throw std::invalid_argument("lead exponent must be integral");
    std::vector<long long> c(static_cast<std::size_t>(order) + 1, 0);
    for (long k = 0;; ++k) {
        long ea = lead + a * k * (k + 1) / 2;
        if (ea > order) break;
        long long wa = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
        for (long l = 0;; ++l) {
            long e = ea + b * l * (l + 1) / 2;
            if (e > order) break;
            long long wb = (l % 2 == 0) ? (2 * l + 1) : -(2 * l + 1);
            c[static_cast<std::size_t>(e)] += wa * wb;
        }
    }
    return c;
}

Complex eta_value(const Complex& tau) {
    if (precision_bits() < 32) throw std::domain_error("eta_value requires at least 32 bits of precision");
    if (!(tau.im > 0)) throw std::domain_error("eta_value requires Im(tau) > 0");

    // Invariant: eta(input) = factor * eta(t).
    Complex t = tau;
    Complex factor(Real(1));
    Real half(Rational(1, 2));
    for (int iter = 0; iter < 4096; ++iter) {
        // center the real part
        Real n = floor(t.re + half);
        if (n != 0) {
            long nn = n.convert_to<long>();
            t.re -= Real(nn);
            factor = factor * exp_2pi_i(Rational(nn, 24));
        }
        if (t.im >= half) break;
        // S move: eta(t) = eta(-1/t) / sqrt(-i t)
        Complex root = sqrt(Complex(t.im, -t.re));  // -i*t
        factor = factor / root;
        t = Complex(Real(-1)) / t;
        if (iter == 4095) throw std::runtime_error("eta reduction failed to converge");
    }

    // q-product at Im(t) >= 1/2
    Real twopi = 2 * pi_value();
    Real s24 = to_real(Rational(1, 24));
    Complex q24 = exp(Complex(-twopi * t.im * s24, twopi * t.re * s24));
    Complex q = pow_int(q24, 24);
    double im = t.im.convert_to<double>();
    long nterms = static_cast<long>((precision_bits() + 24) * 0.6931 / (6.2831 * im)) + 2;
    Complex prod(Real(1));
    Complex qp = q;
    for (long n = 1; n <= nterms; ++n) {
        prod *= Complex(Real(1) - qp.re, -qp.im);
        qp *= q;
    }
    return factor * q24 * prod;
}

}  // namespace mahler
