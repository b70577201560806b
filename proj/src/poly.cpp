#include "mahler/poly.hpp"

#include <sstream>

namespace mahler {

QSeries<Rational> laurent_at_zero(const QRat& f, long order) {
    if (f.is_zero()) return QSeries<Rational>::zero(order);
    // Pull the t-power out of the denominator so the remaining part is a unit.
    const QPoly& den = f.den();
    long v = 0;
    while (den[v] == 0) ++v;
    long n = order + v;
    std::vector<Rational> dc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long i = v; i <= std::min<long>(den.degree(), n + v); ++i)
        dc[static_cast<std::size_t>(i - v)] = den[i];
    QSeries<Rational> d(0, std::move(dc));
    std::vector<Rational> nc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long i = 0; i <= std::min<long>(f.num().degree(), n); ++i) nc[static_cast<std::size_t>(i)] = f.num()[i];
    QSeries<Rational> numer(0, std::move(nc));
    QSeries<Rational> q = numer / d;
    return QSeries<Rational>(q.lead24() - 24 * v, q.coeffs());
}

QRat eval_lambda(const LRat& f, const Rational& lam) {
    QRat l(lam);
    QPoly num, den;
    {
        std::vector<Rational> c;
        for (long i = 0; i <= f.num().degree(); ++i) c.push_back(f.num()[i].eval(lam));
        num = QPoly(std::move(c));
        c.clear();
        for (long i = 0; i <= f.den().degree(); ++i) c.push_back(f.den()[i].eval(lam));
        den = QPoly(std::move(c));
    }
    if (den.is_zero()) throw std::domain_error("lambda evaluation hits a polar locus");
    return QRat(std::move(num), std::move(den));
}

namespace {
LPoly d_lambda(const LPoly& p) {
    std::vector<QRat> c;
    for (long i = 0; i <= p.degree(); ++i) c.push_back(p[i].derivative());
    return LPoly(std::move(c));
}
}  // namespace

LRat d_lambda(const LRat& f) {
    LPoly dn = d_lambda(f.num()), dd = d_lambda(f.den());
    return LRat(dn * f.den() - f.num() * dd, f.den() * f.den());
}

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p[i];
        if (c == 0) continue;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || ac != 1) os << ac;
        if (i > 0) {
            if (ac != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string to_string(const QRat& f, const std::string& var) {
    std::ostringstream os;
    if (f.den().degree() == 0 && f.den()[0] == 1) {
        os << to_string(f.num(), var);
    } else {
        os << "(" << to_string(f.num(), var) << ")/(" << to_string(f.den(), var) << ")";
    }
    return os.str();
}

}  // namespace mahler
