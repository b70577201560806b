#pragma once

#include "mahler/numeric.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace mahler {

template <typename T>
struct ScalarOps {
    static T from_rational(const Rational& q) { return T(q); }
    static bool is_zero(const T& v) { return v == 0; }
};

template <>
struct ScalarOps<Real> {
    static Real from_rational(const Rational& q) { return to_real(q); }
    static bool is_zero(const Real& v) { return v == 0; }
};

// Truncated power series  q^{lead} (c_0 + c_1 q + ... + c_N q^N)  where the
// leading exponent lead is an exact multiple of 1/24, stored as lead24/24.
// The series is known modulo q^{lead+N+1}; reading past that is an error, not
// a silent zero. Values are immutable after construction.
template <typename T>
class QSeries {
public:
    QSeries() : lead24_(0), c_(1, T(0)) {}
    QSeries(long lead24, std::vector<T> coeffs) : lead24_(lead24), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("QSeries requires at least one known coefficient");
    }

    static QSeries zero(long order) { return QSeries(0, std::vector<T>(order + 1, T(0))); }
    static QSeries constant(const T& v, long order) {
        std::vector<T> c(order + 1, T(0));
        c[0] = v;
        return QSeries(0, std::move(c));
    }
    static QSeries one(long order) { return constant(T(1), order); }
    // q^{e} known through order `order` past the exponent.
    static QSeries monomial(long e, long order) {
        std::vector<T> c(order + 1, T(0));
        c[0] = T(1);
        return QSeries(24 * e, std::move(c));
    }

    long lead24() const { return lead24_; }
    Rational lead_exp() const { return Rational(lead24_, 24); }
    long order() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    // Largest absolute exponent (in 24ths) whose coefficient is known.
    long known_through24() const { return lead24_ + 24 * order(); }

    const T& operator[](long i) const { return c_.at(static_cast<std::size_t>(i)); }

    // Coefficient of q^{e24/24}; exact zero below the lead, error past the
    // known range or off the exponent grid.
    T coeff_at24(long e24) const {
        if (e24 < lead24_) {
            if ((lead24_ - e24) % 24 != 0) return T(0);
            return T(0);
        }
        if ((e24 - lead24_) % 24 != 0) return T(0);
        long i = (e24 - lead24_) / 24;
        if (i > order()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[static_cast<std::size_t>(i)];
    }

    bool is_zero_through_order() const {
        for (const auto& v : c_)
            if (!ScalarOps<T>::is_zero(v)) return false;
        return true;
    }

    // Raise the lead past known-zero leading coefficients. Never changes the
    // known range.
    QSeries normalized() const {
        std::size_t i = 0;
        while (i + 1 < c_.size() && ScalarOps<T>::is_zero(c_[i])) ++i;
        if (i == 0) return *this;
        return QSeries(lead24_ + 24 * static_cast<long>(i), std::vector<T>(c_.begin() + i, c_.end()));
    }

    QSeries truncated(long new_order) const {
        if (new_order < 0) throw std::invalid_argument("negative truncation order");
        if (new_order >= order()) return *this;
        return QSeries(lead24_, std::vector<T>(c_.begin(), c_.begin() + new_order + 1));
    }

    QSeries shifted(long e) const {  // multiply by q^e
        return QSeries(lead24_ + 24 * e, c_);
    }

private:
    long lead24_;
    std::vector<T> c_;
};

namespace detail {
inline long exponent_offset(long a24, long b24) {
    long d = a24 - b24;
    if (d % 24 != 0) throw std::invalid_argument("incompatible exponent grids");
    return d / 24;
}
}  // namespace detail

template <typename T>
QSeries<T> add_scaled(const QSeries<T>& a, const QSeries<T>& b, const T& bscale) {
    long lead = std::min(a.lead24(), b.lead24());
    long known = std::min(a.known_through24(), b.known_through24());
    if (known < lead) throw std::runtime_error("QSeries addition leaves no known coefficients");
    detail::exponent_offset(a.lead24(), b.lead24());
    long n = (known - lead) / 24;
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    long oa = (a.lead24() - lead) / 24, ob = (b.lead24() - lead) / 24;
    for (long i = 0; i <= n; ++i) {
        T v(0);
        if (i >= oa && i - oa <= a.order()) v += a[i - oa];
        if (i >= ob && i - ob <= b.order()) v += bscale * b[i - ob];
        c[static_cast<std::size_t>(i)] = v;
    }
    return QSeries<T>(lead, std::move(c));
}

template <typename T>
QSeries<T> operator+(const QSeries<T>& a, const QSeries<T>& b) {
    return add_scaled(a, b, T(1));
}

template <typename T>
QSeries<T> operator-(const QSeries<T>& a, const QSeries<T>& b) {
    return add_scaled(a, b, T(-1));
}

template <typename T>
QSeries<T> operator-(const QSeries<T>& a) {
    std::vector<T> c = a.coeffs();
    for (auto& v : c) v = -v;
    return QSeries<T>(a.lead24(), std::move(c));
}

template <typename T>
QSeries<T> operator*(const QSeries<T>& a, const QSeries<T>& b) {
    long n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    for (long i = 0; i <= std::min<long>(a.order(), n); ++i) {
        if (ScalarOps<T>::is_zero(a[i])) continue;
        for (long j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return QSeries<T>(a.lead24() + b.lead24(), std::move(c));
}

template <typename T>
QSeries<T> operator*(const T& s, const QSeries<T>& a) {
    std::vector<T> c = a.coeffs();
    for (auto& v : c) v = s * v;
    return QSeries<T>(a.lead24(), std::move(c));
}

template <typename T>
QSeries<T> scale_rational(const Rational& s, const QSeries<T>& a) {
    return ScalarOps<T>::from_rational(s) * a;
}

template <typename T>
QSeries<T> operator/(const QSeries<T>& a, const QSeries<T>& b) {
    QSeries<T> bn = b.normalized();
    if (ScalarOps<T>::is_zero(bn[0]))
        throw std::domain_error("division by a series that is zero to its truncation order");
    long n = std::min(a.order(), bn.order());
    std::vector<T> y(static_cast<std::size_t>(n) + 1, T(0));
    for (long k = 0; k <= n; ++k) {
        T acc = (k <= a.order()) ? a[k] : T(0);
        for (long j = 0; j < k; ++j) acc -= y[static_cast<std::size_t>(j)] * bn[k - j];
        y[static_cast<std::size_t>(k)] = acc / bn[0];
    }
    return QSeries<T>(a.lead24() - bn.lead24(), std::move(y));
}

template <typename T>
QSeries<T> pow_int(const QSeries<T>& a, long e) {
    if (e < 0) return pow_int(QSeries<T>::one(a.order()) / a, -e);
    QSeries<T> acc = QSeries<T>::one(a.order());
    QSeries<T> base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

// q -> q^d on the step-1 exponent grid.
template <typename T>
QSeries<T> rescale(const QSeries<T>& a, long d) {
    if (d < 1) throw std::invalid_argument("rescale requires d >= 1");
    std::vector<T> c(static_cast<std::size_t>(a.order() * d) + 1, T(0));
    for (long i = 0; i <= a.order(); ++i) c[static_cast<std::size_t>(i * d)] = a[i];
    return QSeries<T>(a.lead24() * d, std::move(c));
}

// D = q d/dq.
template <typename T>
QSeries<T> derivative_D(const QSeries<T>& a) {
    std::vector<T> c = a.coeffs();
    for (long i = 0; i <= a.order(); ++i)
        c[static_cast<std::size_t>(i)] =
            c[static_cast<std::size_t>(i)] * ScalarOps<T>::from_rational(Rational(a.lead24() + 24 * i, 24));
    return QSeries<T>(a.lead24(), std::move(c));
}

// Series plus an explicit c log q term: the image of D^{-1} on series with a
// constant term, D^{-1}(a_0 + sum a_n q^n) = a_0 log q + sum (a_n/n) q^n.
template <typename T>
struct LogSeries {
    T log_coeff = T(0);
    QSeries<T> series;
};

template <typename T>
LogSeries<T> integrate_D_inv(const QSeries<T>& a) {
    LogSeries<T> out;
    std::vector<T> c = a.coeffs();
    for (long i = 0; i <= a.order(); ++i) {
        Rational e(a.lead24() + 24 * i, 24);
        if (e == 0) {
            out.log_coeff = c[static_cast<std::size_t>(i)];
            c[static_cast<std::size_t>(i)] = T(0);
        } else {
            c[static_cast<std::size_t>(i)] =
                c[static_cast<std::size_t>(i)] * ScalarOps<T>::from_rational(1 / e);
        }
    }
    out.series = QSeries<T>(a.lead24(), std::move(c));
    return out;
}

template <typename T>
QSeries<T> derivative_D(const LogSeries<T>& a) {
    QSeries<T> d = derivative_D(a.series);
    return d + QSeries<T>::constant(a.log_coeff, d.order());
}

// q -> -q; defined only on integral exponent grids.
template <typename T>
QSeries<T> alternate_signs(const QSeries<T>& a) {
    if (a.lead24() % 24 != 0) throw std::domain_error("alternate_signs requires an integral lead exponent");
    std::vector<T> c = a.coeffs();
    long lead = a.lead24() / 24;
    for (long i = 0; i <= a.order(); ++i)
        if ((lead + i) % 2 != 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    return QSeries<T>(a.lead24(), std::move(c));
}

// Composition (outer in t) ∘ (inner in q); inner must have lead >= 1 so the
// composition is well defined on truncations. Result carries inner's order.
template <typename T>
QSeries<T> substitute(const QSeries<T>& outer, const QSeries<T>& inner) {
    if (inner.lead24() < 24 || inner.lead24() % 24 != 0)
        throw std::domain_error("substitute requires inner lead exponent >= 1");
    if (outer.lead24() < 0 || outer.lead24() % 24 != 0)
        throw std::domain_error("substitute requires a polynomial-type outer series");
    long n = inner.order();
    QSeries<T> acc = QSeries<T>::constant(outer[outer.order()], n);
    for (long k = outer.order() - 1; k >= 0; --k)
        acc = acc * inner + QSeries<T>::constant(outer[k], n);
    if (outer.lead24() > 0) acc = acc * pow_int(inner, outer.lead24() / 24);
    return acc;
}

inline Real pow_int(const Real& x, long e) {
    using boost::multiprecision::pow;
    if (e >= 0) return pow(x, static_cast<unsigned long>(e));
    return 1 / pow(x, static_cast<unsigned long>(-e));
}

// Evaluate an exact series numerically given q^{1/24}; V is Real or Complex.
template <typename V>
V eval_q24(const QSeries<Rational>& a, const V& q24) {
    V q = pow_int(q24, 24);
    V acc = V(Real(0));
    for (long i = a.order(); i >= 0; --i) {
        acc = acc * q;
        acc = acc + V(to_real(a[i]));
    }
    return acc * pow_int(q24, a.lead24());
}

inline Real eval_real_q(const QSeries<Rational>& a, const Real& q) {
    using boost::multiprecision::pow;
    if (!(q > 0)) throw std::domain_error("eval_real_q requires q > 0");
    Real q24 = pow(q, Real(Rational(1, 24)));
    return eval_q24(a, q24);
}

// Coefficient-wise comparison through absolute exponent through24 (in 24ths);
// throws if either side is not known that far.
template <typename T>
std::optional<long> first_mismatch24(const QSeries<T>& a, const QSeries<T>& b, long through24) {
    if (a.known_through24() < through24 || b.known_through24() < through24)
        throw std::out_of_range("comparison beyond known truncation order");
    long start = std::min(a.lead24(), b.lead24());
    long step = 24;
    for (long e = start; e <= through24; e += step) {
        T va = (e >= a.lead24() && (e - a.lead24()) % 24 == 0) ? a.coeff_at24(e) : T(0);
        T vb = (e >= b.lead24() && (e - b.lead24()) % 24 == 0) ? b.coeff_at24(e) : T(0);
        if (!(va == vb)) return e;
    }
    return std::nullopt;
}

template <typename T>
bool equal_through24(const QSeries<T>& a, const QSeries<T>& b, long through24) {
    return !first_mismatch24(a, b, through24).has_value();
}

std::string format_exponent(long e24);
std::string to_string(const QSeries<Rational>& a);

}  // namespace mahler
