#pragma once

#include "mahler/numeric.hpp"
#include "mahler/qseries.hpp"

#include <initializer_list>
#include <sstream>
#include <vector>

namespace mahler {

// Dense univariate polynomial over a field K (K = Rational, or RatFunc<Rational>
// when bivariate rational functions are needed).
template <typename K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> c) : c_(c) { trim(); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const K& operator[](long i) const {
        static const K kZero = K(0);
        if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        std::vector<K> c = a.c_;
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, Poly a) {
        for (auto& v : a.c_) v = s * v;
        a.trim();
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Division with remainder; K must be a field.
    static std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q;
        q.c_.assign(a.c_.size(), K(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            K f = a.leading() / b.leading();
            long shift = a.degree() - b.degree();
            for (long i = 0; i <= b.degree(); ++i)
                a.c_[static_cast<std::size_t>(i + shift)] -= f * b[i];
            a.c_.pop_back();
            a.trim();
            q.c_[static_cast<std::size_t>(shift)] = f;
        }
        q.trim();
        return {q, a};
    }

    K eval(const K& x) const {
        K acc(0);
        for (long i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    // p(x + s)
    Poly shifted(const K& s) const {
        Poly acc;
        Poly lin{s, K(1)};
        for (long i = degree(); i >= 0; --i) acc = acc * lin + constant(c_[static_cast<std::size_t>(i)]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <typename K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = Poly<K>::divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = (K(1) / a.leading()) * a;  // monic
    return a;
}

// Reduced rational function num/den with monic denominator.
template <typename K>
class RatFunc {
public:
    RatFunc() : num_(), den_{Poly<K>::constant(K(1))} {}
    RatFunc(long v) : num_(Poly<K>::constant(K(v))), den_(Poly<K>::constant(K(1))) { reduce(); }
    RatFunc(const K& v) : num_(Poly<K>::constant(v)), den_(Poly<K>::constant(K(1))) { reduce(); }
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }
    static RatFunc from_poly(Poly<K> p) { return RatFunc(std::move(p), Poly<K>::constant(K(1))); }
    static RatFunc x() { return from_poly(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator*(const K& s, const RatFunc& a) {
        return RatFunc(s * a.num_, a.den_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d == K(0)) throw std::domain_error("rational function evaluated at a pole");
        return num_.eval(x) / d;
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(K(1));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divrem(num_, g).first;
            den_ = Poly<K>::divrem(den_, g).first;
        }
        K lc = den_.leading();
        if (!(lc == K(1))) {
            K inv = K(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
    Poly<K> num_, den_;
};

using QPoly = Poly<Rational>;
using QRat = RatFunc<Rational>;
// Rational functions of lambda, and of t over Q(lambda).
using LPoly = Poly<QRat>;
using LRat = RatFunc<QRat>;

// Laurent expansion of f at 0 (num/den over Q); lead may be negative.
QSeries<Rational> laurent_at_zero(const QRat& f, long order);

// Coefficient-wise evaluation / differentiation in lambda of a t-rational
// function over Q(lambda).
QRat eval_lambda(const LRat& f, const Rational& lam);
LRat d_lambda(const LRat& f);

std::string to_string(const QPoly& p, const std::string& var = "t");
std::string to_string(const QRat& f, const std::string& var = "t");

}  // namespace mahler
