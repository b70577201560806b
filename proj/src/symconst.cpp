#include "mahler/symconst.hpp"

#include <sstream>

namespace mahler {

std::pair<SymMonomial, Rational> mul(const SymMonomial& a, const SymMonomial& b) {
    SymMonomial m;
    m.pi = a.pi + b.pi;
    m.omega = a.omega + b.omega;
    m.zeta3 = a.zeta3 + b.zeta3;
    m.lchi = a.lchi + b.lchi;
    long long r = a.rad * b.rad;
    Integer sq = 1;
    for (long long p = 2; p * p <= r; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            sq *= p;
        }
    }
    m.rad = r;
    return {m, Rational(sq)};
}

std::string to_string(const SymMonomial& m) {
    std::ostringstream os;
    bool any = false;
    auto factor = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (any) os << "*";
        os << name;
        if (e != 1) os << "^" << e;
        any = true;
    };
    if (m.rad != 1) {
        os << "sqrt(" << m.rad << ")";
        any = true;
    }
    factor("pi", m.pi);
    factor("Omega", m.omega);
    factor("zeta(3)", m.zeta3);
    factor("L(chi_-3,2)", m.lchi);
    if (!any) os << "1";
    return os.str();
}

Real SymContext::value_of(const SymMonomial& m) const {
    Real v(1);
    auto ipow = [](const Real& x, int e) {
        using boost::multiprecision::pow;
        if (e >= 0) return Real(pow(x, static_cast<unsigned>(e)));
        return Real(1 / pow(x, static_cast<unsigned>(-e)));
    };
    if (m.pi != 0) v *= ipow(pi, m.pi);
    if (m.omega != 0) v *= ipow(omega, m.omega);
    if (m.zeta3 != 0) v *= ipow(zeta3, m.zeta3);
    if (m.lchi != 0) v *= ipow(lchi, m.lchi);
    if (m.rad != 1) v *= sqrt(Real(m.rad));
    return v;
}

void SymExpr::add_term(const SymMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
    SymExpr out;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            auto [m, sq] = mul(ma, mb);
            out.add_term(m, ca * cb * sq);
        }
    return out;
}

SymExpr operator*(const Rational& s, const SymExpr& a) {
    SymExpr out;
    for (const auto& [m, c] : a.t_) out.add_term(m, s * c);
    return out;
}

Real SymExpr::eval(const SymContext& ctx) const {
    Real v(0);
    for (const auto& [m, c] : t_) v += to_real(c) * ctx.value_of(m);
    return v;
}

std::string SymExpr::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << ac;
        } else {
            if (ac != 1) os << "(" << ac << ")*";
            os << to_string(m);
        }
    }
    return os.str();
}

void SymRatFunc::add_part(const SymMonomial& m, const QRat& f) {
    if (f.is_zero()) return;
    auto it = p_.find(m);
    if (it == p_.end()) {
        p_.emplace(m, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) p_.erase(it);
    }
}

SymRatFunc& SymRatFunc::operator+=(const SymRatFunc& o) {
    for (const auto& [m, f] : o.p_) add_part(m, f);
    return *this;
}

SymRatFunc& SymRatFunc::operator-=(const SymRatFunc& o) {
    for (const auto& [m, f] : o.p_) add_part(m, -f);
    return *this;
}

SymRatFunc operator*(const SymExpr& s, const SymRatFunc& f) {
    SymRatFunc out;
    for (const auto& [ms, cs] : s.terms())
        for (const auto& [mf, ff] : f.p_) {
            auto [m, sq] = mul(ms, mf);
            out.add_part(m, Rational(cs * sq) * ff);
        }
    return out;
}

SymRatFunc operator*(const QRat& g, const SymRatFunc& f) {
    SymRatFunc out;
    for (const auto& [m, ff] : f.p_) out.add_part(m, g * ff);
    return out;
}

SymRatFunc sym_times(const SymExpr& s, const QRat& f) {
    SymRatFunc out;
    for (const auto& [m, c] : s.terms()) out.add_part(m, c * f);
    return out;
}

std::string SymRatFunc::str(const std::string& var) const {
    if (p_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : p_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) {
            os << to_string(f, var);
        } else {
            os << to_string(m) << " * [" << to_string(f, var) << "]";
        }
    }
    return os.str();
}

}  // namespace mahler
