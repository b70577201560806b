#include "mahler/forms.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace mahler {

DirichletChar::DirichletChar(long modulus, std::vector<int> table) : modulus_(modulus), table_(std::move(table)) {
    if (modulus_ < 1 || static_cast<long>(table_.size()) != modulus_)
        throw std::invalid_argument("character table must have length equal to the modulus");
}

int DirichletChar::operator()(long long n) const {
    long long r = n % modulus_;
    if (r < 0) r += modulus_;
    return table_[static_cast<std::size_t>(r)];  // index 0 = residue 0
}

namespace {
DirichletChar make_kronecker(long D, long modulus) {
    std::vector<int> t(static_cast<std::size_t>(modulus));
    for (long r = 0; r < modulus; ++r) t[static_cast<std::size_t>(r)] = r == 0 ? 0 : kronecker_symbol(D, r);
    // residues sharing a factor with the modulus must vanish
    for (long r = 0; r < modulus; ++r)
        if (std::gcd(r, modulus) != 1) t[static_cast<std::size_t>(r)] = 0;
    return DirichletChar(modulus, std::move(t));
}
}  // namespace

const DirichletChar& DirichletChar::chi_minus3() {
    static const DirichletChar chi = make_kronecker(-3, 3);
    return chi;
}

const DirichletChar& DirichletChar::chi_minus15() {
    static const DirichletChar chi = make_kronecker(-15, 15);
    return chi;
}

const std::vector<std::pair<FormId, std::string>>& form_names() {
    static const std::vector<std::pair<FormId, std::string>> names = {
        {FormId::t2, "t2"},         {FormId::f2, "f2"},
        {FormId::t3, "t3"},         {FormId::f3, "f3"},
        {FormId::g1w3, "g1w3"},     {FormId::g2w3, "g2w3"},
        {FormId::g1w4, "g1w4"},     {FormId::g2w4, "g2w4"},
        {FormId::g3w4, "g3w4"},     {FormId::f15, "f15"},
        {FormId::E3chi, "E3chi"},   {FormId::E3chiTilde, "E3chi_tilde"},
        {FormId::E4, "E4"},         {FormId::E1, "E1"},
        {FormId::G2, "G2"},         {FormId::f1, "f1"},
        {FormId::f2sec7, "f2sec7"}, {FormId::g1hat, "g1hat"},
        {FormId::f2hat, "f2hat"},
    };
    return names;
}

FormId form_id_from_name(const std::string& name) {
    for (const auto& [id, n] : form_names())
        if (n == name) return id;
    throw std::invalid_argument("unknown form id: " + name);
}

const std::string& form_name(FormId id) {
    for (const auto& [i, n] : form_names())
        if (i == id) return n;
    throw std::invalid_argument("unknown form id");
}

QSeries<Rational> eisenstein_series(const Rational& constant, int power, const DirichletChar* chi,
                                    bool chi_on_power_index, long order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[0] = constant;
    for (long n = 1; n <= order; ++n) {
        Integer npow = 1;
        for (int r = 0; r < power; ++r) npow *= n;
        for (long m = 1; m * n <= order; ++m) {
            long w = 1;
            if (chi) w = chi_on_power_index ? (*chi)(n) : (*chi)(m);
            if (w == 0) continue;
            c[static_cast<std::size_t>(m * n)] += Rational(w * npow);
        }
    }
    return QSeries<Rational>(0, std::move(c));
}

namespace {
EtaQuotient eq(std::initializer_list<EtaQuotient::Factor> fs) { return EtaQuotient{fs}; }

struct EtaComboTerm {
    Rational coef;
    EtaQuotient quotient;
};

// t- and f-series of the two modular parametrizations.
QSeries<Rational> t2_series(long order) {
    return eta_quotient_series(eq({{6, 8}, {1, 4}, {3, -4}, {2, -8}}), order);
}
QSeries<Rational> f2_series(long order) {
    return eta_quotient_series(eq({{2, 6}, {3, 1}, {1, -3}, {6, -2}}), order);
}
QSeries<Rational> t3_series(long order) {
    return scale_rational(Rational(-1),
                          eta_quotient_series(eq({{2, 6}, {6, 6}, {1, -6}, {3, -6}}), order));
}
QSeries<Rational> f3_series(long order) {
    return eta_quotient_series(eq({{1, 4}, {3, 4}, {2, -2}, {6, -2}}), order);
}

// h(t(q)) for a rational function h, as a q-series.
QSeries<Rational> ratfunc_of_series(const QRat& h, const QSeries<Rational>& t) {
    long order = t.order();
    auto poly_of = [&](const QPoly& p) {
        if (p.is_zero()) return QSeries<Rational>::zero(order);
        QSeries<Rational> acc = QSeries<Rational>::constant(p[p.degree()], order);
        for (long i = p.degree() - 1; i >= 0; --i)
            acc = acc * t + QSeries<Rational>::constant(p[i], order);
        return acc;
    };
    return poly_of(h.num()) / poly_of(h.den());
}
}  // namespace

FormRegistry& FormRegistry::instance() {
    static FormRegistry reg;
    return reg;
}

QSeries<Rational> FormRegistry::expansion(FormId id, long order) const {
    auto it = memo_.find(id);
    if (it != memo_.end() && it->second.order() >= order) return it->second.truncated(order);

    QSeries<Rational> s;
    const DirichletChar& chi3 = DirichletChar::chi_minus3();
    switch (id) {
        case FormId::t2: s = t2_series(order); break;
        case FormId::f2: s = f2_series(order); break;
        case FormId::t3: s = t3_series(order); break;
        case FormId::f3: s = f3_series(order); break;
        case FormId::g1w3: {
            QSeries<Rational> t = t2_series(order + 1), f = f2_series(order + 1);
            s = alternate_signs((derivative_D(t) * f / t).truncated(order));
            break;
        }
        case FormId::g2w3: {
            QSeries<Rational> t = t2_series(order + 1), f = f2_series(order + 1);
            QSeries<Rational> one = QSeries<Rational>::one(order + 1);
            s = alternate_signs((derivative_D(t) * f / (one - t)).truncated(order));
            break;
        }
        case FormId::g1w4: {
            QSeries<Rational> t = t3_series(order + 1), f = f3_series(order + 1);
            s = (derivative_D(t) * f / t).truncated(order);
            break;
        }
        case FormId::g2w4: {
            QSeries<Rational> t = t3_series(order + 1), f = f3_series(order + 1);
            QSeries<Rational> one = QSeries<Rational>::one(order + 1);
            s = (derivative_D(t) * f / (one - t)).truncated(order);
            break;
        }
        case FormId::g3w4: {
            QSeries<Rational> t = t3_series(order + 1), f = f3_series(order + 1);
            QRat h(QPoly{Rational(0), Rational(-13), Rational(251), Rational(212)},
                   QPoly{Rational(1), Rational(-3), Rational(3), Rational(-1)});  // t(212t^2+251t-13)/(1-t)^3
            s = (ratfunc_of_series(h, t) * derivative_D(t) * f / t).truncated(order);
            break;
        }
        case FormId::f15: {
            QSeries<Rational> a = eta_quotient_series(eq({{3, 3}, {5, 3}}), order);
            QSeries<Rational> b = eta_quotient_series(eq({{1, 3}, {15, 3}}), order);
            s = a + b;
            break;
        }
        case FormId::E3chi: s = eisenstein_series(Rational(-1, 9), 2, &chi3, true, order); break;
        case FormId::E3chiTilde: s = eisenstein_series(Rational(0), 2, &chi3, false, order); break;
        case FormId::E4: s = eisenstein_series(Rational(1, 240), 3, nullptr, false, order); break;
        case FormId::E1: s = eisenstein_series(Rational(1, 6), 0, &chi3, false, order); break;
        case FormId::G2: s = eisenstein_series(Rational(-1, 24), 1, nullptr, false, order); break;
        case FormId::f1:
            s = expansion_of({{Rational(-1), FormId::E1, 1},
                              {Rational(-7), FormId::E1, 2},
                              {Rational(8), FormId::E1, 4}},
                             order);
            break;
        case FormId::f2sec7:
            s = expansion_of({{Rational(1), FormId::E1, 1},
                              {Rational(1, 2), FormId::E1, 2},
                              {Rational(-1, 2), FormId::E1, 4}},
                             order);
            break;
        case FormId::g1hat:
            s = expansion_of({{Rational(1), FormId::E3chiTilde, 1},
                              {Rational(2), FormId::E3chiTilde, 2},
                              {Rational(-8), FormId::E3chiTilde, 4}},
                             order);
            break;
        case FormId::f2hat:
            s = expansion_of({{Rational(-1), FormId::E1, 1},
                              {Rational(2), FormId::E1, 2},
                              {Rational(8), FormId::E1, 4}},
                             order);
            break;
    }
    auto stored = memo_.find(id);
    if (stored == memo_.end() || stored->second.order() < s.order()) memo_[id] = s;
    return s.truncated(order);
}

QSeries<Rational> FormRegistry::expansion_of(const std::vector<FormTerm>& combo, long order) const {
    if (combo.empty()) throw std::invalid_argument("empty form combination");
    QSeries<Rational> acc = QSeries<Rational>::zero(order);
    for (const auto& term : combo) {
        if (term.scale < 1) throw std::invalid_argument("form rescaling must be positive");
        long base_order = order / term.scale + 1;
        QSeries<Rational> base = expansion(term.id, base_order);
        QSeries<Rational> piece = rescale(base, term.scale);
        acc = acc + scale_rational(term.coef, piece.truncated(std::min(order, piece.order())));
        acc = acc.truncated(order);
    }
    return acc;
}

IdentityResult FormRegistry::identity_check(const std::vector<FormTerm>& lhs, const std::vector<FormTerm>& rhs,
                                            long order) const {
    QSeries<Rational> a = expansion_of(lhs, order);
    QSeries<Rational> b = expansion_of(rhs, order);
    auto mism = first_mismatch24(a, b, 24 * order);
    if (!mism) return {true, std::nullopt};
    return {false, Rational(*mism, 24)};
}

namespace {
Complex eta_quotient_value(const EtaQuotient& q, const Complex& z) {
    Complex acc(Real(1));
    for (const auto& f : q.factors) {
        Complex e = eta_value(Complex(Real(f.scale) * z.re, Real(f.scale) * z.im));
        acc *= pow_int(e, f.exponent);
    }
    return acc;
}

Complex e3chi_value(const Complex& z) {
    // E_{3,chi} = -(1/9) eta(z)^9 / eta(3z)^3
    Complex v = eta_quotient_value(EtaQuotient{{{1, 9}, {3, -3}}}, z);
    return to_real(Rational(-1, 9)) * v;
}

// q-sum fallback for holomorphic Eisenstein-type forms; needs Im(z) large
// enough that the series converges comfortably.
Complex qsum_value(const QSeries<Rational>& s, const Complex& z) {
    Real y = z.im;
    if (!(y > Real(Rational(3, 10)))) throw std::domain_error("q-expansion evaluation needs Im(z) > 0.3");
    Real twopi = 2 * pi_value();
    Real s24 = to_real(Rational(1, 24));
    Complex q24 = exp(Complex(-twopi * z.im * s24, twopi * z.re * s24));
    return eval_q24(s, q24);
}
}  // namespace

FormRegistry::L3Point FormRegistry::l3_point(const Complex& z) const {
    L3Point p;
    p.t = to_real(Rational(-1)) * eta_quotient_value(EtaQuotient{{{2, 6}, {6, 6}, {1, -6}, {3, -6}}}, z);
    p.f = eta_quotient_value(EtaQuotient{{{1, 4}, {3, 4}, {2, -2}, {6, -2}}}, z);
    Complex one(Real(1));
    Complex rad = (one - Real(4) * p.t) * (one - Real(16) * p.t);
    p.Dt = p.f * p.f * p.t * sqrt(rad);
    return p;
}

Complex FormRegistry::value(FormId id, const Complex& z) const {
    if (!(z.im > 0)) throw std::domain_error("form evaluation requires Im(z) > 0");
    switch (id) {
        case FormId::t2: return eta_quotient_value(EtaQuotient{{{6, 8}, {1, 4}, {3, -4}, {2, -8}}}, z);
        case FormId::f2: return eta_quotient_value(EtaQuotient{{{2, 6}, {3, 1}, {1, -3}, {6, -2}}}, z);
        case FormId::t3:
            return to_real(Rational(-1)) *
                   eta_quotient_value(EtaQuotient{{{2, 6}, {6, 6}, {1, -6}, {3, -6}}}, z);
        case FormId::f3: return eta_quotient_value(EtaQuotient{{{1, 4}, {3, 4}, {2, -2}, {6, -2}}}, z);
        case FormId::f15: {
            Complex a = eta_quotient_value(EtaQuotient{{{3, 3}, {5, 3}}}, z);
            Complex b = eta_quotient_value(EtaQuotient{{{1, 3}, {15, 3}}}, z);
            return a + b;
        }
        case FormId::E3chi: return e3chi_value(z);
        case FormId::E3chiTilde: return eta_quotient_value(EtaQuotient{{{3, 9}, {1, -3}}}, z);
        case FormId::g1w3: {
            Complex z2(2 * z.re, 2 * z.im), z4(4 * z.re, 4 * z.im);
            return e3chi_value(z) - Real(2) * e3chi_value(z2) - Real(8) * e3chi_value(z4);
        }
        case FormId::g2w3: {
            Complex z2(2 * z.re, 2 * z.im), z4(4 * z.re, 4 * z.im);
            return -e3chi_value(z) - Real(7) * e3chi_value(z2) + Real(8) * e3chi_value(z4);
        }
        case FormId::g1w4:
        case FormId::g2w4:
        case FormId::g3w4: {
            L3Point p = l3_point(z);
            Complex one(Real(1));
            Complex g1 = p.f * p.f * sqrt((one - Real(4) * p.t) * (one - Real(16) * p.t));
            if (id == FormId::g1w4) return g1;
            Complex omt = one - p.t;
            if (abs(omt) < pow2(-static_cast<long>(precision_bits() / 2)))
                throw std::domain_error("evaluation at a pole: t(z) too close to 1");
            if (id == FormId::g2w4) return g1 * p.t / omt;
            Complex num = p.t * (Real(212) * p.t * p.t + Real(251) * p.t - Real(13));
            return g1 * num / (omt * omt * omt);
        }
        case FormId::f2sec7: {
            Complex a = eta_quotient_value(EtaQuotient{{{4, 2}, {12, 2}, {2, -1}, {6, -1}}}, z);
            Complex b = eta_quotient_value(EtaQuotient{{{2, 6}, {3, 1}, {1, -3}, {6, -2}}}, z);
            return to_real(Rational(1, 2)) * a + to_real(Rational(1, 6)) * b;
        }
        case FormId::f2hat: {
            Complex a = eta_quotient_value(EtaQuotient{{{3, 2}, {1, 2}, {6, -1}, {2, -1}}}, z);
            Complex b = eta_quotient_value(EtaQuotient{{{6, 6}, {4, 1}, {12, -3}, {2, -2}}}, z);
            return to_real(Rational(1, 2)) * a + b;
        }
        case FormId::E4:
        case FormId::E1:
        case FormId::G2:
        case FormId::f1:
        case FormId::g1hat: {
            long order = static_cast<long>(precision_bits()) + 64;
            return qsum_value(expansion(id, order), z);
        }
    }
    throw std::invalid_argument("unknown form id");
}

std::string FormRegistry::recipe_json(FormId id) const {
    nlohmann::json j;
    j["name"] = form_name(id);
    switch (id) {
        case FormId::t2: j["recipe"] = "eta(6z)^8 eta(z)^4 / (eta(3z)^4 eta(2z)^8)"; break;
        case FormId::f2: j["recipe"] = "eta(2z)^6 eta(3z) / (eta(z)^3 eta(6z)^2)"; break;
        case FormId::t3: j["recipe"] = "-(eta(2z) eta(6z) / (eta(z) eta(3z)))^6"; break;
        case FormId::f3: j["recipe"] = "(eta(z) eta(3z))^4 / (eta(2z) eta(6z))^2"; break;
        case FormId::g1w3: j["recipe"] = "((Dt/t) f)(z + 1/2) on the L2 parametrization"; break;
        case FormId::g2w3: j["recipe"] = "((Dt/(1-t)) f)(z + 1/2) on the L2 parametrization"; break;
        case FormId::g1w4: j["recipe"] = "(Dt/t) f on the L3 parametrization"; break;
        case FormId::g2w4: j["recipe"] = "(Dt/(1-t)) f on the L3 parametrization"; break;
        case FormId::g3w4: j["recipe"] = "t(212t^2+251t-13)/(1-t)^3 * (Dt/t) f on the L3 parametrization"; break;
        case FormId::f15: j["recipe"] = "eta(3z)^3 eta(5z)^3 + eta(z)^3 eta(15z)^3"; break;
        case FormId::E3chi: j["recipe"] = "-1/9 + sum chi_{-3}(n) n^2 q^{nm}"; break;
        case FormId::E3chiTilde: j["recipe"] = "sum chi_{-3}(m) n^2 q^{nm}"; break;
        case FormId::E4: j["recipe"] = "1/240 + sum sigma_3(n) q^n"; break;
        case FormId::E1: j["recipe"] = "1/6 + sum chi_{-3}(m) q^{nm}"; break;
        case FormId::G2: j["recipe"] = "-1/24 + sum sigma_1(n) q^n"; break;
        case FormId::f1: j["recipe"] = "-E1(z) - 7 E1(2z) + 8 E1(4z)"; break;
        case FormId::f2sec7: j["recipe"] = "E1(z) + (1/2) E1(2z) - (1/2) E1(4z)"; break;
        case FormId::g1hat: j["recipe"] = "Et3(z) + 2 Et3(2z) - 8 Et3(4z)"; break;
        case FormId::f2hat: j["recipe"] = "-E1(z) + 2 E1(2z) + 8 E1(4z)"; break;
    }
    return j.dump();
}

std::string qseries_to_json(const QSeries<Rational>& s) {
    nlohmann::json j;
    {
        std::ostringstream os;
        os << s.lead_exp();
        j["lead_exp"] = os.str();
    }
    std::vector<std::string> coeffs;
    for (long i = 0; i <= s.order(); ++i) {
        std::ostringstream os;
        os << s[i];
        coeffs.push_back(os.str());
    }
    j["coeffs"] = coeffs;
    j["order"] = s.order();
    return j.dump();
}

QSeries<Rational> qseries_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Rational lead(j.at("lead_exp").get<std::string>());
    Rational lead24 = lead * 24;
    if (denominator(lead24) != 1) throw std::invalid_argument("lead exponent must be a multiple of 1/24");
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<std::string>());
    QSeries<Rational> s(numerator(lead24).convert_to<long>(), std::move(c));
    if (s.order() != j.at("order").get<long>()) throw std::invalid_argument("order field mismatch");
    return s;
}

}  // namespace mahler
