#include "mahler/lvalue.hpp"

#include "mahler/quadrature.hpp"

#include <cmath>

namespace mahler {

Real hurwitz_zeta(long s, const Rational& a) {
    if (s < 2) throw std::invalid_argument("hurwitz_zeta requires s >= 2");
    if (!(a > 0)) throw std::invalid_argument("hurwitz_zeta requires a > 0");
    long bits = static_cast<long>(precision_bits());
    // sum_{k<K} (k+a)^{-s} + (K+a)^{1-s}/(s-1) + (K+a)^{-s}/2
    //   + sum_j B_{2j}/(2j)! (s)_{2j-1} (K+a)^{-s-2j+1}
    long K = bits / 2 + 16;
    Real av = to_real(a);
    Real acc(0);
    for (long k = 0; k < K; ++k) acc += 1 / pow_int(av + k, s);
    Real base = av + K;
    acc += pow_int(base, 1 - s) / (s - 1);
    acc += pow_int(base, -s) / 2;

    static thread_local std::vector<Rational> bern;
    std::size_t need = static_cast<std::size_t>(bits) + 64;
    if (bern.size() < need) bern = bernoulli_numbers(need);

    Real rising(s);  // (s)_{2j-1} built incrementally
    Rational fact = 2;  // (2j)!
    Real power = pow_int(base, -s - 1);
    Real inv_base2 = 1 / (base * base);
    Real tol = pow2(-bits - 8);
    for (long j = 1;; ++j) {
        Real term = to_real(bern[static_cast<std::size_t>(2 * j)] / fact) * rising * power;
        acc += term;
        if (abs(term) < tol) break;
        if (2 * j + 2 >= static_cast<long>(need))
            throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin failed to converge");
        // advance to j+1
        rising *= Real(s + 2 * j - 1) * Real(s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        power *= inv_base2;
    }
    return acc;
}

DirichletLResult dirichlet_l(const DirichletChar& chi, long s) {
    if (s < 2) throw std::invalid_argument("dirichlet_l supports s >= 2 only");
    long q = chi.modulus();
    Real acc(0);
    for (long r = 1; r <= q; ++r) {
        int w = chi(r);
        if (w == 0) continue;
        acc += Real(w) * hurwitz_zeta(s, Rational(r, q));
    }
    acc /= pow_int(Real(q), s);
    return {acc, pow2(-static_cast<long>(precision_bits()) + 8)};
}

Real chowla_selberg_omega15() {
    const DirichletChar& chi = DirichletChar::chi_minus15();
    Real prod(1);
    for (long j = 1; j <= 14; ++j) {
        int e = chi(j);
        if (e == 0) continue;
        Real g = gamma_value(to_real(Rational(j, 15)));
        prod *= (e > 0) ? g : 1 / g;
    }
    using boost::multiprecision::pow;
    Real quarter = pow(prod, Real(Rational(1, 4)));
    return quarter / sqrt(30 * pi_value());
}

SymContext make_sym_context() {
    SymContext ctx;
    ctx.pi = pi_value();
    ctx.omega = chowla_selberg_omega15();
    ctx.zeta3 = zeta_value(3);
    ctx.lchi = dirichlet_l(DirichletChar::chi_minus3(), 2).value;
    return ctx;
}

namespace {
struct EisProfile {
    // L(g, s) = (sum_d c_d d^{-s}) * zeta(s) * F(s - shift) with F either
    // zeta or L(chi_-3, .).
    std::vector<std::pair<Rational, long>> bracket;  // (c_d, d)
    bool chi_factor;
    int shift;
};

EisProfile eis_profile(FormId id) {
    switch (id) {
        case FormId::g1w4: return {{{2, 1}, {-32, 2}, {-18, 3}, {288, 6}}, false, 3};
        case FormId::g1w3: return {{{1, 1}, {-2, 2}, {-8, 4}}, true, 2};
        case FormId::g2w3: return {{{-1, 1}, {-7, 2}, {8, 4}}, true, 2};
        case FormId::f1: return {{{-1, 1}, {-7, 2}, {8, 4}}, true, 0};
        default: throw std::invalid_argument("no Eisenstein factorization registered for this form");
    }
}

Real bracket_at(const EisProfile& p, long s) {
    Real acc(0);
    for (const auto& [c, d] : p.bracket) acc += to_real(c) / pow_int(Real(d), s);
    return acc;
}

Real second_factor(const EisProfile& prof, long arg) {
    if (prof.chi_factor) {
        if (arg < 2) throw std::domain_error("Dirichlet factor outside the convergent range");
        return dirichlet_l(DirichletChar::chi_minus3(), arg).value;
    }
    if (arg < 2) throw std::domain_error("zeta factor outside the convergent range");
    return zeta_value(static_cast<unsigned>(arg));
}
}  // namespace

LValueResult lvalue_single(FormId id, int p) {
    Real err = pow2(-static_cast<long>(precision_bits()) + 12);
    if (id == FormId::f15) {
        if (p != 4) throw std::invalid_argument("f15 L-value implemented at p = 4");
        // direct sum with |a_n| <= d(n) n tail bound
        long N = 1 << 20;
        std::vector<long long> a = f15_coefficients(N);
        Real acc(0);
        for (long n = static_cast<long>(N); n >= 1; --n) {
            if (a[static_cast<std::size_t>(n)] == 0) continue;
            acc += Real(a[static_cast<std::size_t>(n)]) / pow_int(Real(n), 4);
        }
        // sum_{n>N} d(n)/n^3 < (2/N^2)(log N + 2)
        Real tail = Real(2) * (log(Real(N)) + 2) / (Real(N) * Real(N));
        return {acc, tail, LValueResult::Method::direct_sum};
    }

    EisProfile prof = eis_profile(id);
    if (p == 1) {
        // bracket(1) * lim_{s->1} zeta(s) F(s - shift); finite only when F
        // vanishes at 1 - shift:
        //   lim zeta(s) zeta(s-3)  = zeta'(-2)  = -zeta(3)/(4 pi^2)
        //   lim zeta(s) L(chi,s-2) = L'(chi,-1) = (3 sqrt3 /4 pi) L(chi,2)
        Real pi = pi_value();
        Real lim;
        if (!prof.chi_factor && prof.shift == 3) {
            lim = -zeta_value(3) / (4 * pi * pi);
        } else if (prof.chi_factor && prof.shift == 2) {
            lim = 3 * sqrt(Real(3)) / (4 * pi) * dirichlet_l(DirichletChar::chi_minus3(), 2).value;
        } else {
            throw std::domain_error("L-function pole at s = 1 is not cancelled for this form");
        }
        return {bracket_at(prof, 1) * lim, err, LValueResult::Method::closed_form};
    }
    if (p >= 2) {
        Real b = bracket_at(prof, p);
        Real second = second_factor(prof, p - prof.shift);
        return {b * zeta_value(static_cast<unsigned>(p)) * second, err, LValueResult::Method::closed_form};
    }
    throw std::invalid_argument("unsupported evaluation point");
}

std::vector<long long> f15_coefficients(long order) {
    std::vector<long long> c = eta3_pair_coefficients(3, 5, order);
    std::vector<long long> d = eta3_pair_coefficients(1, 15, order);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return c;
}

FrickeFit f15_fricke_fit(int sample_count) {
    FormRegistry& reg = FormRegistry::instance();
    Complex first;
    Real spread(0);
    for (int k = 0; k < sample_count; ++k) {
        // points i s with s in [0.25, 1.2]
        Real s = Real(25) / 100 + Real(95) / 100 * Real(k) / Real(sample_count - 1);
        Complex z(Real(0), s);
        Complex w(Real(0), 1 / (15 * s));  // -1/(15 z)
        Complex lhs = reg.value(FormId::f15, w);
        Complex rhs = pow_int(z, 3) * reg.value(FormId::f15, z);
        Complex c = lhs / rhs;
        if (k == 0) {
            first = c;
        } else {
            Real dev = abs(c - first) / abs(first);
            if (dev > spread) spread = dev;
        }
    }
    return {first, spread};
}

LValueResult lvalue_f15_mellin() {
    // Gamma(4)/(2pi)^4 L(f15,4) = int_0^inf f15(it) t^3 dt, split at the
    // Fricke fixed point t0 = 1/sqrt(15); the lower piece maps to
    // (-i c / 15^4) int_{t0}^inf f15(iu) u^{-2} du.
    FrickeFit fit = f15_fricke_fit();
    Real pi = pi_value();
    long bits = static_cast<long>(precision_bits());
    Real t0 = 1 / sqrt(Real(15));
    long terms = static_cast<long>((bits + 32) * 0.6931 / (2 * 3.14159 * 0.2582)) + 4;
    std::vector<long long> a = f15_coefficients(terms);

    // upper piece: sum a_n Gamma(4, 2 pi n t0) / (2 pi n)^4
    Real upper(0);
    for (long n = 1; n <= terms; ++n) {
        if (a[static_cast<std::size_t>(n)] == 0) continue;
        Real x = 2 * pi * n * t0;
        Real g4 = exp(-x) * (6 + 6 * x + 3 * x * x + x * x * x);
        upper += Real(a[static_cast<std::size_t>(n)]) * g4 / pow_int(2 * pi * n, 4);
    }

    // lower piece: int_{t0}^inf u^{-2} e^{-2 pi n u} du = e^{-x}/t0 - 2 pi n E1(x)
    Real lower(0);
    for (long n = 1; n <= terms; ++n) {
        if (a[static_cast<std::size_t>(n)] == 0) continue;
        Real x = 2 * pi * n * t0;
        Real integral = exp(-x) / t0 - 2 * pi * n * exp_integral_e1(x);
        lower += Real(a[static_cast<std::size_t>(n)]) * integral;
    }
    // -i * c is real for the fitted purely imaginary constant
    Complex mic = Complex(Real(0), Real(-1)) * fit.constant;
    Real scale = mic.re / pow_int(Real(15), 4);
    Real total = upper + scale * lower;
    Real value = total * pow_int(2 * pi, 4) / 6;
    Real err = (abs(mic.im) + fit.spread * abs(scale) + pow2(-bits + 16)) * (1 + abs(value));
    return {value, err, LValueResult::Method::mellin_split};
}

SymExpr lvalue_f1_at2_symbolic() {
    // (-1 - 7/4 + 8/16) zeta(2) L(chi,2) with zeta(2) = pi^2/6
    Rational bracket = Rational(-1) - Rational(7, 4) + Rational(1, 2);
    SymMonomial m;
    m.pi = 2;
    m.lchi = 1;
    return SymExpr::term(m, bracket / 6);
}

SymExpr lvalue_f1f2hat_at3_symbolic() {
    // (-3/2 - 5/8 + 19/54 + 3/8 - 35/216 + 1/216) zeta(3) zeta(2)
    Rational bracket = Rational(-3, 2) - Rational(5, 8) + Rational(19, 54) + Rational(24, 64) -
                       Rational(35, 216) + Rational(8, 1728);
    SymMonomial m;
    m.pi = 2;
    m.zeta3 = 1;
    return SymExpr::term(m, bracket / 6);
}

}  // namespace mahler
