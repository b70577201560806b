#include "mahler/double_l.hpp"

namespace mahler {

namespace {
// Gamma(k, x) = e^{-x} (k-1)! sum_{i<k} x^i/i! for small integer k.
Real inc_gamma_int(int k, const Real& x) {
    Real fact(1);
    for (int i = 2; i < k; ++i) fact *= i;
    Real sum(1), term(1);
    for (int i = 1; i < k; ++i) {
        term *= x / i;
        sum += term;
    }
    return exp(-x) * fact * sum;
}

long series_cutoff(const Real& split, long bits) {
    // e^{-2 pi split K} < 2^{-bits-24}
    double sp = split.convert_to<double>();
    return static_cast<long>((bits + 24) * 0.6931 / (6.2831 * sp)) + 4;
}

std::vector<Real> coeffs_real(const QSeries<Rational>& s, long upto) {
    // absolute coefficients indexed by exponent 0..upto
    std::vector<Real> c(static_cast<std::size_t>(upto) + 1, Real(0));
    long lead = s.lead24() / 24;
    for (long i = 0; i <= s.order(); ++i) {
        long e = lead + i;
        if (e >= 0 && e <= upto) c[static_cast<std::size_t>(e)] = to_real(s[i]);
    }
    return c;
}

// Fit f on [0, b] at Chebyshev points; n chosen for the root-exponential
// regime of cusp-flat integrands.
ChebSeries fit_form(const std::function<Real(const Real&)>& f, const Real& b, int n) {
    return ChebSeries::fit(f, Real(0), b, n);
}
}  // namespace

Real holo_integrand_magnitude(FormId inner, FormId outer, int s1, int s2, const Real& t,
                              const QuadratureSpec& spec) {
    FormRegistry& reg = FormRegistry::instance();
    long bits = static_cast<long>(precision_bits());
    Real sstar = spec.split_point;
    long K = series_cutoff(sstar, bits);
    QSeries<Rational> in_series = reg.expansion(inner, K + 2);
    std::vector<Real> a = coeffs_real(in_series, K);
    Real twopi = 2 * pi_value();
    // I(t) = int_t^inf v^{s1-1} inner(iv) dv termwise (t is in the series range
    // only for the check at moderate t; for tiny t we use I <= I(0.1) scale)
    Real eval_at = t < Real(Rational(1, 10)) ? Real(Rational(1, 10)) : t;
    Real I(0);
    for (long n = 1; n <= K; ++n) {
        if (a[static_cast<std::size_t>(n)] == 0) continue;
        Real x = twopi * n * eval_at;
        I += a[static_cast<std::size_t>(n)] * inc_gamma_int(s1, x) / pow_int(twopi * n, s1);
    }
    Complex oz = reg.value(outer, Complex(Real(0), t));
    return pow_int(t, s2 - 1) * abs(oz) * abs(I);
}

namespace {
struct HoloContext {
    FormId inner, outer;
    Real sstar;
    int cheb_n;
    long K;
    std::vector<Real> a, b;  // inner/outer coefficients
    ChebSeries in_fit, out_fit;
    Real fit_resid;
};

HoloContext make_holo_context(FormId inner, FormId outer, const QuadratureSpec& spec, int cheb_n) {
    FormRegistry& reg = FormRegistry::instance();
    long bits = static_cast<long>(precision_bits());
    HoloContext ctx;
    ctx.inner = inner;
    ctx.outer = outer;
    ctx.sstar = spec.split_point;
    ctx.cheb_n = cheb_n;
    ctx.K = series_cutoff(ctx.sstar, bits);
    ctx.a = coeffs_real(reg.expansion(inner, ctx.K + 2), ctx.K);
    ctx.b = coeffs_real(reg.expansion(outer, ctx.K + 2), ctx.K);
    auto in_f = [&](const Real& s) -> Real {
        if (s == 0) return Real(0);  // both level-12 weight-3 forms vanish at the cusp 0
        return reg.value(inner, Complex(Real(0), s)).re;
    };
    auto out_f = [&](const Real& s) -> Real {
        if (s == 0) return Real(0);
        return reg.value(outer, Complex(Real(0), s)).re;
    };
    ctx.in_fit = fit_form(in_f, ctx.sstar, cheb_n);
    ctx.out_fit = fit_form(out_f, ctx.sstar, cheb_n);
    // residual probe at off-grid points
    Real resid(0);
    for (int k = 1; k <= 7; ++k) {
        Real x = ctx.sstar * k / Real(7.31);
        Real d1 = abs(ctx.in_fit.eval(x) - in_f(x));
        Real d2 = abs(ctx.out_fit.eval(x) - out_f(x));
        if (d1 > resid) resid = d1;
        if (d2 > resid) resid = d2;
    }
    ctx.fit_resid = resid + ctx.in_fit.tail_bound(4) + ctx.out_fit.tail_bound(4);
    return ctx;
}

// Lambda(s1, s2) for one context.
Real lambda_value(const HoloContext& ctx, int s1, int s2, Real& err_out) {
    Real twopi = 2 * pi_value();
    const Real& sstar = ctx.sstar;

    // ---- tail part: t in [sstar, inf), double q-sum with incomplete gammas
    Real tail(0);
    for (long n = 1; n <= ctx.K; ++n) {
        if (ctx.a[static_cast<std::size_t>(n)] == 0) continue;
        Real cn = twopi * n;
        // Gamma(s1, cn t)/cn^{s1} = e^{-cn t} (s1-1)! sum_i (cn t)^i / i! / cn^{s1}
        for (long m = 0; m + n <= ctx.K && m <= ctx.K; ++m) {
            if (ctx.b[static_cast<std::size_t>(m)] == 0) continue;
            Real cmn = twopi * (m + n);
            Real piece(0);
            Real fact(1);
            for (int i = 2; i < s1; ++i) fact *= i;
            Real ipow(1);  // cn^i / i!
            for (int i = 0; i < s1; ++i) {
                // integral int_{sstar}^inf t^{s2-1+i} e^{-cmn t} dt
                Real integral = inc_gamma_int(s2 + i, cmn * sstar) / pow_int(cmn, s2 + i);
                piece += fact * ipow * integral;
                ipow = ipow * cn / (i + 1);
            }
            tail += ctx.a[static_cast<std::size_t>(n)] * ctx.b[static_cast<std::size_t>(m)] * piece /
                    pow_int(cn, s1);
        }
    }

    // ---- inner integral constant at sstar
    Real I_star(0);
    for (long n = 1; n <= ctx.K; ++n) {
        if (ctx.a[static_cast<std::size_t>(n)] == 0) continue;
        Real x = twopi * n * sstar;
        I_star += ctx.a[static_cast<std::size_t>(n)] * inc_gamma_int(s1, x) / pow_int(twopi * n, s1);
    }

    // ---- head part on [0, sstar]: I(t) = I_star + int_t^{sstar} v^{s1-1} P_in(v) dv
    ChebSeries vpow = ChebSeries::constant(Real(0), sstar, Real(1));
    ChebSeries ident = ChebSeries::identity(Real(0), sstar);
    for (int i = 0; i < s1 - 1; ++i) vpow = vpow.multiply(ident);
    ChebSeries inner_int = vpow.multiply(ctx.in_fit);
    ChebSeries F = inner_int.antiderivative(sstar);  // F(t) = int_{sstar}^{t}, so I = I_star - F
    ChebSeries I_full = F.scaled(Real(-1));
    I_full.add_constant(I_star);

    ChebSeries tpow = ChebSeries::constant(Real(0), sstar, Real(1));
    for (int i = 0; i < s2 - 1; ++i) tpow = tpow.multiply(ident);
    ChebSeries head_integrand = tpow.multiply(ctx.out_fit).multiply(I_full);
    Real head = head_integrand.definite_integral();

    // error model: fit residuals propagated through the integrals plus the
    // (generously padded) series cutoff
    Real Imax = abs(I_star) + inner_int.tail_bound(static_cast<int>(ctx.in_fit.coefficients().size())) + 1;
    Real bmax(0);
    for (const Real& c : ctx.out_fit.coefficients()) bmax += abs(c);
    err_out = ctx.fit_resid * sstar * (Imax + bmax) * 4 + pow2(-static_cast<long>(precision_bits()) + 20);
    return head + tail;
}
}  // namespace

LValueResult double_l_holo(FormId inner, FormId outer, int p, int s2, const QuadratureSpec& spec) {
    if (p < 1) throw std::invalid_argument("double_l_holo requires p >= 1");
    {
        QSeries<Rational> s = FormRegistry::instance().expansion(inner, 2);
        if (s.lead24() <= 0 && s.coeff_at24(0) != 0)
            throw std::domain_error("inner form must vanish at infinity");
    }
    if (s2 <= 0) return {Real(0), Real(0), LValueResult::Method::nested_quadrature};

    int n1 = 320, n2 = 480;  // two resolutions; their gap feeds the bound
    HoloContext c1 = make_holo_context(inner, outer, spec, n1);
    HoloContext c2 = make_holo_context(inner, outer, spec, n2);

    Real total1(0), total2(0), err(0);
    for (int m = 0; m < p; ++m) {
        Real e1(0), e2(0);
        total1 += lambda_value(c1, p - m, s2 + m, e1);
        total2 += lambda_value(c2, p - m, s2 + m, e2);
        err += e2;
    }
    Real twopi = 2 * pi_value();
    Real fact_p(1);
    for (int i = 2; i < p; ++i) fact_p *= i;
    Real fact_s(1);
    for (int i = 2; i < s2; ++i) fact_s *= i;
    Real scale = pow_int(twopi, p + s2) / (fact_p * fact_s);
    Real v1 = total1 * scale, v2 = total2 * scale;
    Real bound = abs(v2 - v1) * 4 + err * scale;
    return {v2, bound, LValueResult::Method::nested_quadrature};
}

namespace {
struct MeromContext {
    int j;
    Real sstar;
    long K;
    std::vector<Real> c;  // g_j coefficients (with poles: exponential growth)
    std::vector<Real> b;  // g1 coefficients
    ChebSeries g1_fit, gj_fit;
    Real fit_resid;
};

MeromContext make_merom_context(int j, const QuadratureSpec& spec, int cheb_n) {
    if (j != 2 && j != 3) throw std::invalid_argument("double_l_merom supports j in {2,3}");
    FormRegistry& reg = FormRegistry::instance();
    MeromContext ctx;
    ctx.j = j;
    ctx.sstar = spec.split_point;
    ctx.K = spec.tail_order;
    FormId gj = j == 2 ? FormId::g2w4 : FormId::g3w4;
    ctx.c = coeffs_real(reg.expansion(gj, ctx.K + 2), ctx.K);
    ctx.b = coeffs_real(reg.expansion(FormId::g1w4, ctx.K + 2), ctx.K);

    auto gj_f = [&, gj](const Real& s) -> Real {
        if (s == 0) return Real(0);
        return reg.value(gj, Complex(Real(0), s)).re;
    };
    auto g1_f = [&](const Real& s) -> Real {
        if (s == 0) return Real(0);
        return reg.value(FormId::g1w4, Complex(Real(0), s)).re;
    };
    ctx.gj_fit = fit_form(gj_f, ctx.sstar, cheb_n);
    ctx.g1_fit = fit_form(g1_f, ctx.sstar, cheb_n);
    Real resid(0);
    for (int k = 1; k <= 7; ++k) {
        Real x = ctx.sstar * k / Real(7.31);
        Real d1 = abs(ctx.gj_fit.eval(x) - gj_f(x));
        Real d2 = abs(ctx.g1_fit.eval(x) - g1_f(x));
        if (d1 > resid) resid = d1;
        if (d2 > resid) resid = d2;
    }
    ctx.fit_resid = resid;
    return ctx;
}

// (2 pi)^{-4} L for one resolution; the error in the series tails is padded in
// the caller via the resolution gap.
Real merom_value(const MeromContext& ctx, Real& err_out) {
    Real twopi = 2 * pi_value();
    const Real& sstar = ctx.sstar;

    // series data at sstar: T0 = A3(sstar), T1 = A2(sstar), T2 = A1(sstar)/2
    Real T0(0), T1(0), T2(0), ratio_probe(0);
    Real last_term(0);
    for (long n = 1; n <= ctx.K; ++n) {
        if (ctx.c[static_cast<std::size_t>(n)] == 0) continue;
        Real e = exp(-twopi * n * sstar) * ctx.c[static_cast<std::size_t>(n)];
        Real cn = twopi * n;
        T0 += e / (cn * cn * cn);
        T1 += e / (cn * cn);
        T2 += e / (2 * cn);
        last_term = abs(e);
    }
    ratio_probe = last_term;  // magnitude of the final kept term

    // A3 on [0, sstar] = Q3(s) + T0 + T1 (sstar - s) + T2 (sstar - s)^2
    ChebSeries Q1 = ctx.gj_fit.antiderivative(sstar).scaled(Real(-1));  // int_s^{sstar} gj
    ChebSeries Q2 = Q1.antiderivative(sstar).scaled(Real(-1));
    ChebSeries Q3 = Q2.antiderivative(sstar).scaled(Real(-1));
    ChebSeries smin = ChebSeries::identity(Real(0), sstar).scaled(Real(-1));
    smin.add_constant(sstar);  // (sstar - s)
    ChebSeries A3 = Q3 + smin.scaled(T1) + smin.multiply(smin).scaled(T2);
    A3.add_constant(T0);

    Real head = ctx.g1_fit.multiply(A3).definite_integral();

    // outer tail: sum_{m>=0,n>=1} b_m c_n e^{-2pi(m+n) sstar} / ((2pi n)^3 2pi (m+n))
    Real tail(0);
    for (long n = 1; n <= ctx.K; ++n) {
        if (ctx.c[static_cast<std::size_t>(n)] == 0) continue;
        Real cn3 = pow_int(twopi * n, 3);
        for (long m = 0; m + n <= ctx.K; ++m) {
            if (ctx.b[static_cast<std::size_t>(m)] == 0) continue;
            Real e = exp(-twopi * (m + n) * sstar);
            tail += ctx.b[static_cast<std::size_t>(m)] * ctx.c[static_cast<std::size_t>(n)] * e /
                    (cn3 * twopi * (m + n));
        }
    }

    err_out = ctx.fit_resid * sstar * 8 + ratio_probe + pow2(-static_cast<long>(precision_bits()) + 24);
    return head + tail;
}
}  // namespace

LValueResult double_l_merom(int j, const QuadratureSpec& spec) {
    // runtime pole check: t is negative on the imaginary axis, away from t=1
    {
        FormRegistry& reg = FormRegistry::instance();
        for (int k = 1; k <= 4; ++k) {
            Complex t = reg.l3_point(Complex(Real(0), Real(k) / 2)).t;
            if (!(t.re < Real(Rational(1, 2)))) throw std::runtime_error("t(is) unexpectedly close to 1");
        }
    }
    int n1 = 360, n2 = 540;
    MeromContext c1 = make_merom_context(j, spec, n1);
    MeromContext c2 = make_merom_context(j, spec, n2);
    Real e1(0), e2(0);
    Real v1 = merom_value(c1, e1);
    Real v2 = merom_value(c2, e2);
    Real scale = pow_int(2 * pi_value(), 4);
    Real value = v2 * scale;
    Real bound = abs(v2 - v1) * scale * 4 + e2 * scale;
    return {value, bound, LValueResult::Method::nested_quadrature};
}

}  // namespace mahler
