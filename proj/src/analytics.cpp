#include "mahler/analytics.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace mahler {

void Config::validate() const {
    if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");
    if (series_order < 16) throw std::invalid_argument("series_order must be >= 16");
    if (output != "text" && output != "json" && output != "csv")
        throw std::invalid_argument("output must be text, json or csv");
}

namespace {
// sqrt of a series with constant term 1.
QSeries<Rational> sqrt_series(const QSeries<Rational>& u) {
    if (u.lead24() != 0 || u[0] != 1) throw std::invalid_argument("sqrt_series needs constant term 1");
    long n = u.order();
    std::vector<Rational> y(static_cast<std::size_t>(n) + 1, Rational(0));
    y[0] = 1;
    for (long k = 1; k <= n; ++k) {
        Rational acc = u[k];
        for (long j = 1; j < k; ++j) acc -= y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k - j)];
        y[static_cast<std::size_t>(k)] = acc / 2;
    }
    return QSeries<Rational>(0, std::move(y));
}

SymExpr sym_sqrt5_omega2_over_pi(const Rational& c) {
    SymMonomial m;
    m.rad = 5;
    m.omega = 2;
    m.pi = -1;
    return SymExpr::term(m, c);
}

SymExpr sym_sqrt5_over_pi3_omega2(const Rational& c) {
    SymMonomial m;
    m.rad = 5;
    m.omega = -2;
    m.pi = -3;
    return SymExpr::term(m, c);
}

QRat qrat_one_over_t() { return QRat(QPoly{Rational(1)}, QPoly{Rational(0), Rational(1)}); }
QRat qrat_one_over_1mt() { return QRat(QPoly{Rational(1)}, QPoly{Rational(1), Rational(-1)}); }

// Real part with an imaginary-residue sanity check.
Real real_part_checked(const Complex& z, const char* what) {
    Real az = abs(z);
    if (az > 0 && abs(z.im) > az * pow2(-static_cast<long>(precision_bits()) / 2))
        throw std::runtime_error(std::string("unexpected imaginary part in ") + what);
    return z.re;
}
}  // namespace

CmConstants cm_constants(const QuadratureSpec& spec) {
    FormRegistry& reg = FormRegistry::instance();
    Real pi = pi_value();
    Real omega = chowla_selberg_omega15();
    Real sqrt5 = sqrt(Real(5));

    CmConstants out;
    out.a_star_1 = 3 * sqrt5 * omega * omega / (2 * pi);
    out.theta_a_star_1 = -3 * sqrt5 * omega * omega / (10 * pi);
    out.theta2_a_star_1 = sqrt5 / 150 * (13 * omega * omega / pi - 2 / (pi * pi * pi * omega * omega));

    Real err_total(0);

    // --- n = 2: c0 = (18/sqrt3) int_0^inf f^3 t (1-9t)(1-t) at z = is ---
    {
        Real s1 = Real(Rational(7, 20));  // 0.35
        Real delta = Real(Rational(1, 50));
        auto integrand = [&](const Real& s) -> Real {
            Complex z(Real(0), s);
            Real t = real_part_checked(reg.value(FormId::t2, z), "t2 on the imaginary axis");
            Real f = real_part_checked(reg.value(FormId::f2, z), "f2 on the imaginary axis");
            return f * f * f * t * (1 - 9 * t) * (1 - t);
        };
        QuadResult low = integrate(spec, integrand, delta, s1);
        // closed-form tail: G = f^3 t (1-9t)(1-t) termwise, int_{s1}^inf e^{-2 pi n s} ds
        long tail_order = 224;
        QSeries<Rational> t = reg.expansion(FormId::t2, tail_order + 1);
        QSeries<Rational> f = reg.expansion(FormId::f2, tail_order + 1);
        QSeries<Rational> one = QSeries<Rational>::one(tail_order + 1);
        QSeries<Rational> G =
            f * f * f * t * (one - scale_rational(Rational(9), t)) * (one - t);
        Real tail(0);
        long lead = G.lead24() / 24;
        for (long i = 0; i <= G.order(); ++i) {
            long n = lead + i;
            if (n < 1 || G[i] == 0) continue;
            tail += to_real(G[i]) * exp(-2 * pi * n * s1) / (2 * pi * n);
        }
        Real scale = 18 / sqrt(Real(3));
        out.c0_n2 = scale * (low.value + tail);
        // below delta the integrand is dominated by e^{-pi/(3 s)} s^{-3}
        err_total += scale * (low.error_bound + pow2(-220));
    }

    // --- n = 3 family at z = 1/2 + i s, s from sqrt(15)/6 ---
    {
        Real s0 = sqrt(Real(15)) / 6;
        Real s1 = Real(Rational(9, 10));
        auto path_point = [&](const Real& s) {
            Complex z(Real(Rational(1, 2)), s);
            FormRegistry::L3Point p = reg.l3_point(z);
            Real t = real_part_checked(p.t, "t3 on the CM line");
            Real f = real_part_checked(p.f, "f3 on the CM line");
            Real rad = (1 - 4 * t) * (1 - 16 * t);
            if (rad < 0) {
                if (rad < -pow2(-static_cast<long>(precision_bits()) / 2))
                    throw std::runtime_error("branch monitor: radicand negative on the CM line");
                rad = 0;
            }
            return std::make_tuple(t, f, Real(sqrt(rad)));
        };
        auto integrand0 = [&](const Real& s) -> Real {
            auto [t, f, root] = path_point(s);
            return s * f * f * t * root;
        };
        auto integrand1 = [&](const Real& s) -> Real {
            auto [t, f, root] = path_point(s);
            return s * f * f * (64 * t - 4) * t * root;
        };
        QuadResult low0 = integrate(spec, integrand0, s0, s1);
        QuadResult low1 = integrate(spec, integrand1, s0, s1);

        long tail_order = 224;
        QSeries<Rational> t = reg.expansion(FormId::t3, tail_order + 1);
        QSeries<Rational> f = reg.expansion(FormId::f3, tail_order + 1);
        QSeries<Rational> one = QSeries<Rational>::one(tail_order + 1);
        QSeries<Rational> rad = (one - scale_rational(Rational(4), t)) * (one - scale_rational(Rational(16), t));
        QSeries<Rational> root = sqrt_series(rad);
        QSeries<Rational> H0 = f * f * t * root;
        QSeries<Rational> H1 = f * f * (scale_rational(Rational(64), t) - scale_rational(Rational(4), one)) * t * root;
        auto tail_weighted = [&](const QSeries<Rational>& G) {
            // q = -e^{-2 pi s}: coefficient n gets (-1)^n; int_{s1}^inf s e^{-2 pi n s} ds
            Real acc(0);
            long lead = G.lead24() / 24;
            for (long i = 0; i <= G.order(); ++i) {
                long n = lead + i;
                if (n < 1 || G[i] == 0) continue;
                Real w = exp(-2 * pi * n * s1) * (s1 / (2 * pi * n) + 1 / pow_int(2 * pi * n, 2));
                Real term = to_real(G[i]) * w;
                acc += (n % 2 == 0) ? term : -term;
            }
            return acc;
        };
        out.c0_n3 = 96 * (low0.value + tail_weighted(H0));
        out.c1_minus_4c0 = 96 * (low1.value + tail_weighted(H1));
        err_total += 96 * (low0.error_bound + low1.error_bound + pow2(-200));
    }

    out.quad_error = err_total;
    return out;
}

QuadResult c1_minus_3c0_n2(const QuadratureSpec& spec) {
    FormRegistry& reg = FormRegistry::instance();
    Real pi = pi_value();
    Real s1 = Real(Rational(7, 20));
    Real delta = Real(Rational(1, 50));
    auto integrand = [&](const Real& s) -> Real {
        Complex z(Real(0), s);
        Real t = real_part_checked(reg.value(FormId::t2, z), "t2");
        Real f = real_part_checked(reg.value(FormId::f2, z), "f2");
        return (9 * t - 3) * f * f * f * t * (1 - 9 * t) * (1 - t);
    };
    QuadResult low = integrate(spec, integrand, delta, s1);
    long tail_order = 224;
    QSeries<Rational> t = reg.expansion(FormId::t2, tail_order + 1);
    QSeries<Rational> f = reg.expansion(FormId::f2, tail_order + 1);
    QSeries<Rational> one = QSeries<Rational>::one(tail_order + 1);
    QSeries<Rational> G = (scale_rational(Rational(9), t) - scale_rational(Rational(3), one)) * f * f * f * t *
                          (one - scale_rational(Rational(9), t)) * (one - t);
    Real tail(0);
    long lead = G.lead24() / 24;
    for (long i = 0; i <= G.order(); ++i) {
        long n = lead + i;
        if (n < 1 || G[i] == 0) continue;
        tail += to_real(G[i]) * exp(-2 * pi * n * s1) / (2 * pi * n);
    }
    Real scale = 18 / sqrt(Real(3));
    return {scale * (low.value + tail), scale * low.error_bound + pow2(-200)};
}

Thm2Solution thm2_solution(long order) {
    Thm2Solution sol;
    sol.phi = solve_nonhomogeneous(op_L3(), QSeries<Rational>::zero(order), 1, order);
    QRat rhs1(QPoly{Rational(0), Rational(-13), Rational(251), Rational(212)},
              QPoly{Rational(1), Rational(-3), Rational(3), Rational(-1)});
    QRat rhs2(QPoly{Rational(0), Rational(1)}, QPoly{Rational(1), Rational(-1)});
    sol.psi1 = solve_nonhomogeneous(op_L3(), laurent_at_zero(rhs1, order), 0, order);
    sol.psi2 = solve_nonhomogeneous(op_L3(), laurent_at_zero(rhs2, order), 0, order);
    sol.C1 = sym_sqrt5_omega2_over_pi(Rational(-3, 10));
    sol.C2 = sym_sqrt5_over_pi3_omega2(Rational(3, 5));
    return sol;
}

Real cor2_pointwise_residual(const Complex& z0, long order) {
    if (!(z0.im >= 1)) throw std::domain_error("cor2_pointwise_residual requires Im(z0) >= 1");
    FormRegistry& reg = FormRegistry::instance();
    SymContext ctx = make_sym_context();
    Thm2Solution sol = thm2_solution(order);
    Real C1 = sol.C1.eval(ctx), C2 = sol.C2.eval(ctx);

    Complex t0 = reg.value(FormId::t3, z0);
    Complex f0 = reg.value(FormId::f3, z0);

    // left side: b(t(z0)) by direct series summation
    Complex lhs(Real(0));
    for (long n = sol.phi.order(); n >= 0; --n) {
        Real bn = to_real(Rational(4, 5) * sol.phi[n]) + C1 * to_real(sol.psi1[n]) + C2 * to_real(sol.psi2[n]);
        lhs = lhs * t0 + Complex(bn);
    }

    // right side: (4/5) f + f D^{-3}(C1 g3 + C2 g2) at z0 from q-expansions
    QSeries<Rational> g2 = reg.expansion(FormId::g2w4, order);
    QSeries<Rational> g3 = reg.expansion(FormId::g3w4, order);
    Real twopi = 2 * pi_value();
    Complex q = exp(Complex(-twopi * z0.im, twopi * z0.re));
    auto d_inv3_sum = [&](const QSeries<Rational>& g) {
        long lead = g.lead24() / 24;
        Complex acc(Real(0));
        for (long i = g.order(); i >= 0; --i) {
            acc = acc * q;
            long n = lead + i;
            if (n >= 1 && g[i] != 0) acc += Complex(to_real(g[i]) / pow_int(Real(n), 3));
        }
        return acc * pow_int(q, lead);
    };
    Complex s3 = Real(C1) * d_inv3_sum(g3) + Real(C2) * d_inv3_sum(g2);
    Complex rhs = to_real(Rational(4, 5)) * f0 + f0 * s3;
    return abs(lhs - rhs);
}

MomentRhs moment_case(const std::string& name) {
    if (name == "toy") {
        ThetaOp op = ThetaOp::term(0, 1, 1);  // theta
        EndpointData a{Rational(0), {SymExpr(1)}, false};
        EndpointData b{Rational(1), {SymExpr(1)}, false};
        return moment_rhs(op, a, b, SymRatFunc());
    }
    if (name == "thm1") {
        EndpointData a{Rational(0), {SymExpr(0), SymExpr(0)}, false};
        SymMonomial pim2;
        pim2.pi = -2;
        EndpointData b{Rational(1), {SymExpr(0), SymExpr::term(pim2, Rational(-3, 4))}, true};
        SymRatFunc minus = sym_times(SymExpr::term(pim2, Rational(-6)), qrat_one_over_t());
        return moment_rhs(op_L2_tilde(), a, b, minus);
    }
    if (name == "thm2") {
        EndpointData a{Rational(0), {SymExpr(0), SymExpr(0), SymExpr(0)}, false};
        SymExpr astar = sym_sqrt5_omega2_over_pi(Rational(3, 2));
        SymExpr th_astar = sym_sqrt5_omega2_over_pi(Rational(-3, 10));
        SymExpr th2_astar = sym_sqrt5_omega2_over_pi(Rational(13, 150)) + sym_sqrt5_over_pi3_omega2(Rational(-1, 75));
        EndpointData b{Rational(1), {astar, th_astar, th2_astar}, false};
        SymExpr minus_c = sym_sqrt5_omega2_over_pi(Rational(39, 10)) + sym_sqrt5_over_pi3_omega2(Rational(3, 5));
        SymRatFunc minus = sym_times(minus_c, qrat_one_over_t());
        return moment_rhs(op_L3_tilde(), a, b, minus);
    }
    throw std::invalid_argument("moment_case supports toy, thm1, thm2");
}

SymRatFunc moment_case_rhs_b(const std::string& name) {
    const ThetaOp& tilde = name == "thm1" ? op_L2_tilde() : op_L3_tilde();
    const ThetaOp& plain = name == "thm1" ? op_L2() : op_L3();
    if (name != "thm1" && name != "thm2") throw std::invalid_argument("rhs_b supports thm1, thm2");
    // sigma with L~(1/t,-theta-1) = sigma t^{-2} L(t,theta)
    ThetaOpDual d = tilde.dual();
    Rational sigma;
    if (d.op == plain)
        sigma = 1;
    else if (d.op == Rational(-1) * plain)
        sigma = -1;
    else
        throw std::runtime_error("dual operator does not match the companion operator");
    MomentRhs mr = moment_case(name);
    QRat t2(QPoly{Rational(0), Rational(0), Rational(1)}, QPoly{Rational(1)});
    return SymExpr(Rational(-1) * sigma) * (t2 * mr.h);
}

std::string report_json(const std::vector<CheckRow>& rows, const Config& cfg) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["precision_bits"] = cfg.precision_bits;
    j["series_order"] = cfg.series_order;
    nlohmann::json checks = nlohmann::json::array();
    int passed = 0;
    for (const auto& r : rows) {
        nlohmann::json c;
        c["check"] = r.name;
        c["criterion"] = r.criterion;
        c["kind"] = r.exact ? "exact" : "numeric";
        c["computed"] = r.computed;
        c["target"] = r.target;
        c["tolerance"] = r.tolerance;
        c["abs_error"] = r.abs_error;
        c["pass"] = r.pass;
        checks.push_back(c);
        if (r.pass) ++passed;
    }
    j["checks"] = checks;
    j["passed"] = passed;
    j["failed"] = static_cast<int>(rows.size()) - passed;
    return j.dump(2);
}

std::string report_csv(const std::vector<CheckRow>& rows) {
    std::ostringstream os;
    os << "check,criterion,kind,pass,abs_error,tolerance,computed,target\n";
    for (const auto& r : rows) {
        auto esc = [](std::string s) {
            for (auto& ch : s)
                if (ch == ',') ch = ';';
            return s;
        };
        os << esc(r.name) << "," << r.criterion << "," << (r.exact ? "exact" : "numeric") << ","
           << (r.pass ? "1" : "0") << "," << r.abs_error << "," << r.tolerance << "," << esc(r.computed) << ","
           << esc(r.target) << "\n";
    }
    return os.str();
}

std::string report_text(const std::vector<CheckRow>& rows) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : rows) {
        os << (r.pass ? "PASS" : "FAIL") << "  [criterion " << r.criterion << "] " << r.name;
        if (!r.exact) os << "  (|err| = " << r.abs_error << ", tol = " << r.tolerance << ")";
        os << "\n";
        if (!r.pass) os << "      computed: " << r.computed << "\n      target:   " << r.target << "\n";
        if (r.pass) ++passed;
    }
    os << passed << "/" << rows.size() << " checks passed\n";
    return os.str();
}

int report_exit_code(const std::vector<CheckRow>& rows) {
    bool exact_fail = false, numeric_fail = false;
    for (const auto& r : rows) {
        if (!r.pass) (r.exact ? exact_fail : numeric_fail) = true;
    }
    if (exact_fail) return 3;
    if (numeric_fail) return 2;
    return 0;
}

}  // namespace mahler
