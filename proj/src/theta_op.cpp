#include "mahler/theta_op.hpp"

#include <sstream>

namespace mahler {

void ThetaOp::add(long i, long j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("ThetaOp exponents must be nonnegative");
    if (c == 0) return;
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1);
    auto& row = c_[static_cast<std::size_t>(i)];
    if (static_cast<std::size_t>(j) >= row.size()) row.resize(static_cast<std::size_t>(j) + 1, Rational(0));
    row[static_cast<std::size_t>(j)] += c;
}

Rational ThetaOp::coeff(long i, long j) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    const auto& row = c_[static_cast<std::size_t>(i)];
    if (j < 0 || static_cast<std::size_t>(j) >= row.size()) return 0;
    return row[static_cast<std::size_t>(j)];
}

long ThetaOp::theta_degree() const {
    long n = 0;
    for (const auto& row : c_)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) n = std::max<long>(n, static_cast<long>(j));
    return n;
}

ThetaOp& ThetaOp::operator+=(const ThetaOp& o) {
    for (long i = 0; i <= o.var_degree(); ++i)
        for (std::size_t j = 0; j < o.c_[static_cast<std::size_t>(i)].size(); ++j)
            add(i, static_cast<long>(j), o.c_[static_cast<std::size_t>(i)][j]);
    return *this;
}

ThetaOp operator-(const ThetaOp& a) { return Rational(-1) * a; }

ThetaOp operator*(const Rational& s, const ThetaOp& a) {
    ThetaOp out;
    for (long i = 0; i <= a.var_degree(); ++i)
        for (std::size_t j = 0; j < a.c_[static_cast<std::size_t>(i)].size(); ++j)
            out.add(i, static_cast<long>(j), s * a.c_[static_cast<std::size_t>(i)][j]);
    return out;
}

ThetaOp operator*(const ThetaOp& a, const ThetaOp& b) {
    // (t^i theta^j)(t^k theta^l) = t^{i+k} (theta+k)^j theta^l
    ThetaOp out;
    for (long i = 0; i <= a.var_degree(); ++i)
        for (std::size_t j = 0; j < a.c_[static_cast<std::size_t>(i)].size(); ++j) {
            const Rational& ca = a.c_[static_cast<std::size_t>(i)][j];
            if (ca == 0) continue;
            for (long k = 0; k <= b.var_degree(); ++k)
                for (std::size_t l = 0; l < b.c_[static_cast<std::size_t>(k)].size(); ++l) {
                    const Rational& cb = b.c_[static_cast<std::size_t>(k)][l];
                    if (cb == 0) continue;
                    // expand (theta + k)^j
                    for (std::size_t s = 0; s <= j; ++s) {
                        Rational binc = binomial_coefficient(static_cast<long>(j), static_cast<long>(s));
                        Rational kpow = 1;
                        for (std::size_t r = 0; r < j - s; ++r) kpow *= k;
                        out.add(i + k, static_cast<long>(s + l), ca * cb * binc * kpow);
                    }
                }
        }
    return out;
}

bool operator==(const ThetaOp& a, const ThetaOp& b) {
    long m = std::max(a.var_degree(), b.var_degree());
    long n = std::max(a.theta_degree(), b.theta_degree());
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n; ++j)
            if (a.coeff(i, j) != b.coeff(i, j)) return false;
    return true;
}

QPoly ThetaOp::indicial(long i) const {
    std::vector<Rational> v;
    if (i >= 0 && static_cast<std::size_t>(i) < c_.size()) v = c_[static_cast<std::size_t>(i)];
    return QPoly(std::move(v));
}

ThetaOp ThetaOp::section(long k) const {
    ThetaOp out;
    for (long i = 0; i <= var_degree(); ++i)
        for (std::size_t j = 0; j < c_[static_cast<std::size_t>(i)].size(); ++j)
            if (static_cast<long>(j) >= k) out.add(i, static_cast<long>(j) - k, c_[static_cast<std::size_t>(i)][j]);
    return out;
}

ThetaOpDual ThetaOp::dual() const {
    // t^M * L(1/t, -theta-1): each t^{-i} (-theta-1)^j becomes
    // t^{M-i} (-1)^j (theta+1)^j, all multiplications from the left.
    long m = var_degree();
    ThetaOp out;
    for (long i = 0; i <= m; ++i)
        for (std::size_t j = 0; j < c_[static_cast<std::size_t>(i)].size(); ++j) {
            const Rational& c = c_[static_cast<std::size_t>(i)][j];
            if (c == 0) continue;
            int sign = (j % 2 == 0) ? 1 : -1;
            for (std::size_t s = 0; s <= j; ++s)
                out.add(m - i, static_cast<long>(s),
                        Rational(sign) * c * binomial_coefficient(static_cast<long>(j), static_cast<long>(s)));
        }
    return ThetaOpDual{m, out};
}

bool ThetaOp::is_mum_at_zero() const {
    QPoly p = indicial(0);
    long n = theta_degree();
    if (p.degree() != n) return false;
    for (long j = 0; j < n; ++j)
        if (p[j] != 0) return false;
    return true;
}

std::string ThetaOp::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= var_degree(); ++i)
        for (std::size_t j = 0; j < c_[static_cast<std::size_t>(i)].size(); ++j) {
            const Rational& c = c_[static_cast<std::size_t>(i)][j];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) os << "*theta" << (j > 1 ? "^" + std::to_string(j) : "");
        }
    if (first) os << "0";
    return os.str();
}

namespace {
ThetaOp make_L2() {
    ThetaOp op;
    op.add(0, 2, 1);
    op.add(1, 0, -3);
    op.add(1, 1, -10);
    op.add(1, 2, -10);
    op.add(2, 0, 9);
    op.add(2, 1, 18);
    op.add(2, 2, 9);
    return op;
}

ThetaOp make_L3() {
    ThetaOp op;
    op.add(0, 3, 1);
    // -2t(2 theta + 1)(5 theta^2 + 5 theta + 2) = -t(20 theta^3 + 30 theta^2 + 18 theta + 4)
    op.add(1, 0, -4);
    op.add(1, 1, -18);
    op.add(1, 2, -30);
    op.add(1, 3, -20);
    op.add(2, 0, 64);
    op.add(2, 1, 192);
    op.add(2, 2, 192);
    op.add(2, 3, 64);
    return op;
}

ThetaOp make_L4() {
    ThetaOp op;
    op.add(0, 4, 1);
    op.add(1, 0, -5);
    op.add(1, 1, -28);
    op.add(1, 2, -63);
    op.add(1, 3, -70);
    op.add(1, 4, -35);
    // (theta+1)^2 (259 theta^2 + 518 theta + 285)
    op.add(2, 0, 285);
    op.add(2, 1, 1088);
    op.add(2, 2, 1580);
    op.add(2, 3, 1036);
    op.add(2, 4, 259);
    // -225 (theta+1)^2 (theta+2)^2
    op.add(3, 0, -900);
    op.add(3, 1, -2700);
    op.add(3, 2, -2925);
    op.add(3, 3, -1350);
    op.add(3, 4, -225);
    return op;
}

ThetaOp make_L2_tilde() {
    ThetaOp op;
    op.add(0, 2, 9);
    op.add(1, 0, -3);
    op.add(1, 1, -10);
    op.add(1, 2, -10);
    op.add(2, 0, 1);
    op.add(2, 1, 2);
    op.add(2, 2, 1);
    return op;
}

ThetaOp make_L3_tilde() {
    ThetaOp op;
    op.add(0, 3, 64);
    op.add(1, 0, -4);
    op.add(1, 1, -18);
    op.add(1, 2, -30);
    op.add(1, 3, -20);
    op.add(2, 0, 1);
    op.add(2, 1, 3);
    op.add(2, 2, 3);
    op.add(2, 3, 1);
    return op;
}
}  // namespace

const ThetaOp& op_L2() {
    static const ThetaOp op = make_L2();
    return op;
}
const ThetaOp& op_L3() {
    static const ThetaOp op = make_L3();
    return op;
}
const ThetaOp& op_L4() {
    static const ThetaOp op = make_L4();
    return op;
}
const ThetaOp& op_L2_tilde() {
    static const ThetaOp op = make_L2_tilde();
    return op;
}
const ThetaOp& op_L3_tilde() {
    static const ThetaOp op = make_L3_tilde();
    return op;
}
const ThetaOp& op_Ln(int n) {
    switch (n) {
        case 2: return op_L2();
        case 3: return op_L3();
        case 4: return op_L4();
    }
    throw std::invalid_argument("only L2, L3, L4 are defined");
}
const ThetaOp& op_Ln_tilde(int n) {
    switch (n) {
        case 2: return op_L2_tilde();
        case 3: return op_L3_tilde();
    }
    throw std::invalid_argument("only L2~, L3~ are defined");
}

namespace {
// R_{p,a}(x) = sum_{m>=0} (m+a)^p x^m as a rational function over Q.
QRat moment_kernel(long p, long a) {
    QRat r(QPoly{Rational(1)}, QPoly{Rational(1), Rational(-1)});  // 1/(1-x)
    for (long k = 0; k < p; ++k) {
        QRat dr = r.derivative();
        r = QRat(QPoly{Rational(0), Rational(1)}, QPoly{Rational(1)}) * dr + Rational(a) * r;
    }
    return r;
}

// S(x) over Q mapped through x -> lambda * t, as a t-rational over Q(lambda).
LRat scale_by_lambda(const QRat& s) {
    auto lift = [](const QPoly& p) {
        std::vector<QRat> c;
        for (long i = 0; i <= p.degree(); ++i) {
            // coefficient p_i * lambda^i
            std::vector<Rational> mono(static_cast<std::size_t>(i) + 1, Rational(0));
            mono[static_cast<std::size_t>(i)] = p[i];
            c.push_back(QRat(QPoly(std::move(mono)), QPoly{Rational(1)}));
        }
        return LPoly(std::move(c));
    };
    return LRat(lift(s.num()), lift(s.den()));
}
}  // namespace

LRat laurent_plus(const ThetaOp& sec) {
    LRat acc;
    for (long i = 0; i <= sec.var_degree(); ++i)
        for (long j = 0; j <= sec.theta_degree(); ++j) {
            Rational c = sec.coeff(i, j);
            if (c == 0) continue;
            // c * lambda^i * (-1)^j * R_{j, i+1}(lambda t)
            QRat r = moment_kernel(j, i + 1);
            LRat piece = scale_by_lambda(r);
            std::vector<Rational> mono(static_cast<std::size_t>(i) + 1, Rational(0));
            mono[static_cast<std::size_t>(i)] = (j % 2 == 0) ? c : -c;
            QRat lam_coeff(QPoly(std::move(mono)), QPoly{Rational(1)});
            acc = acc + lam_coeff * piece;
        }
    return acc;
}

MomentRhs moment_rhs(const ThetaOp& op_tilde, const EndpointData& alpha, const EndpointData& beta,
                     const SymRatFunc& minus_part) {
    long n = op_tilde.theta_degree();
    if (static_cast<long>(alpha.values.size()) != n || static_cast<long>(beta.values.size()) != n)
        throw std::invalid_argument("endpoint data must list theta^0..theta^{N-1} limits");
    std::vector<LRat> kernels;
    for (long j = 0; j < n; ++j) kernels.push_back(laurent_plus(op_tilde.section(j + 1)));

    auto assemble = [&](const EndpointData& e) {
        SymRatFunc H;
        if (e.point == 0 && !e.limit_mode) return H;  // lambda prefactor kills everything finite
        for (long j = 0; j < n; ++j) {
            if (e.values[static_cast<std::size_t>(j)].is_zero()) continue;
            QRat k;
            if (e.limit_mode) {
                if (!eval_lambda(kernels[static_cast<std::size_t>(j)], e.point).is_zero())
                    throw std::domain_error(
                        "unsupported endpoint divergence: bracketed kernel does not vanish at the endpoint");
                k = eval_lambda(d_lambda(kernels[static_cast<std::size_t>(j)]), e.point);
            } else {
                k = eval_lambda(kernels[static_cast<std::size_t>(j)], e.point);
            }
            H += sym_times(e.values[static_cast<std::size_t>(j)], Rational(e.point) * k);
        }
        return H;
    };

    MomentRhs out;
    out.H_alpha = assemble(alpha);
    out.H_beta = assemble(beta);
    out.h = minus_part - out.H_beta + out.H_alpha;
    return out;
}

QRat minus_part_from_series(const ThetaOp& op_tilde, const std::vector<Rational>& b_prefix) {
    long m = op_tilde.var_degree();
    if (static_cast<long>(b_prefix.size()) < m)
        throw std::invalid_argument("need b_0..b_{M-1} to form the principal part");
    // term (i,j): c_ij * (-n-1)^j * b_n * t^{n-i} for n < i
    std::vector<Rational> neg(static_cast<std::size_t>(m) + 1, Rational(0));  // neg[k] = coeff of t^{-k}
    for (long i = 1; i <= m; ++i)
        for (long j = 0; j <= op_tilde.theta_degree(); ++j) {
            Rational c = op_tilde.coeff(i, j);
            if (c == 0) continue;
            for (long nn = 0; nn < i; ++nn) {
                Rational f = 1;
                for (long r = 0; r < j; ++r) f *= Rational(-nn - 1);
                neg[static_cast<std::size_t>(i - nn)] += c * f * b_prefix[static_cast<std::size_t>(nn)];
            }
        }
    // sum_k neg[k] t^{-k} = (sum_k neg[k] t^{m-k}) / t^m
    std::vector<Rational> numc(static_cast<std::size_t>(m) + 1, Rational(0));
    for (long k = 1; k <= m; ++k) numc[static_cast<std::size_t>(m - k)] = neg[static_cast<std::size_t>(k)];
    std::vector<Rational> denc(static_cast<std::size_t>(m) + 1, Rational(0));
    denc[static_cast<std::size_t>(m)] = 1;
    return QRat(QPoly(std::move(numc)), QPoly(std::move(denc)));
}

namespace {
// Arithmetic in Q[eps]/(eps^n).
using EpsPoly = std::vector<Rational>;

EpsPoly eps_mul(const EpsPoly& a, const EpsPoly& b, std::size_t n) {
    EpsPoly c(n, Rational(0));
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

EpsPoly eps_inv(const EpsPoly& a, std::size_t n) {
    if (a.empty() || a[0] == 0) throw std::domain_error("eps inverse of non-unit");
    EpsPoly inv(n, Rational(0));
    inv[0] = 1 / a[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * inv[k - j];
        inv[k] = -acc / a[0];
    }
    return inv;
}

// (x + eps)^j truncated mod eps^n.
EpsPoly eps_pow_linear(const Rational& x, long j, std::size_t n) {
    EpsPoly p(n, Rational(0));
    p[0] = 1;
    for (long r = 0; r < j; ++r) {
        EpsPoly q(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            q[i] += x * p[i];
            if (i + 1 < n) q[i + 1] += p[i];
        }
        p = std::move(q);
    }
    return p;
}
}  // namespace

std::vector<FrobeniusSolution> frobenius_basis(const ThetaOp& op, const Rational& point, long order) {
    if (point == 1) {
        DOp dop = theta_to_d(op);
        DOp sh = shift_variable(dop, 1);
        ThetaOp local = d_to_theta(sh);
        auto basis = frobenius_basis(local, 0, order);
        for (auto& b : basis) b.point = 1;
        return basis;
    }
    if (point != 0) throw std::invalid_argument("Frobenius basis supported only at 0 and 1");
    if (!op.is_mum_at_zero())
        throw std::domain_error("indicial roots are not all zero: only MUM points are supported");

    std::size_t n = static_cast<std::size_t>(op.theta_degree());
    long m = op.var_degree();
    Rational lead = op.indicial(0)[static_cast<long>(n)];

    // Deformed solution x^eps sum A_k(eps) x^k with A_0 = 1.
    std::vector<EpsPoly> A(static_cast<std::size_t>(order) + 1, EpsPoly(n, Rational(0)));
    A[0][0] = 1;
    for (long k = 1; k <= order; ++k) {
        EpsPoly acc(n, Rational(0));
        for (long i = 1; i <= std::min<long>(k, m); ++i) {
            // P_i evaluated at (k - i + eps)
            EpsPoly pi_eval(n, Rational(0));
            QPoly pi = op.indicial(i);
            for (long j = 0; j <= pi.degree(); ++j) {
                if (pi[j] == 0) continue;
                EpsPoly pw = eps_pow_linear(Rational(k - i), j, n);
                for (std::size_t s = 0; s < n; ++s) pi_eval[s] += pi[j] * pw[s];
            }
            EpsPoly contrib = eps_mul(pi_eval, A[static_cast<std::size_t>(k - i)], n);
            for (std::size_t s = 0; s < n; ++s) acc[s] += contrib[s];
        }
        EpsPoly denom = eps_pow_linear(Rational(k), static_cast<long>(n), n);
        for (auto& v : denom) v *= lead;
        A[static_cast<std::size_t>(k)] = eps_mul(eps_inv(denom, n), acc, n);
        for (auto& v : A[static_cast<std::size_t>(k)]) v = -v;
    }

    // a_m(x) = [eps^m] sum A_k(eps) x^k; phi_r = sum_j (r!/j!) log^j a_{r-j}.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    for (std::size_t mm = 0; mm < n; ++mm)
        for (long k = 0; k <= order; ++k) a[mm][static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(k)][mm];

    std::vector<FrobeniusSolution> basis;
    for (std::size_t r = 0; r < n; ++r) {
        FrobeniusSolution sol;
        sol.point = point;
        Rational rfact = 1;
        for (std::size_t v = 2; v <= r; ++v) rfact *= static_cast<long>(v);
        for (std::size_t j = 0; j <= r; ++j) {
            Rational jfact = 1;
            for (std::size_t v = 2; v <= j; ++v) jfact *= static_cast<long>(v);
            std::vector<Rational> coef = a[r - j];
            Rational scale = rfact / jfact;
            for (auto& c : coef) c *= scale;
            sol.strata.push_back(QSeries<Rational>(0, std::move(coef)));
        }
        basis.push_back(std::move(sol));
    }
    return basis;
}

std::vector<FrobeniusSolution> ordinary_basis(const ThetaOp& op, const Rational& point, long order) {
    DOp dop = theta_to_d(op);
    if (point != 0) dop = shift_variable(dop, point);
    std::size_t n = dop.size() - 1;
    while (n > 0 && dop[n].is_zero()) --n;
    if (n == 0 || dop[n][0] == 0) throw std::domain_error("not an ordinary point");

    std::vector<FrobeniusSolution> basis;
    for (std::size_t seed = 0; seed < n; ++seed) {
        std::vector<Rational> y(static_cast<std::size_t>(order) + 1, Rational(0));
        y[seed] = 1;
        // coefficient of x^mm in sum_k p_k(x) y^{(k)}:
        //   sum_k sum_d p_{k,d} * ff(mm - d + k, k) * y_{mm - d + k} = 0
        for (long mm = 0; mm + static_cast<long>(n) <= order; ++mm) {
            Rational acc = 0;
            long top = mm + static_cast<long>(n);
            for (std::size_t k = 0; k <= n; ++k)
                for (long d = 0; d <= dop[k].degree(); ++d) {
                    Rational p = dop[k][d];
                    if (p == 0) continue;
                    long idx = mm - d + static_cast<long>(k);
                    if (idx < 0 || idx > order) continue;
                    if (idx == top && k == n && d == 0) continue;  // unknown being solved for
                    Rational ff = 1;
                    for (std::size_t r = 0; r < k; ++r) ff *= Rational(idx - static_cast<long>(r));
                    if (ff == 0) continue;
                    acc += p * ff * y[static_cast<std::size_t>(idx)];
                }
            Rational ff_top = 1;
            for (std::size_t r = 0; r < n; ++r) ff_top *= Rational(top - static_cast<long>(r));
            y[static_cast<std::size_t>(top)] = -acc / (dop[n][0] * ff_top);
        }
        FrobeniusSolution sol;
        sol.point = point;
        sol.strata.push_back(QSeries<Rational>(0, std::move(y)));
        basis.push_back(std::move(sol));
    }
    return basis;
}

std::vector<QSeries<Rational>> apply_to_strata(const ThetaOp& op, const std::vector<QSeries<Rational>>& strata) {
    // theta(s_k log^k) = (theta s_k) log^k + k s_k log^{k-1}; iterate per power of theta.
    std::size_t depth = strata.size();
    auto theta_stack = [&](const std::vector<QSeries<Rational>>& st) {
        std::vector<QSeries<Rational>> out;
        for (std::size_t k = 0; k < st.size(); ++k) {
            QSeries<Rational> v = derivative_D(st[k]);
            if (k + 1 < st.size()) v = v + scale_rational(Rational(static_cast<long>(k) + 1), st[k + 1]);
            out.push_back(v);
        }
        return out;
    };
    std::vector<std::vector<QSeries<Rational>>> pows;
    pows.push_back(strata);
    for (long j = 1; j <= op.theta_degree(); ++j) pows.push_back(theta_stack(pows.back()));

    std::vector<QSeries<Rational>> acc(depth, QSeries<Rational>::zero(strata[0].order()));
    for (long i = 0; i <= op.var_degree(); ++i)
        for (long j = 0; j <= op.theta_degree(); ++j) {
            Rational c = op.coeff(i, j);
            if (c == 0) continue;
            for (std::size_t k = 0; k < depth; ++k)
                acc[k] = acc[k] + scale_rational(c, pows[static_cast<std::size_t>(j)][k]).shifted(i);
        }
    return acc;
}

QSeries<Rational> solve_nonhomogeneous(const ThetaOp& op, const QSeries<Rational>& rhs, const Rational& seed,
                                       long order) {
    if (!op.is_mum_at_zero()) throw std::domain_error("solver requires a MUM operator at t = 0");
    if (rhs.lead24() % 24 != 0 || rhs.lead24() < 0)
        throw std::invalid_argument("rhs must be a power series on the integer grid");
    if (rhs.lead24() == 0 && rhs[0] != 0) throw std::domain_error("rhs must vanish at t = 0");

    std::size_t n = static_cast<std::size_t>(op.theta_degree());
    long m = op.var_degree();
    Rational lead = op.indicial(0)[static_cast<long>(n)];

    auto rhs_at = [&](long k) -> Rational {
        long off = rhs.lead24() / 24;
        if (k < off) return 0;
        if (k - off > rhs.order()) throw std::out_of_range("rhs truncated below requested solution order");
        return rhs[k - off];
    };

    std::vector<Rational> y(static_cast<std::size_t>(order) + 1, Rational(0));
    y[0] = seed;
    for (long k = 1; k <= order; ++k) {
        Rational acc = rhs_at(k);
        for (long i = 1; i <= std::min<long>(k, m); ++i) {
            QPoly pi = op.indicial(i);
            Rational val = pi.eval(Rational(k - i));
            acc -= val * y[static_cast<std::size_t>(k - i)];
        }
        Rational kn = 1;
        for (std::size_t r = 0; r < n; ++r) kn *= k;
        y[static_cast<std::size_t>(k)] = acc / (lead * kn);
    }
    return QSeries<Rational>(0, std::move(y));
}

DOp theta_to_d(const ThetaOp& op) {
    // theta^j = sum_k S2(j,k) x^k (d/dx)^k
    long n = op.theta_degree();
    std::vector<std::vector<Rational>> s2(static_cast<std::size_t>(n) + 1,
                                          std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
    s2[0][0] = 1;
    for (long j = 1; j <= n; ++j)
        for (long k = 1; k <= j; ++k)
            s2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                s2[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] +
                Rational(k) * s2[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)];

    DOp out(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= op.var_degree(); ++i)
        for (long j = 0; j <= n; ++j) {
            Rational c = op.coeff(i, j);
            if (c == 0) continue;
            for (long k = 0; k <= j; ++k) {
                Rational w = c * s2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (w == 0) continue;
                std::vector<Rational> mono(static_cast<std::size_t>(i + k) + 1, Rational(0));
                mono[static_cast<std::size_t>(i + k)] = w;
                out[static_cast<std::size_t>(k)] += QPoly(std::move(mono));
            }
        }
    return out;
}

DOp shift_variable(const DOp& dop, const Rational& c) {
    DOp out;
    out.reserve(dop.size());
    for (const auto& p : dop) out.push_back(p.shifted(c));
    return out;
}

ThetaOp d_to_theta(const DOp& dop) {
    // x^N q_k(x) (d/dx)^k = q_k(x) x^{N-k} theta(theta-1)...(theta-k+1);
    // a common power of x is then divided back out (left division), which at
    // a regular singular point restores the canonical indicial form.
    long n = static_cast<long>(dop.size()) - 1;
    while (n > 0 && dop[static_cast<std::size_t>(n)].is_zero()) --n;
    ThetaOp raw;
    for (long k = 0; k <= n; ++k) {
        const QPoly& q = dop[static_cast<std::size_t>(k)];
        if (q.is_zero()) continue;
        // falling factorial theta^(k) as a theta-polynomial
        QPoly fall{Rational(1)};
        for (long r = 0; r < k; ++r) fall = fall * QPoly{Rational(-r), Rational(1)};
        for (long d = 0; d <= q.degree(); ++d) {
            if (q[d] == 0) continue;
            for (long j = 0; j <= fall.degree(); ++j) {
                if (fall[j] == 0) continue;
                raw.add(d + n - k, j, q[d] * fall[j]);
            }
        }
    }
    long v = 0;
    while (v <= raw.var_degree() && raw.indicial(v).is_zero()) ++v;
    if (v == 0) return raw;
    ThetaOp out;
    for (long i = v; i <= raw.var_degree(); ++i)
        for (long j = 0; j <= raw.theta_degree(); ++j) {
            Rational c = raw.coeff(i, j);
            if (c != 0) out.add(i - v, j, c);
        }
    return out;
}

}  // namespace mahler
