#pragma once

#include "mahler/poly.hpp"
#include "mahler/qseries.hpp"
#include "mahler/symconst.hpp"

#include <vector>

namespace mahler {

struct ThetaOpDual;

// Polynomial differential operator  sum_{i,j} c_{ij} t^i theta^j  in canonical
// form: powers of the variable stand to the left of powers of theta = t d/dt.
class ThetaOp {
public:
    ThetaOp() = default;

    static ThetaOp term(long i, long j, const Rational& c) {
        ThetaOp op;
        op.add(i, j, c);
        return op;
    }

    void add(long i, long j, const Rational& c);
    Rational coeff(long i, long j) const;
    long var_degree() const { return static_cast<long>(c_.size()) - 1; }
    long theta_degree() const;

    ThetaOp& operator+=(const ThetaOp& o);
    friend ThetaOp operator+(ThetaOp a, const ThetaOp& b) { return a += b; }
    friend ThetaOp operator-(const ThetaOp& a);
    friend ThetaOp operator*(const Rational& s, const ThetaOp& a);
    // Operator composition with the commutation rule theta t^a = t^a (theta + a).
    friend ThetaOp operator*(const ThetaOp& a, const ThetaOp& b);
    friend bool operator==(const ThetaOp& a, const ThetaOp& b);

    // theta-polynomial slice at fixed var power i.
    QPoly indicial(long i) const;

    // L^{(k)} = sum_{i} sum_{j>=k} c_{ij} t^i theta^{j-k}
    ThetaOp section(long k) const;

    // L(1/t, -theta-1) written as t^{-power} * op(t, theta) with power = var_degree.
    ThetaOpDual dual() const;

    bool is_mum_at_zero() const;  // indicial polynomial at 0 equals c * theta^N

    template <typename T>
    QSeries<T> apply(const QSeries<T>& a) const {
        long n = a.order();
        long m = var_degree();
        // theta^j scales coeff k by (lead + k)^j; t^i shifts exponents.
        std::vector<QSeries<T>> theta_pows;
        theta_pows.push_back(a);
        for (long j = 1; j <= theta_degree(); ++j) theta_pows.push_back(derivative_theta(theta_pows.back()));
        QSeries<T> acc = QSeries<T>::zero(n);
        bool any = false;
        for (long i = 0; i <= m; ++i)
            for (long j = 0; j < static_cast<long>(c_[static_cast<std::size_t>(i)].size()); ++j) {
                const Rational& c = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (c == 0) continue;
                QSeries<T> piece = scale_rational(c, theta_pows[static_cast<std::size_t>(j)]).shifted(i);
                acc = any ? acc + piece : piece;
                any = true;
            }
        if (!any) return QSeries<T>::zero(n);
        return acc;
    }

    std::string str(const std::string& var = "t") const;

private:
    template <typename T>
    static QSeries<T> derivative_theta(const QSeries<T>& s) {
        return derivative_D(s);  // theta and D agree as Euler operators on formal series
    }
    // c_[i][j] = coefficient of t^i theta^j
    std::vector<std::vector<Rational>> c_;
};

struct ThetaOpDual {
    long power;
    ThetaOp op;
};

// The paper's operators.
const ThetaOp& op_L2();
const ThetaOp& op_L3();
const ThetaOp& op_L4();
const ThetaOp& op_L2_tilde();
const ThetaOp& op_L3_tilde();
const ThetaOp& op_Ln(int n);
const ThetaOp& op_Ln_tilde(int n);

// [ L^{(section)}(1/t, -theta_t - 1) 1/(1 - lambda t) ]_+ as a rational
// function of t over Q(lambda). `sec` must already be the section operator.
LRat laurent_plus(const ThetaOp& sec);

// Endpoint data for the moment transform. In regular mode `values[j]` is the
// finite limit of theta^j F at the endpoint; in limit mode it is the finite
// limit of (lambda - endpoint) * theta^j F, which requires the bracketed
// kernels to vanish at the endpoint (the only divergence pattern supported).
struct EndpointData {
    Rational point;
    std::vector<SymExpr> values;
    bool limit_mode = false;
};

struct MomentRhs {
    SymRatFunc H_alpha, H_beta, h;
};

// Proposition 4 assembly: h = [L~(1/t,-theta-1) b]_- - H_beta + H_alpha.
MomentRhs moment_rhs(const ThetaOp& op_tilde, const EndpointData& alpha, const EndpointData& beta,
                     const SymRatFunc& minus_part);

// [L~(1/t,-theta-1) b]_- for a series b, determined by b_0 .. b_{M-1}.
QRat minus_part_from_series(const ThetaOp& op_tilde, const std::vector<Rational>& b_prefix);

// Apply L(1/t, -theta-1) to a series (via the dual normal form).
template <typename T>
QSeries<T> apply_inverted(const ThetaOp& op_tilde, const QSeries<T>& b) {
    ThetaOpDual d = op_tilde.dual();
    return d.op.apply(b).shifted(-d.power);
}

// Frobenius solution sum_k strata[k] * log(x)^k around x = point.
struct FrobeniusSolution {
    Rational point;
    std::vector<QSeries<Rational>> strata;
};

// Basis at a point of maximal unipotent monodromy (point must be 0 or 1).
std::vector<FrobeniusSolution> frobenius_basis(const ThetaOp& op, const Rational& point, long order);

// Taylor basis at an ordinary point.
std::vector<FrobeniusSolution> ordinary_basis(const ThetaOp& op, const Rational& point, long order);

// Apply op to a log-stratified solution; all strata must share lead/order.
std::vector<QSeries<Rational>> apply_to_strata(const ThetaOp& op, const std::vector<QSeries<Rational>>& strata);

// Unique power-series solution of op(t, theta) y = rhs with y(0) = seed; the
// operator must be MUM at 0 and rhs must vanish at t = 0.
QSeries<Rational> solve_nonhomogeneous(const ThetaOp& op, const QSeries<Rational>& rhs, const Rational& seed,
                                       long order);

// Operator in d/dx form: sum_k poly_k(x) (d/dx)^k.
using DOp = std::vector<QPoly>;
DOp theta_to_d(const ThetaOp& op);
DOp shift_variable(const DOp& dop, const Rational& c);  // x -> x + c
ThetaOp d_to_theta(const DOp& dop);                     // multiplies by x^N on the left

}  // namespace mahler
