#include "mahler/cheb.hpp"

namespace mahler {

ChebSeries ChebSeries::fit(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int n) {
    if (n < 2) throw std::invalid_argument("ChebSeries::fit needs n >= 2");
    Real pi = pi_value();
    std::size_t m = static_cast<std::size_t>(n) + 1;
    std::vector<Real> cosv(m), fv(m);
    Real mid = (a + b) / 2, half = (b - a) / 2;
    for (std::size_t k = 0; k < m; ++k) {
        cosv[k] = cos(pi * static_cast<long>(k) / n);
        fv[k] = f(mid + half * cosv[k]);
    }
    // Clenshaw-Curtis style coefficients: c_j = (2/n) sum'' f(x_k) cos(pi j k / n)
    std::vector<Real> coef(m);
    for (std::size_t j = 0; j < m; ++j) {
        Real acc = fv[0] / 2;
        for (std::size_t k = 1; k + 1 < m; ++k) {
            // cos(pi j k / n) via index folding of the precomputed table
            std::size_t idx = (j * k) % (2 * static_cast<std::size_t>(n));
            Real c = idx <= static_cast<std::size_t>(n) ? cosv[idx] : cosv[2 * static_cast<std::size_t>(n) - idx];
            acc += fv[k] * c;
        }
        acc += (j % 2 == 0 ? fv[m - 1] : -fv[m - 1]) / 2;
        coef[j] = acc * 2 / n;
    }
    coef[0] /= 2;
    coef[m - 1] /= 2;
    return ChebSeries(a, b, std::move(coef));
}

Real ChebSeries::eval(const Real& x) const {
    // Clenshaw recurrence on u in [-1,1].
    Real u = (2 * x - a_ - b_) / (b_ - a_);
    Real b1(0), b2(0);
    for (std::size_t k = coef_.size(); k-- > 1;) {
        Real t = 2 * u * b1 - b2 + coef_[k];
        b2 = b1;
        b1 = t;
    }
    return u * b1 - b2 + coef_[0];
}

void ChebSeries::check_domain(const ChebSeries& o) const {
    if (a_ != o.a_ || b_ != o.b_) throw std::invalid_argument("ChebSeries domain mismatch");
}

ChebSeries ChebSeries::operator+(const ChebSeries& o) const {
    check_domain(o);
    std::vector<Real> c(std::max(coef_.size(), o.coef_.size()), Real(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) c[i] += o.coef_[i];
    return ChebSeries(a_, b_, std::move(c));
}

ChebSeries ChebSeries::operator-(const ChebSeries& o) const {
    check_domain(o);
    std::vector<Real> c(std::max(coef_.size(), o.coef_.size()), Real(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) c[i] -= o.coef_[i];
    return ChebSeries(a_, b_, std::move(c));
}

ChebSeries ChebSeries::multiply(const ChebSeries& o) const {
    check_domain(o);
    // T_m T_n = (T_{m+n} + T_{|m-n|}) / 2
    std::vector<Real> c(coef_.size() + o.coef_.size() - 1, Real(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j) {
            Real half = coef_[i] * o.coef_[j] / 2;
            c[i + j] += half;
            std::size_t d = i > j ? i - j : j - i;
            c[d] += half;
        }
    }
    return ChebSeries(a_, b_, std::move(c));
}

ChebSeries ChebSeries::scaled(const Real& s) const {
    std::vector<Real> c = coef_;
    for (auto& v : c) v *= s;
    return ChebSeries(a_, b_, std::move(c));
}

void ChebSeries::add_constant(const Real& c) {
    if (coef_.empty()) coef_.push_back(Real(0));
    coef_[0] += c;
}

ChebSeries ChebSeries::antiderivative(const Real& at) const {
    // C_k = (c_{k-1} - c_{k+1})/(2k) in the u variable (with c_0 doubled for
    // k = 1); the half-width rescales from u to x.
    std::size_t n = coef_.size();
    std::vector<Real> c(n + 1, Real(0));
    Real half = (b_ - a_) / 2;
    auto get = [&](std::size_t j) -> Real { return j < n ? coef_[j] : Real(0); };
    for (std::size_t k = 1; k <= n; ++k) {
        Real prev = (k == 1) ? Real(2 * get(0)) : get(k - 1);
        c[k] = half * (prev - get(k + 1)) / (2 * static_cast<long>(k));
    }
    ChebSeries F(a_, b_, std::move(c));
    Real v = F.eval(at);
    F.add_constant(-v);
    return F;
}

Real ChebSeries::definite_integral() const {
    // int_{-1}^{1} T_k du = 2/(1-k^2) for even k, 0 for odd k
    Real acc(0);
    for (std::size_t k = 0; k < coef_.size(); k += 2) {
        long kk = static_cast<long>(k);
        acc += coef_[k] * Real(2) / (1 - kk * kk);
    }
    return acc * (b_ - a_) / 2;
}

Real ChebSeries::tail_bound(int count) const {
    Real acc(0);
    std::size_t n = coef_.size();
    for (std::size_t i = n > static_cast<std::size_t>(count) ? n - static_cast<std::size_t>(count) : 0; i < n; ++i)
        acc += abs(coef_[i]);
    return acc;
}

ChebSeries ChebSeries::identity(const Real& a, const Real& b) {
    return ChebSeries(a, b, {(a + b) / 2, (b - a) / 2});
}

ChebSeries ChebSeries::constant(const Real& a, const Real& b, const Real& c) {
    return ChebSeries(a, b, {c});
}

}  // namespace mahler
