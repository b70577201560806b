#include "mahler/quadrature.hpp"

#include <map>

namespace mahler {

Real QuadratureSpec::effective_tol() const {
    Real floor_tol = pow2(-static_cast<long>(precision_bits()) + 16);
    if (abs_tol > floor_tol) return abs_tol;
    return floor_tol;
}

namespace {
using Rule = std::pair<std::vector<Real>, std::vector<Real>>;

Rule make_gl_rule(int n) {
    // Newton iteration on P_n from Chebyshev initial guesses.
    Real pi = pi_value();
    std::vector<Real> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    long bits = precision_bits();
    Real tol = pow2(-bits + 6);
    for (int i = 0; i < n; ++i) {
        Real xi = cos(pi * (4 * i + 3) / (4 * n + 2));
        for (int it = 0; it < 200; ++it) {
            // Legendre recurrence for P_n(xi) and P_{n-1}(xi)
            Real p0(1), p1 = xi;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            Real deriv = n * (xi * p1 - p0) / (xi * xi - 1);
            Real step = p1 / deriv;
            xi -= step;
            if (abs(step) < tol) break;
        }
        Real p0(1), p1 = xi;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        Real deriv = n * (xi * p1 - p0) / (xi * xi - 1);
        x[static_cast<std::size_t>(i)] = xi;
        w[static_cast<std::size_t>(i)] = 2 / ((1 - xi * xi) * deriv * deriv);
    }
    return {x, w};
}
}  // namespace

const Rule& gauss_legendre_rule(int order) {
    static std::map<std::pair<int, unsigned>, Rule> cache;
    auto key = std::make_pair(order, precision_bits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_gl_rule(order)).first;
    return it->second;
}

namespace {
Real gl_panel(const RealFn& f, const Real& a, const Real& b, const Rule& rule) {
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real acc(0);
    for (std::size_t i = 0; i < rule.first.size(); ++i)
        acc += rule.second[i] * f(mid + half * rule.first[i]);
    return acc * half;
}

struct AdaptiveState {
    const RealFn* f;
    const Rule* rule;
    Real tol;
    Real value{0};
    Real err{0};
};

void gl_recurse(AdaptiveState& st, const Real& a, const Real& b, const Real& whole, int depth, int max_depth) {
    Real mid = (a + b) / 2;
    Real left = gl_panel(*st.f, a, mid, *st.rule);
    Real right = gl_panel(*st.f, mid, b, *st.rule);
    Real delta = abs(left + right - whole);
    if (depth >= max_depth || delta < st.tol * (b - a)) {
        st.value += left + right;
        st.err += delta;
        return;
    }
    gl_recurse(st, a, mid, left, depth + 1, max_depth);
    gl_recurse(st, mid, b, right, depth + 1, max_depth);
}
}  // namespace

QuadResult integrate_gl_adaptive(const RealFn& f, const Real& a, const Real& b, const Real& abs_tol,
                                 int order, int max_depth) {
    if (b == a) return {Real(0), Real(0)};
    const Rule& rule = gauss_legendre_rule(order);
    AdaptiveState st;
    st.f = &f;
    st.rule = &rule;
    Real len = abs(b - a);
    st.tol = abs_tol / len;
    Real whole = gl_panel(f, a, b, rule);
    gl_recurse(st, a, b, whole, 0, max_depth);
    return {st.value, st.err + abs_tol / 4};
}

QuadResult integrate_tanh_sinh(const RealFn& f, const Real& a, const Real& b, const Real& abs_tol) {
    // x = mid + half*tanh((pi/2) sinh(u)); levels double the node density.
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real pi_half = pi_value() / 2;
    Real h(1);
    long bits = precision_bits();
    Real tiny = pow2(-bits - 32);

    auto node_sum = [&](const Real& step, bool odd_only) {
        Real acc(0);
        for (long k = odd_only ? 1 : 0;; k += odd_only ? 2 : 1) {
            Real u = step * k;
            Real sh = sinh(u);
            Real t = tanh(pi_half * sh);
            Real w = pi_half * cosh(u) / (cosh(pi_half * sh) * cosh(pi_half * sh));
            Real gap = half * (1 - abs(t));
            if (gap == 0 || w < tiny) break;  // nodes collapsed into the endpoints
            Real x1 = mid + half * t;
            Real term;
            if (k == 0) {
                term = w * f(x1);
            } else {
                Real x0 = mid - half * t;
                term = w * (f(x1) + f(x0));
            }
            acc += term;
            if (k > 4 && abs(term) < tiny) break;
            if (k > 100000) break;
        }
        return acc;
    };

    Real sum = node_sum(h, false);
    Real prev = half * h * sum;
    Real est = prev;
    Real err = abs(prev);
    for (int level = 1; level <= 12; ++level) {
        h /= 2;
        sum += node_sum(h, true);
        est = half * h * sum;
        err = abs(est - prev);
        prev = est;
        if (err < abs_tol / 2) break;
    }
    return {est, err + abs_tol / 8};
}

QuadResult integrate(const QuadratureSpec& spec, const RealFn& f, const Real& a, const Real& b) {
    Real tol = spec.effective_tol();
    if (spec.rule == QuadratureSpec::Rule::double_exponential) return integrate_tanh_sinh(f, a, b, tol);
    return integrate_gl_adaptive(f, a, b, tol);
}

}  // namespace mahler
