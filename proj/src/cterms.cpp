#include "mahler/cterms.hpp"

#include <cmath>
#include <random>

namespace mahler {

LaurentPolyMulti::LaurentPolyMulti(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 4) throw std::invalid_argument("LaurentPolyMulti supports 1..4 variables");
}

std::uint64_t LaurentPolyMulti::pack(const std::vector<int>& exps, int nvars) {
    std::uint64_t key = 0;
    for (int i = 0; i < nvars; ++i) {
        int e = exps[static_cast<std::size_t>(i)];
        if (e < -127 || e > 127) throw std::overflow_error("exponent out of packing range");
        key = (key << 16) | static_cast<std::uint64_t>(e + 128);
    }
    return key;
}

void LaurentPolyMulti::add_term(const std::vector<int>& exps, const Integer& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto key = pack(exps, nvars_);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LaurentPolyMulti::constant_term() const {
    std::vector<int> z(static_cast<std::size_t>(nvars_), 0);
    auto it = terms_.find(pack(z, nvars_));
    return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolyMulti LaurentPolyMulti::multiply(const LaurentPolyMulti& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    LaurentPolyMulti out(nvars_);
    out.terms_.reserve(terms_.size() * 2);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            // exponent vectors add; the packed keys add up to the accumulated bias
            std::uint64_t key = ka + kb;
            std::uint64_t bias = 0;
            for (int i = 0; i < nvars_; ++i) bias = (bias << 16) | 128u;
            key -= bias;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                Integer v = ca * cb;
                if (v != 0) out.terms_.emplace(key, std::move(v));
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

LaurentPolyMulti LaurentPolyMulti::base_pn(int n) {
    LaurentPolyMulti p(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            std::fill(e.begin(), e.end(), 0);
            if (i > 0) e[static_cast<std::size_t>(i - 1)] += 1;
            if (j > 0) e[static_cast<std::size_t>(j - 1)] -= 1;
            p.add_term(e, 1);
        }
    return p;
}

std::vector<Integer> constant_terms(int n, int M) {
    if (n < 2 || n > 4) throw std::invalid_argument("constant_terms supports 2 <= n <= 4");
    if (M < 0 || M > 12) throw std::invalid_argument("constant_terms supports M <= 12");
    std::vector<Integer> a;
    a.reserve(static_cast<std::size_t>(M) + 1);
    a.emplace_back(1);  // empty product
    LaurentPolyMulti base = LaurentPolyMulti::base_pn(n);
    LaurentPolyMulti pw = base;
    for (int m = 1; m <= M; ++m) {
        a.push_back(pw.constant_term());
        if (m < M) pw = pw.multiply(base);
    }
    return a;
}

namespace {
// Halton radical inverse in the given base.
double radical_inverse(std::uint64_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

constexpr unsigned kBases[4] = {2, 3, 5, 7};
}  // namespace

MahlerEstimate mahler_direct(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1 || n > 4) throw std::invalid_argument("mahler_direct supports 1 <= n <= 4");
    if (samples < 1024) throw std::invalid_argument("too few samples");

    const int batches = 64;
    std::uint64_t per_batch = samples / batches;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const double two_pi = 6.283185307179586476925286766559;
    std::vector<double> means(batches, 0.0);
    std::uint64_t index = 1;  // skip the degenerate first Halton point
    for (int b = 0; b < batches; ++b) {
        double shift[4];
        for (int d = 0; d < n; ++d) shift[d] = unif(rng);
        double acc = 0.0;
        for (std::uint64_t i = 0; i < per_batch; ++i, ++index) {
            double re = 1.0, im = 0.0;
            for (int d = 0; d < n; ++d) {
                double u = radical_inverse(index, kBases[d]) + shift[d];
                u -= std::floor(u);
                double ang = two_pi * u;
                re += std::cos(ang);
                im += std::sin(ang);
            }
            double norm2 = re * re + im * im;
            // log|P| with a floor well below anything 2^24 samples can hit
            acc += 0.5 * std::log(std::max(norm2, 1e-300));
        }
        means[static_cast<std::size_t>(b)] = acc / static_cast<double>(per_batch);
    }

    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= batches;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= (batches - 1);
    double stderr_mean = std::sqrt(var / batches);
    return MahlerEstimate{mean, stderr_mean, per_batch * batches, batches};
}

}  // namespace mahler
