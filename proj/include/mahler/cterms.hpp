#pragma once

#include "mahler/numeric.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mahler {

// Sparse Laurent polynomial in up to 4 variables; exponents are packed into a
// 64-bit key with a bias of 128 per coordinate (plenty for P_n^12).
class LaurentPolyMulti {
public:
    explicit LaurentPolyMulti(int nvars);

    int nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const std::vector<int>& exps, const Integer& c);
    Integer constant_term() const;

    LaurentPolyMulti multiply(const LaurentPolyMulti& o) const;

    // (1 + x_1 + ... + x_n)(1 + 1/x_1 + ... + 1/x_n)
    static LaurentPolyMulti base_pn(int n);

private:
    static std::uint64_t pack(const std::vector<int>& exps, int nvars);
    int nvars_;
    std::unordered_map<std::uint64_t, Integer> terms_;
};

// a_m = constant term of P_n^m for m = 0..M; exact big integers.
std::vector<Integer> constant_terms(int n, int M);

struct MahlerEstimate {
    double value;
    double std_error;
    std::uint64_t samples;
    int batches;
};

// Quasi-Monte Carlo estimate of m(1 + x_1 + ... + x_n) over the n-torus:
// randomly shifted Halton batches, batch variance as the error proxy.
MahlerEstimate mahler_direct(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace mahler
