#pragma once

#include "mahler/cterms.hpp"
#include "mahler/double_l.hpp"
#include "mahler/forms.hpp"
#include "mahler/lvalue.hpp"
#include "mahler/quadrature.hpp"
#include "mahler/theta_op.hpp"

#include <string>
#include <vector>

namespace mahler {

struct Config {
    unsigned precision_bits = 256;
    long series_order = 200;
    QuadratureSpec quad;
    std::uint64_t seed = 1;
    std::uint64_t samples = std::uint64_t(1) << 24;
    std::string output = "text";  // text | json | csv
    std::string cache_dir;        // empty = MAHLER_CACHE_DIR or default

    void validate() const;
};

// CM-point constants of the section-5 lemmas. The a*(1) family comes from the
// closed forms in Omega and pi; c0 and c1 - 4 c0 from the explicit modular
// integrals, quadrature + q-expansion tails.
struct CmConstants {
    Real a_star_1, theta_a_star_1, theta2_a_star_1;
    Real c0_n2, c0_n3, c1_minus_4c0;
    Real quad_error;  // combined quadrature error bound for the integral entries
};
CmConstants cm_constants(const QuadratureSpec& spec);

// Companion integral of the n=2 lemma (c1 - 3 c0 = -6/pi^2), used as an
// independent check of the endpoint data feeding the moment transform.
QuadResult c1_minus_3c0_n2(const QuadratureSpec& spec);

// The unique power-series solution of the Theorem-2 equation, split into the
// homogeneous seed and the two rational right-hand-side responses:
// b = (4/5) phi + C1 psi1 + C2 psi2.
struct Thm2Solution {
    QSeries<Rational> phi, psi1, psi2;
    SymExpr C1, C2;
};
Thm2Solution thm2_solution(long order);

// |b(t(z0)) - (4/5) f(z0) - f(z0) D^{-3}(C1 g3 + C2 g2)(z0)| at a point with
// Im z0 >= 1, both sides evaluated independently.
Real cor2_pointwise_residual(const Complex& z0, long order);

// Moment-transform data for the named cases, exact in the symbolic ring.
MomentRhs moment_case(const std::string& name);  // "toy" | "thm1" | "thm2"
// Right-hand side of L_n b = h_b derived from the case's L~-side h.
SymRatFunc moment_case_rhs_b(const std::string& name);

struct CheckRow {
    std::string name;
    int criterion;  // acceptance criterion number
    bool exact;     // exact identity vs numeric tolerance
    bool pass;
    std::string computed, target;
    double abs_error = 0.0;  // for numeric rows
    double tolerance = 0.0;
};

// The full acceptance suite (every criterion at its stated tolerance).
std::vector<CheckRow> verify_all(const Config& cfg);

std::string report_json(const std::vector<CheckRow>& rows, const Config& cfg);
std::string report_csv(const std::vector<CheckRow>& rows);
std::string report_text(const std::vector<CheckRow>& rows);

// exit codes: 0 pass, 2 numeric failure, 3 exact failure
int report_exit_code(const std::vector<CheckRow>& rows);

}  // namespace mahler
