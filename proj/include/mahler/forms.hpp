#pragma once

#include "mahler/eta.hpp"
#include "mahler/poly.hpp"
#include "mahler/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mahler {

class DirichletChar {
public:
    DirichletChar(long modulus, std::vector<int> table);
    static const DirichletChar& chi_minus3();
    static const DirichletChar& chi_minus15();

    long modulus() const { return modulus_; }
    int operator()(long long n) const;

private:
    long modulus_;
    std::vector<int> table_;
};

enum class FormId {
    t2,
    f2,
    t3,
    f3,
    g1w3,
    g2w3,
    g1w4,
    g2w4,
    g3w4,
    f15,
    E3chi,
    E3chiTilde,
    E4,
    E1,
    G2,
    f1,
    f2sec7,
    g1hat,
    f2hat,
};

const std::vector<std::pair<FormId, std::string>>& form_names();
FormId form_id_from_name(const std::string& name);
const std::string& form_name(FormId id);

// One term of a linear combination of rescaled forms: coef * F(scale * z).
struct FormTerm {
    Rational coef;
    FormId id;
    long scale = 1;
};

struct IdentityResult {
    bool equal;
    std::optional<Rational> first_mismatch_exponent;
};

// Named catalogue of the paper's modular objects with expansion and
// point-evaluation backends.
class FormRegistry {
public:
    static FormRegistry& instance();

    QSeries<Rational> expansion(FormId id, long order) const;
    QSeries<Rational> expansion_of(const std::vector<FormTerm>& combo, long order) const;
    IdentityResult identity_check(const std::vector<FormTerm>& lhs, const std::vector<FormTerm>& rhs,
                                  long order) const;

    // Point evaluation in the upper half-plane via eta reduction (or an
    // Eisenstein q-sum where no eta model is listed; those require moderate
    // Im z). For the meromorphic weight-4 forms, proximity of t(z) to 1 is an
    // error.
    Complex value(FormId id, const Complex& z) const;

    // The L3-parametrization data at a point: t(z), f(z) and
    // Dt = f^2 t sqrt((1-4t)(1-16t)) with the positive branch used on the
    // paper's integration paths.
    struct L3Point {
        Complex t, f, Dt;
    };
    L3Point l3_point(const Complex& z) const;

    std::string recipe_json(FormId id) const;

private:
    FormRegistry() = default;
    mutable std::map<FormId, QSeries<Rational>> memo_;
};

// Eisenstein-type expansion generator: constant + sum_{m,n>=1} w(m,n) q^{mn}
// with w = chi(n) n^p (chi_on_power) or chi(m) n^p otherwise.
QSeries<Rational> eisenstein_series(const Rational& constant, int power, const DirichletChar* chi,
                                    bool chi_on_power_index, long order);

// Serialization of exact series per the external interface.
std::string qseries_to_json(const QSeries<Rational>& s);
QSeries<Rational> qseries_from_json(const std::string& text);

}  // namespace mahler
