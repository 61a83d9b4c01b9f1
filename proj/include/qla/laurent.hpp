#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qla {

using Rational = mpq_class;

// Laurent polynomial in v = q^(1/2) with exact rational coefficients.
// Stored densely from the lowest nonzero exponent; the zero polynomial owns no
// coefficients and leading/trailing coefficients are always nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational &c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational &c, int v_exponent);
    static LaurentPoly v_pow(int k) { return monomial(1, k); }
    static LaurentPoly q_pow(int k) { return monomial(1, 2 * k); }
    // Builds from (exponent, coefficient) pairs; duplicates are summed.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>> &terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int exponent) const;
    const Rational &leading() const { return coeffs_.back(); }
    const Rational &trailing() const { return coeffs_.front(); }
    // Nonzero terms in increasing exponent order.
    std::vector<std::pair<int, Rational>> terms() const;
    bool all_exponents_even() const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    LaurentPoly &operator*=(const Rational &c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &c) { return a *= c; }
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

    // Multiplies by v^k.
    LaurentPoly shifted(int k) const;
    // v -> v^-1.
    LaurentPoly qconjugate() const;
    Rational eval_at_one() const;
    // d/dh at h = 0 with v = e^(h/2): (1/2) * sum_k k * c_k.
    Rational h_derivative_at_zero() const;
    // Multiplicity of the root v = 1.
    int order_at_one() const;

    // Exact quotient this / d, or nullopt if d does not divide this in Q[v, v^-1].
    std::optional<LaurentPoly> exact_div(const LaurentPoly &d) const;

    // Human-readable form in q when every exponent is even, otherwise in v.
    std::string to_string() const;
    std::string to_string(char var) const;

    // Raw access for polynomial algorithms: coefficient of v^(low + i).
    const std::vector<Rational> &dense() const noexcept { return coeffs_; }
    static LaurentPoly from_dense(int low, std::vector<Rational> coeffs);

private:
    void trim();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

// Monic gcd (lowest exponent 0) of two polynomials viewed in Q[v] after removing
// powers of v; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b);

std::string rational_to_string(const Rational &r);

}  // namespace qla
