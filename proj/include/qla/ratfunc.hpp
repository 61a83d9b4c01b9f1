#pragma once

#include "qla/laurent.hpp"

#include <string>

namespace qla {

// Element of Q(v). Canonical form: gcd(num, den) = 1, den is a monic polynomial
// with nonzero constant term (lowest exponent 0); the numerator absorbs the
// remaining power of v. Equal values therefore have equal representations.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational &c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly &p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly &num, const LaurentPoly &den);

    static RatFunc v_pow(int k) { return RatFunc(LaurentPoly::v_pow(k)); }
    static RatFunc q_pow(int k) { return RatFunc(LaurentPoly::q_pow(k)); }

    const LaurentPoly &num() const noexcept { return num_; }
    const LaurentPoly &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.coeff(0) == 1; }
    bool is_laurent() const { return den_.is_constant(); }
    // Denominator nonzero at v = 1, i.e. an element of the local ring at h = 0.
    bool is_regular_at_one() const { return den_.eval_at_one() != 0; }
    // Regular with nonzero value at v = 1 (a unit of the local ring).
    bool is_invertible_at_one() const { return is_regular_at_one() && num_.eval_at_one() != 0; }

    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);
    friend RatFunc operator+(RatFunc a, const RatFunc &b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc &b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc &b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc &b) { return a /= b; }
    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    RatFunc inverse() const;
    RatFunc qconjugate() const;
    // Value at v = 1; throws DenominatorVanishes when the denominator has a root there.
    Rational classical_limit() const;
    // d/dh at h = 0 with v = e^(h/2); requires regularity at v = 1.
    Rational h_derivative_at_zero() const;
    // Order of vanishing at v = 1 (negative for poles).
    int valuation_at_one() const;
    // Square root in Q(v) if one exists.
    std::optional<RatFunc> sqrt() const;

    std::string to_string() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

inline RatFunc qconjugate(const RatFunc &p) { return p.qconjugate(); }
inline LaurentPoly qconjugate(const LaurentPoly &p) { return p.qconjugate(); }
inline Rational classical_limit(const RatFunc &p) { return p.classical_limit(); }
inline Rational h_derivative_at_zero(const LaurentPoly &p) { return p.h_derivative_at_zero(); }
inline Rational h_derivative_at_zero(const RatFunc &p) { return p.h_derivative_at_zero(); }

}  // namespace qla
