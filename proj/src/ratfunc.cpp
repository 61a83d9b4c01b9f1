#include "qla/ratfunc.hpp"

#include "qla/error.hpp"

namespace qla {

RatFunc::RatFunc(const LaurentPoly &num, const LaurentPoly &den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (!den_.is_constant()) {
        const LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.exact_div(g);
            den_ = *den_.exact_div(g);
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc &RatFunc::operator+=(const RatFunc &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        else if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    const LaurentPoly g = poly_gcd(den_, o.den_);
    const LaurentPoly a = *den_.exact_div(g);
    const LaurentPoly b = *o.den_.exact_div(g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
    normalize();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) { return *this += -o; }

RatFunc &RatFunc::operator*=(const RatFunc &o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc &RatFunc::operator/=(const RatFunc &o) { return *this *= o.inverse(); }

RatFunc RatFunc::qconjugate() const { return RatFunc(num_.qconjugate(), den_.qconjugate()); }

Rational RatFunc::classical_limit() const {
    const Rational d = den_.eval_at_one();
    if (d == 0) throw Error(ErrorKind::DenominatorVanishes, "denominator of " + to_string() + " vanishes at v = 1");
    return num_.eval_at_one() / d;
}

Rational RatFunc::h_derivative_at_zero() const {
    const Rational d = den_.eval_at_one();
    if (d == 0) throw Error(ErrorKind::DenominatorVanishes, "denominator of " + to_string() + " vanishes at v = 1");
    const Rational n = num_.eval_at_one();
    return (num_.h_derivative_at_zero() * d - n * den_.h_derivative_at_zero()) / (d * d);
}

int RatFunc::valuation_at_one() const {
    if (is_zero()) return 0;
    return num_.order_at_one() - den_.order_at_one();
}

namespace {

std::optional<Rational> rational_sqrt(const Rational &r) {
    if (r < 0) return std::nullopt;
    mpz_class n = r.get_num();
    mpz_class d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

std::optional<LaurentPoly> laurent_sqrt(const LaurentPoly &p) {
    if (p.is_zero()) return LaurentPoly();
    if (p.low() % 2 != 0 || p.high() % 2 != 0) return std::nullopt;
    const auto &c = p.dense();
    const std::size_t n = (c.size() - 1) / 2;  // degree of the root
    auto lead = rational_sqrt(c.back());
    if (!lead) return std::nullopt;
    // Coefficients of the root from the top down: s[n] = sqrt(lead),
    // s[k] = (c[n + k] - sum_{k<i,j; i+j=n+k} s_i s_j) / (2 s[n]).
    std::vector<Rational> s(n + 1);
    s[n] = *lead;
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = c[n + k];
        for (std::size_t i = k + 1; i <= n; ++i) {
            const std::size_t j = n + k - i;
            if (j > k && j <= n) acc -= s[i] * s[j];
        }
        s[k] = acc / (2 * s[n]);
    }
    LaurentPoly root = LaurentPoly::from_dense(p.low() / 2, s);
    if (root * root != p) return std::nullopt;
    return root;
}

}  // namespace

std::optional<RatFunc> RatFunc::sqrt() const {
    if (is_zero()) return RatFunc();
    auto n = laurent_sqrt(num_);
    auto d = laurent_sqrt(den_);
    if (!n || !d) return std::nullopt;
    RatFunc r(*n, *d);
    if (r.num_.eval_at_one() * r.den_.eval_at_one() < 0) r = -r;
    return r;
}

std::string RatFunc::to_string() const {
    const char var = (num_.all_exponents_even() && den_.all_exponents_even()) ? 'q' : 'v';
    if (den_.is_constant() && den_.coeff(0) == 1) return num_.to_string(var);
    std::string n = num_.to_string(var);
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string(var) + ")";
}

}  // namespace qla
