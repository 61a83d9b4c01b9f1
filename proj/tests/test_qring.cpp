#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qla/error.hpp"
#include "qla/parse.hpp"
#include "qla/qcombinatorics.hpp"
#include "qla/ratfunc.hpp"

using namespace qla;

namespace {

RatFunc q() { return RatFunc::q_pow(1); }
RatFunc qi() { return RatFunc::q_pow(-1); }

// binom(a,b) = q^b binom(a-1,b) + q^(b-a) binom(a-1,b-1), symmetric Gauss recursion
LaurentPoly gauss_binomial(int a, int b) {
    if (b < 0 || b > a) return LaurentPoly();
    if (b == 0 || b == a) return LaurentPoly(1);
    return LaurentPoly::q_pow(b) * gauss_binomial(a - 1, b) + LaurentPoly::q_pow(b - a) * gauss_binomial(a - 1, b - 1);
}

long binomial(int a, int b) {
    long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

}  // namespace

TEST_CASE("qconjugate") {
    CHECK(qconjugate(q()) == qi());
    CHECK(qconjugate(q() + qi()) == q() + qi());
    CHECK(qconjugate(RatFunc(3)) == RatFunc(3));
    const RatFunc x = parse_ratfunc("(2q^3 - v + 5)/(q^2 + 3q + 1)");
    const RatFunc y = parse_ratfunc("(q - 7)/(v^3 + 2)");
    CHECK(qconjugate(qconjugate(x)) == x);
    CHECK(qconjugate(x * y) == qconjugate(x) * qconjugate(y));
    CHECK(qconjugate(x + y) == qconjugate(x) + qconjugate(y));
    CHECK(classical_limit(qconjugate(x)) == classical_limit(x));
}

TEST_CASE("classical limit") {
    CHECK(classical_limit(q() - qi()) == 0);
    for (int n = 1; n <= 6; ++n) {
        const RatFunc qn = (RatFunc::q_pow(n) - RatFunc::q_pow(-n)) / (q() - qi());
        CHECK(classical_limit(qn) == n);
    }
    try {
        (void)classical_limit(RatFunc(1) / (q() - qi()));
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DenominatorVanishes);
    }
}

TEST_CASE("h derivative") {
    CHECK(h_derivative_at_zero((q() - qi()).num()) == 2);
    CHECK(h_derivative_at_zero(LaurentPoly(7)) == 0);
    CHECK(h_derivative_at_zero(LaurentPoly::q_pow(1)) == 1);
    // d/dh of e^h / (1 + e^h) at 0 is 1/4
    CHECK(h_derivative_at_zero(q() / (RatFunc(1) + q())) == Rational(1, 4));
}

TEST_CASE("q integers and binomials") {
    CHECK(q_int(2) == LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1));
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(-3) == -q_int(3));
    CHECK(q_int(2, 3) == LaurentPoly::q_pow(3) + LaurentPoly::q_pow(-3));
    CHECK(q_binomial(3, 1) == LaurentPoly::q_pow(2) + LaurentPoly(1) + LaurentPoly::q_pow(-2));
    for (int a = 0; a <= 7; ++a)
        for (int b = 0; b <= a; ++b) {
            const LaurentPoly c = q_binomial(a, b);
            CHECK(c == gauss_binomial(a, b));
            CHECK(c == q_binomial(a, a - b));
            CHECK(qconjugate(c) == c);
            CHECK(c.eval_at_one() == binomial(a, b));
            CHECK(q_binomial(a, b, 2).eval_at_one() == binomial(a, b));
        }
    CHECK_THROWS_AS(q_binomial(2, 3), Error);
    CHECK_THROWS_AS(q_binomial(2, -1), Error);
}

TEST_CASE("ratfunc normal form") {
    const RatFunc a(LaurentPoly::q_pow(2) - LaurentPoly(1), LaurentPoly::q_pow(1) - LaurentPoly(1));
    CHECK(a == RatFunc(LaurentPoly::q_pow(1) + LaurentPoly(1)));
    CHECK(a.is_laurent());
    const RatFunc b = RatFunc(2) / RatFunc(LaurentPoly::v_pow(3) * LaurentPoly(4) + LaurentPoly::v_pow(5) * LaurentPoly(2));
    CHECK(b.den().low() == 0);
    CHECK(b.den().leading() == 1);
    CHECK(b * b.inverse() == RatFunc(1));
    CHECK((b - b).is_zero());
}

TEST_CASE("square roots") {
    const RatFunc x = parse_ratfunc("(q + 2)/(3q - 1)");
    auto r = (x * x).sqrt();
    REQUIRE(r);
    CHECK(*r * *r == x * x);
    CHECK(!parse_ratfunc("q + 1").sqrt());
    CHECK(parse_ratfunc("4q").sqrt() == RatFunc(2) * RatFunc::v_pow(1));
}

TEST_CASE("parser") {
    CHECK(parse_ratfunc("1") == RatFunc(1));
    CHECK(parse_ratfunc("q") == q());
    CHECK(parse_ratfunc("-1") == RatFunc(-1));
    CHECK(parse_ratfunc("q^-1") == qi());
    CHECK(parse_ratfunc("q^(1/2)") == RatFunc::v_pow(1));
    CHECK(parse_ratfunc("q^(-3/2)") == RatFunc::v_pow(-3));
    CHECK(parse_ratfunc("2q + 1") == RatFunc(2) * q() + RatFunc(1));
    CHECK(parse_ratfunc("(q+q^-1)/2") == (q() + qi()) / RatFunc(2));
    CHECK(parse_ratfunc("(1+q)^2") == (RatFunc(1) + q()) * (RatFunc(1) + q()));
    CHECK_THROWS_AS(parse_ratfunc("1/0"), Error);
    CHECK_THROWS_AS(parse_ratfunc("q^(1/3)"), Error);
    CHECK_THROWS_AS(parse_ratfunc("x"), Error);
    CHECK_THROWS_AS(parse_ratfunc("(q"), Error);
}

TEST_CASE("printing") {
    CHECK(RatFunc(2).to_string() == "2");
    CHECK((RatFunc(2) * q() * q() - q() + RatFunc(3)).to_string() == "2*q^2 - q + 3");
    CHECK(RatFunc::v_pow(-3).to_string() == "v^-3");
    CHECK(parse_ratfunc((q() / (q() + RatFunc(1))).to_string()) == q() / (q() + RatFunc(1)));
}
