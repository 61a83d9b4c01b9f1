#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qla/error.hpp"
#include "qla/parse.hpp"
#include "qla/serialize.hpp"

using namespace qla;

TEST_CASE("ring elements") {
    const LaurentPoly p = LaurentPoly::from_terms({{-3, Rational(2, 3)}, {4, Rational(-1)}});
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"-3":"2/3","4":"-1"})");
    CHECK(laurent_from_json(j) == p);
    CHECK(laurent_from_json(Json::object()).is_zero());

    const RatFunc x = parse_ratfunc("(q^2 - 1) / (3*q + v^-1)");
    CHECK(ratfunc_from_json(to_json(x)) == x);
    CHECK(to_json(x).at("var") == "v");
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":{"0":"1"},"den":{}})")), Error);
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"var":"x","num":{"0":"1"},"den":{"0":"1"}})")), Error);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"a":"1"})")), Error);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"1":"1/0x"})")), Error);
}

TEST_CASE("matrices and vectors") {
    SparseMatrix m(2, 3);
    m.set(0, 2, parse_ratfunc("q - q^-1"));
    m.set(1, 0, RatFunc(5));
    CHECK(sparse_from_json(to_json(m)) == m);
    const SparseVec x{{1, RatFunc(2)}, {4, parse_ratfunc("v")}};
    CHECK(sparse_vec_from_json(to_json(x)) == x);
    Json bad = to_json(m);
    bad["rows"] = 1;
    CHECK_THROWS_AS(sparse_from_json(bad), Error);
}

TEST_CASE("algebra json round trip") {
    for (const char *name : {"A1", "A2", "B2", "G2"}) {
        INFO(std::string(name));
        const auto A = build_generic(parse_cartan(name));
        const auto B = algebra_from_json(to_json(A));
        CHECK(B.same_table(A));
        CHECK(B.provenance == A.provenance);
        CHECK(B.normalized == A.normalized);
        CHECK(to_json(B).dump() == to_json(A).dump());
    }
    const auto E = build_sln_explicit({3, parse_ratfunc("1"), parse_ratfunc("q")});
    const auto F = algebra_from_json(to_json(E));
    CHECK(F.same_table(E));
    REQUIRE(F.params);
    CHECK(F.params->t == parse_ratfunc("q"));
    CHECK(F.provenance == Provenance::ExplicitSln);

    const auto N = canonical_normalize(build_generic(parse_cartan("A1")));
    CHECK(algebra_from_json(to_json(N)).normalized);

    Json bad = to_json(E);
    bad["provenance"] = "other";
    CHECK_THROWS_AS(algebra_from_json(bad), Error);
    bad = to_json(E);
    bad["constants"][0]["c"] = 99;
    CHECK_THROWS_AS(algebra_from_json(bad), Error);
}

TEST_CASE("report json keeps witnesses") {
    const Report r = check_q_antisymmetry(build_sln_explicit({3, RatFunc(1), parse_ratfunc("q")}));
    const Json j = to_json(r);
    REQUIRE(j.contains("q-antisymmetry"));
    CHECK(j["q-antisymmetry"]["passed"] == false);
    CHECK(!j["q-antisymmetry"]["witness"].get<std::string>().empty());
}

TEST_CASE("text table round trip") {
    const auto A = canonical_normalize(build_generic(parse_cartan("A1")));
    const std::string text = to_text(A);
    CHECK(text.find("f[X[1],X[-1]]^{H_1} = 1\n") != std::string::npos);
    CHECK(algebra_from_text(text, A).same_table(A));
    for (const char *t : {"0", "1", "q", "q^2 + 1"}) {
        const auto E = build_sln_explicit({4, RatFunc(1), parse_ratfunc(t)});
        CHECK(algebra_from_text(to_text(E), E).same_table(E));
    }
    const auto G = build_generic(parse_cartan("B2"));
    CHECK(algebra_from_text(to_text(G), G).same_table(G));
    CHECK_THROWS_AS(algebra_from_text("f[X[1],Y]^{H_1} = 1", A), Error);
    CHECK_THROWS_AS(algebra_from_text("nonsense", A), Error);
}
