#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qla/error.hpp"
#include "qla/qcombinatorics.hpp"
#include "qla/repbuild.hpp"

using namespace qla;

namespace {

void require_pass(const Report &r) {
    for (const auto &c : r.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("sl2 modules against the f^k v0 basis") {
    const auto cd = build_cartan(Series::A, 1);
    for (int lam = 0; lam <= 5; ++lam) {
        const auto m = build_irrep(cd, Weight{lam});
        REQUIRE(m.dim() == static_cast<std::size_t>(lam + 1));
        // F v_k = v_{k+1}, E v_k = [k][lam-k+1] v_{k-1}
        for (int k = 0; k <= lam; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            CHECK(m.weights[ku] == Weight{lam - 2 * k});
            CHECK(m.labels[ku] == std::vector<int>(ku, 0));
            if (k < lam) CHECK(m.F[0].column(ku) == SparseVec{{ku + 1, RatFunc(1)}});
            else CHECK(m.F[0].column(ku).empty());
            if (k > 0) CHECK(m.E[0].column(ku) == SparseVec{{ku - 1, RatFunc(q_int(k) * q_int(lam - k + 1))}});
            else CHECK(m.E[0].column(ku).empty());
        }
    }
    const auto adj = build_irrep(cd, Weight{2});
    const SparseMatrix c = adj.E[0] * adj.F[0] - adj.F[0] * adj.E[0];
    CHECK(c == SparseMatrix::diagonal({RatFunc(q_int(2)), RatFunc(0), RatFunc(-q_int(2))}));
}

TEST_CASE("adjoint modules") {
    const std::map<std::string, std::size_t> dims{{"A1", 3}, {"A2", 8}, {"A3", 15}, {"B2", 10}, {"C3", 21}, {"G2", 14}};
    for (const auto &[name, d] : dims) {
        INFO(name);
        const auto m = adjoint_module(parse_cartan(name));
        CHECK(m.dim() == d);
        require_pass(verify_module(m));
    }
}

TEST_CASE("other irreducibles") {
    require_pass(verify_module(build_irrep(parse_cartan("A2"), Weight{2, 1})));
    require_pass(verify_module(build_irrep(parse_cartan("B2"), Weight{1, 1})));
    require_pass(verify_module(build_irrep(parse_cartan("G2"), Weight{1, 0})));
    require_pass(verify_module(build_irrep(parse_cartan("A3"), Weight{0, 1, 0})));
    CHECK_THROWS_AS(build_irrep(parse_cartan("A2"), Weight{-1, 2}), Error);
    try {
        (void)build_irrep(parse_cartan("A2"), Weight{3, 3}, 20);
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("mutation is detected") {
    auto m = adjoint_module(parse_cartan("A2"));
    const auto &col = m.E[0].column(3);
    REQUIRE(!col.empty());
    const auto [r, x] = *col.begin();
    m.E[0].set(r, 3, x + RatFunc::q_pow(1));
    const Report rep = verify_module(m);
    CHECK(!rep.passed());
    CHECK(!rep.find("commutator")->passed);
}

TEST_CASE("classical sl2 adjoint") {
    // Chevalley basis e, h, f with ad matrices; basis v0 = e, v1 = [f,e] = -h, v2 = [f,-h] = -2f
    // so f: v0 -> v1 -> v2, e: v1 -> [e,-h] = 2e = 2 v0, v2 -> [e,-2f] = -2h = 2 v1.
    const auto m = adjoint_module(build_cartan(Series::A, 1));
    const auto e = classical_limit(m.E[0]);
    const auto f = classical_limit(m.F[0]);
    const Rational E[3][3] = {{0, 2, 0}, {0, 0, 2}, {0, 0, 0}};
    const Rational F[3][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(e(i, j) == E[i][j]);
            CHECK(f(i, j) == F[i][j]);
        }
}

TEST_CASE("dual modules") {
    const auto m = build_irrep(parse_cartan("A2"), Weight{1, 0});
    const Module d = dual_module(m);
    require_pass(verify_module(d));
    CHECK(d.weights[0] == Weight{-1, 0});
}

TEST_CASE("bar invariant entries") {
    const auto m = adjoint_module(parse_cartan("B2"));
    for (const auto &X : m.E) X.for_each([](std::size_t, std::size_t, const RatFunc &x) { CHECK(qconjugate(x) == x); });
    for (const auto &X : m.F) X.for_each([](std::size_t, std::size_t, const RatFunc &x) { CHECK(qconjugate(x) == x); });
}
