#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qla/error.hpp"
#include "qla/serialize.hpp"
#include "qla/tensorcg.hpp"

#include <fstream>

using namespace qla;

namespace {

void require_pass(const Report &r) {
    for (const auto &c : r.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.passed);
    }
}

std::size_t rank_of(const SparseMatrix &m) {
    DenseMatrix<RatFunc> d(m.rows(), m.cols());
    m.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) { d(i, j) = x; });
    return rank(d);
}

Json read_json(const std::string &path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return Json::parse(in);
}

}  // namespace

TEST_CASE("A1 adjoint square") {
    const auto V = adjoint_module(build_cartan(Series::A, 1));
    const auto T = tensor_square(V);
    CHECK(T.dim() == 9);
    // 3 (x) 3 = 5 + 3 + 1: one highest-weight vector each at weights 4, 2, 0
    CHECK(rank_of(T.E[0]) == 6);
    for (int w : {4, 2, 0}) CHECK(highest_weight_space(T, Weight{w}).basis.size() == 1);
    CHECK_THROWS_AS(highest_weight_space(T, Weight{-2}), Error);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(T.weights[T.index(a, b)] == V.weights[a] + V.weights[b]);
    const SparseMatrix c = T.E[0] * T.F[0] - T.F[0] * T.E[0];
    const SparseMatrix k2 = power(T.K(0), 2), ki2 = power(T.K_inv(0), 2);
    CHECK((RatFunc::q_pow(1) - RatFunc::q_pow(-1)) * c == k2 - ki2);
}

TEST_CASE("highest-weight multiplicities at theta") {
    for (const char *name : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
        const auto cd = parse_cartan(name);
        const auto V = adjoint_module(cd);
        const auto T = tensor_square(V);
        const auto hw = highest_weight_space(T, V.highest_weight);
        INFO(name);
        CHECK(static_cast<int>(hw.basis.size()) == tensor_multiplicity(cd, V.highest_weight, V.highest_weight, V.highest_weight));
        for (const auto &x : hw.basis) {
            CHECK(!vanishes_at_one(x));
            for (const auto &E : T.E) CHECK(is_zero(E.apply(x)));
        }
    }
    CHECK(highest_weight_space(tensor_square(adjoint_module(parse_cartan("A2"))), Weight{1, 1}).basis.size() == 2);
    CHECK(highest_weight_space(tensor_square(adjoint_module(parse_cartan("G2"))), Weight{0, 1}).basis.size() == 1);
}

TEST_CASE("antisymmetrization") {
    const auto V = adjoint_module(build_cartan(Series::A, 1));
    const auto T = tensor_square(V);
    const auto h = highest_weight_space(T, V.highest_weight).basis.front();
    const SparseVec a = antisymmetrize_hw(T, h);
    // multiplicity one: proportional to the input
    const std::size_t k = h.begin()->first;
    const RatFunc c = a.at(k) / h.at(k);
    CHECK(a == scaled(h, c));
    CHECK(sigma_tilde(T, a) == scaled(a, RatFunc(-1)));
    // e_0 (x) e_0 is fixed by sigma~
    CHECK_THROWS_AS(antisymmetrize_hw(T, SparseVec{{T.index(0, 0), RatFunc(1)}}), Error);
    try {
        antisymmetrize_hw(T, SparseVec{{T.index(1, 2), RatFunc(1)}, {T.index(2, 1), RatFunc(1)}});
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ClassicallyZero);
    }
}

TEST_CASE("A2 antisymmetrized highest-weight vector") {
    const auto V = adjoint_module(parse_cartan("A2"));
    const auto T = tensor_square(V);
    const auto hw = highest_weight_space(T, V.highest_weight);
    REQUIRE(hw.basis.size() == 2);
    const SparseVec v0 = antisymmetrize_hw(T, hw.basis.front());
    for (const auto &E : T.E) CHECK(is_zero(E.apply(v0)));
    CHECK(sigma_tilde(T, v0) == scaled(v0, RatFunc(-1)));
    const Json g = read_json(std::string(QLA_GOLDEN_DIR) + "/hw_A2.json");
    CHECK(sparse_vec_from_json(g.at("vhat0")) == v0);
}

TEST_CASE("CG embedding and inversion for A1") {
    const auto V = adjoint_module(build_cartan(Series::A, 1));
    const auto T = tensor_square(V);
    const SparseVec v0 = antisymmetrize_hw(T, highest_weight_space(T, V.highest_weight).basis.front());
    const auto K = cg_embedding(V, T, v0);
    require_pass(verify_embedding(V, T, K));
    const SparseMatrix emb = K.matrix(T.dim());
    CHECK(emb.rows() == 9);
    CHECK(emb.cols() == 3);
    emb.for_each([&](std::size_t bc, std::size_t a, const RatFunc &) { CHECK(T.weights[bc] == V.weights[a]); });

    // at v = 1: intertwines the classical actions and is swap-antisymmetric
    const auto e1 = classical_limit(emb);
    for (int which = 0; which < 2; ++which) {
        const auto x = classical_limit(which ? T.F[0] : T.E[0]);
        const auto y = classical_limit(which ? V.F[0] : V.E[0]);
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t a = 0; a < 3; ++a) {
                Rational lhs = 0, rhs = 0;
                for (std::size_t k = 0; k < 9; ++k) lhs += x(r, k) * e1(k, a);
                for (std::size_t b = 0; b < 3; ++b) rhs += e1(r, b) * y(b, a);
                CHECK(lhs == rhs);
            }
    }
    bool nonzero = false;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                CHECK(e1(T.index(b, c), a) == -e1(T.index(c, b), a));
                nonzero = nonzero || e1(T.index(b, c), a) != 0;
            }
    CHECK(nonzero);

    const SparseMatrix B = invert_cg(V, T, K, {});
    CHECK(B * emb == SparseMatrix::identity(3));
    require_pass(verify_module_map(V, T, B));
}

TEST_CASE("CG inversion with multiplicity two") {
    const auto V = adjoint_module(parse_cartan("A2"));
    const auto T = tensor_square(V);
    const auto hw = highest_weight_space(T, V.highest_weight);
    const SparseVec v0 = antisymmetrize_hw(T, hw.basis.front());
    const SparseVec other = symmetrize_hw(T, hw.basis.front());
    const auto K = cg_embedding(V, T, v0);
    require_pass(verify_embedding(V, T, K));
    const SparseMatrix B = invert_cg(V, T, K, {other});
    CHECK(B * K.matrix(T.dim()) == SparseMatrix::identity(V.dim()));
    CHECK(is_zero(B.apply(other)));
    require_pass(verify_module_map(V, T, B));
    // dropping the complement leaves the functional underdetermined
    CHECK_THROWS_AS(invert_cg(V, T, K, {}), Error);
}
