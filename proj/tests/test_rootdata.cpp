#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qla/error.hpp"
#include "qla/rootdata.hpp"

#include <set>

using namespace qla;

namespace {

bool symmetrized(const CartanDatum &cd) {
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            if (cd.d(i) * cd.a(i, j) != cd.d(j) * cd.a(j, i)) return false;
    return true;
}

// Root count oracle: orbit of the simple roots under simple reflections.
std::size_t reflection_closure_size(const CartanDatum &cd) {
    std::set<Weight> roots;
    std::vector<Weight> todo;
    for (int i = 0; i < cd.rank; ++i) {
        Weight w(static_cast<std::size_t>(cd.rank));
        for (int k = 0; k < cd.rank; ++k) w[static_cast<std::size_t>(k)] = cd.a(k, i);
        if (roots.insert(w).second) todo.push_back(w);
    }
    while (!todo.empty()) {
        Weight w = todo.back();
        todo.pop_back();
        for (int i = 0; i < cd.rank; ++i) {
            Weight s = w;
            for (int k = 0; k < cd.rank; ++k) s[static_cast<std::size_t>(k)] -= w[static_cast<std::size_t>(i)] * cd.a(k, i);
            if (roots.insert(s).second) todo.push_back(s);
        }
    }
    return roots.size();
}

}  // namespace

TEST_CASE("cartan matrices") {
    const auto a1 = build_cartan(Series::A, 1);
    CHECK(a1.cartan == std::vector<std::vector<int>>{{2}});
    CHECK(a1.symmetrizers == std::vector<int>{1});
    const auto a2 = build_cartan(Series::A, 2);
    CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(a2.symmetrizers == std::vector<int>{1, 1});
    const auto g2 = build_cartan(Series::G, 2);
    CHECK(g2.a(0, 1) * g2.a(1, 0) == 3);
    CHECK(g2.symmetrizers == std::vector<int>{1, 3});
    const auto b2 = build_cartan(Series::B, 2);
    CHECK(b2.symmetrizers == std::vector<int>{2, 1});
    const auto c3 = build_cartan(Series::C, 3);
    CHECK(c3.symmetrizers == std::vector<int>{1, 1, 2});
    for (const char *name : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        const auto cd = parse_cartan(name);
        CHECK(cd.name() == name);
        CHECK(symmetrized(cd));
        for (int i = 0; i < cd.rank; ++i) {
            CHECK(cd.a(i, i) == 2);
            for (int j = 0; j < cd.rank; ++j)
                if (i != j) {
                    CHECK(cd.a(i, j) <= 0);
                    CHECK((cd.a(i, j) == 0) == (cd.a(j, i) == 0));
                }
        }
    }
    CHECK_THROWS_AS(build_cartan(Series::G, 3), Error);
    CHECK_THROWS_AS(build_cartan(Series::D, 3), Error);
    CHECK_THROWS_AS(parse_cartan("X2"), Error);
    CHECK_THROWS_AS(parse_cartan("A"), Error);
}

TEST_CASE("root systems") {
    const auto a1 = positive_roots(build_cartan(Series::A, 1));
    CHECK(a1.positive_roots.size() == 1);
    CHECK(a1.highest_root.weight == Weight{2});
    const auto a2 = positive_roots(build_cartan(Series::A, 2));
    CHECK(a2.positive_roots.size() == 3);
    CHECK(a2.highest_root.weight == Weight{1, 1});
    const auto g2cd = build_cartan(Series::G, 2);
    const auto g2 = positive_roots(g2cd);
    CHECK(g2.positive_roots.size() == 6);
    CHECK(2 * g2.positive_roots.size() == reflection_closure_size(g2cd));
    const std::map<std::string, std::size_t> counts{{"A3", 6}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"F4", 24}, {"E6", 36}, {"E8", 120}};
    for (const auto &[name, n] : counts) {
        const auto cd = parse_cartan(name);
        const auto rs = positive_roots(cd);
        CHECK(rs.positive_roots.size() == n);
        CHECK(2 * n == reflection_closure_size(cd));
        CHECK(is_dominant(rs.highest_root.weight));
        // every other root lies below theta
        for (const auto &r : rs.positive_roots)
            for (std::size_t k = 0; k < r.simple.size(); ++k) CHECK(r.simple[k] <= rs.highest_root.simple[k]);
    }
}

TEST_CASE("weyl dimension") {
    const auto a2 = build_cartan(Series::A, 2);
    CHECK(weyl_dim(a2, Weight{1, 1}) == 8);
    CHECK(weyl_dim(build_cartan(Series::A, 1), Weight{2}) == 3);
    CHECK(weyl_dim(build_cartan(Series::G, 2), positive_roots(build_cartan(Series::G, 2)).highest_root.weight) == 14);
    CHECK(weyl_dim(build_cartan(Series::G, 2), Weight{1, 0}) == 7);
    CHECK(weyl_dim(a2, Weight{3, 0}) == 10);
    CHECK_THROWS_AS(weyl_dim(a2, Weight{-1, 0}), Error);
    for (const char *name : {"A1", "A2", "A3", "A4", "B2", "C3", "D4", "G2"}) {
        const auto cd = parse_cartan(name);
        const auto rs = positive_roots(cd);
        CHECK(weyl_dim(cd, rs.highest_root.weight) == static_cast<long>(rs.size()) + cd.rank);
    }
}

TEST_CASE("weight multiplicities") {
    const auto a2 = build_cartan(Series::A, 2);
    const auto m = weight_multiplicities(a2, Weight{1, 1});
    CHECK(m.size() == 7);
    CHECK(m.at(Weight{0, 0}) == 2);
    for (const char *name : {"A3", "B2", "G2", "C3"}) {
        const auto cd = parse_cartan(name);
        const auto rs = positive_roots(cd);
        const auto mt = weight_multiplicities(cd, rs.highest_root.weight);
        CHECK(mt.at(Weight(static_cast<std::size_t>(cd.rank), 0)) == cd.rank);
        long total = 0;
        for (const auto &kv : mt) total += kv.second;
        CHECK(total == weyl_dim(cd, rs.highest_root.weight));
    }
}

TEST_CASE("tensor multiplicities") {
    const auto a1 = build_cartan(Series::A, 1);
    CHECK(tensor_multiplicity(a1, Weight{2}, Weight{2}, Weight{2}) == 1);
    CHECK(tensor_decomposition(a1, Weight{2}, Weight{2}) == std::map<Weight, int>{{{0}, 1}, {{2}, 1}, {{4}, 1}});
    const auto a2 = build_cartan(Series::A, 2);
    CHECK(tensor_multiplicity(a2, Weight{1, 1}, Weight{1, 1}, Weight{1, 1}) == 2);
    const auto g2 = build_cartan(Series::G, 2);
    const Weight tg = positive_roots(g2).highest_root.weight;
    CHECK(tensor_multiplicity(g2, tg, tg, tg) == 1);
    for (const char *name : {"A1", "A2", "A3", "B2", "G2"}) {
        const auto cd = parse_cartan(name);
        const Weight t = positive_roots(cd).highest_root.weight;
        long sum = 0;
        for (const auto &[l, m] : tensor_decomposition(cd, t, t)) sum += m * weyl_dim(cd, l);
        const long d = weyl_dim(cd, t);
        CHECK(sum == d * d);
    }
    CHECK(tensor_multiplicity(a2, Weight{1, 0}, Weight{2, 1}, Weight{2, 0}) ==
          tensor_multiplicity(a2, Weight{2, 1}, Weight{1, 0}, Weight{2, 0}));
}
