#pragma once

// Finite-type Cartan data, root systems, Weyl dimension formula and classical
// tensor product multiplicities. Pure integer/rational arithmetic; this module
// does not depend on the symbolic ring and serves as an oracle for it.

#include "qla/laurent.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qla {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

// Values (lambda(h_1), ..., lambda(h_rank)) on the Cartan generators.
using Weight = std::vector<int>;

struct CartanDatum {
    Series series = Series::A;
    int rank = 0;
    // cartan[i][j] = a_ij = alpha_j(h_i)
    std::vector<std::vector<int>> cartan;
    // d_i with d_i * a_ij symmetric; (alpha_i, alpha_i) = 2 d_i
    std::vector<int> symmetrizers;

    int a(int i, int j) const { return cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    int d(int i) const { return symmetrizers[static_cast<std::size_t>(i)]; }
    std::string name() const;

    friend bool operator==(const CartanDatum &x, const CartanDatum &y) {
        return x.series == y.series && x.rank == y.rank;
    }
};

struct Root {
    std::vector<int> simple;  // coordinates in the simple roots
    Weight weight;            // values on h_i
    int height() const;
};

struct RootSystem {
    std::vector<Root> positive_roots;  // ordered by height, then lexicographically
    Root highest_root;
    Weight rho;
    // (alpha_i, alpha_j) = d_i a_ij
    std::vector<std::vector<int>> bilinear_form;

    std::size_t size() const { return 2 * positive_roots.size(); }
};

CartanDatum build_cartan(Series series, int rank);
// Parses names such as "A2", "B3", "G2".
CartanDatum parse_cartan(std::string_view name);

RootSystem positive_roots(const CartanDatum &cd);

Weight root_weight(const CartanDatum &cd, const std::vector<int> &simple);
// lambda expressed in simple roots (rational in general).
std::vector<Rational> simple_coordinates(const CartanDatum &cd, const Weight &lambda);
// Integer simple-root coordinates; throws InternalInconsistency when lambda is
// not in the root lattice.
std::vector<int> root_coordinates(const CartanDatum &cd, const Weight &lambda);
Rational inner_product(const CartanDatum &cd, const Weight &a, const Weight &b);
bool is_dominant(const Weight &lambda);

Weight operator+(const Weight &a, const Weight &b);
Weight operator-(const Weight &a, const Weight &b);
Weight operator-(const Weight &a);
std::string to_string(const Weight &w);

long weyl_dim(const CartanDatum &cd, const Weight &lambda);
// Freudenthal multiplicities of all weights of the irreducible module V^lambda.
std::map<Weight, int> weight_multiplicities(const CartanDatum &cd, const Weight &lambda);
// Decomposition V^mu (x) V^nu = sum_lambda m_lambda V^lambda.
std::map<Weight, int> tensor_decomposition(const CartanDatum &cd, const Weight &mu, const Weight &nu);
int tensor_multiplicity(const CartanDatum &cd, const Weight &mu, const Weight &nu, const Weight &lambda);

}  // namespace qla
