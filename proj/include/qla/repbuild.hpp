#pragma once

// Weight modules of U_q(g) given by explicit matrices for E_i, F_i; K_i = q_i^{h_i/2}
// acts diagonally by v^{d_i mu(h_i)} on a vector of weight mu.

#include "qla/linalg.hpp"
#include "qla/report.hpp"
#include "qla/rootdata.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace qla {

inline constexpr std::size_t default_budget_dim = 4096;

struct Module {
    CartanDatum cd;
    std::vector<Weight> weights;    // weight of each basis vector
    std::vector<SparseMatrix> E, F;  // one per simple index

    std::size_t dim() const { return weights.size(); }
    int k_exponent(int i, std::size_t a) const { return cd.d(i) * weights[a][static_cast<std::size_t>(i)]; }
    SparseMatrix K(int i) const;
    SparseMatrix K_inv(int i) const;
    // Basis indices grouped by weight, each group in basis order.
    std::map<Weight, std::vector<std::size_t>> blocks() const;
};

// Irreducible module with a monomial basis: vector a is F_{letter[a]} applied to
// vector parent[a]; labels[a] is the full word, applied left to right to v_0.
struct IrrepModule : Module {
    Weight highest_weight;
    std::vector<std::vector<int>> labels;
    std::vector<std::size_t> parent;  // npos for the highest-weight vector
    std::vector<int> letter;           // -1 for the highest-weight vector

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

IrrepModule build_irrep(const CartanDatum &cd, const Weight &lambda, std::size_t budget_dim = default_budget_dim);
IrrepModule adjoint_module(const CartanDatum &cd, std::size_t budget_dim = default_budget_dim);

// Dual module: E -> -(q_i^-1 E)^T, F -> -(q_i F)^T, weights negated.
Module dual_module(const Module &m);

// Commutator, Serre, grading, weight and regularity checks, plus dimension and
// weight multiplicities against the root data when the module is irreducible.
Report verify_module(const Module &m);
Report verify_module(const IrrepModule &m);

}  // namespace qla
