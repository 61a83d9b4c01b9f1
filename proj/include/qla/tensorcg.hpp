#pragma once

// Tensor products under Delta(E) = E (x) K^-1 + K (x) E (same for F), highest
// weight vectors, Clebsch-Gordan embeddings of the adjoint into its square and
// the bracket map obtained by inverting them.

#include "qla/repbuild.hpp"

#include <vector>

namespace qla {

struct TensorProduct : Module {
    std::size_t left_dim = 0, right_dim = 0;
    std::size_t index(std::size_t a, std::size_t b) const { return a * right_dim + b; }
};

TensorProduct tensor_product(const Module &V, const Module &W);
inline TensorProduct tensor_square(const Module &V) { return tensor_product(V, V); }

// Exchange of tensor factors (square only).
SparseVec swap_factors(const TensorProduct &T, const SparseVec &x);
// swap composed with coefficientwise q-conjugation; commutes with Delta(E_i), Delta(F_i).
SparseVec sigma_tilde(const TensorProduct &T, const SparseVec &x);

// Clears denominators, removes the polynomial content and scales by a rational
// so the first coordinate that is nonzero at v = 1 equals 1 there.
SparseVec normalize_vector(const SparseVec &x);
bool vanishes_at_one(const SparseVec &x);

struct HWSpace {
    Weight weight;
    std::vector<SparseVec> basis;
};

// Joint kernel of the Delta(E_i) on the weight-w subspace. Throws EmptySpace.
HWSpace highest_weight_space(const TensorProduct &T, const Weight &w);

// (x - sigma_tilde(x)) / 2; throws ClassicallyZero when the result vanishes at v = 1.
SparseVec antisymmetrize_hw(const TensorProduct &T, const SparseVec &x);
// (x + sigma_tilde(x)) / 2, not rescaled.
SparseVec symmetrize_hw(const TensorProduct &T, const SparseVec &x);

struct CGEmbedding {
    std::vector<SparseVec> vhat;  // image of basis vector a of V, coordinates in T
    RatFunc K(std::size_t a, std::size_t bc) const;
    // dim T x dim V matrix with columns vhat[a]
    SparseMatrix matrix(std::size_t tensor_dim) const;
};

// vhat_0 = v0, vhat_a = Delta(F_letter[a]) vhat_parent[a].
CGEmbedding cg_embedding(const IrrepModule &V, const TensorProduct &T, const SparseVec &v0);
Report verify_embedding(const IrrepModule &V, const TensorProduct &T, const CGEmbedding &K);

// The module map B : T -> V with B(vhat_a) = v_a and B(others) = 0, as a dim V x dim T
// matrix; f_ab^c = B(c, T.index(a, b)). Throws SingularSystem.
SparseMatrix invert_cg(const IrrepModule &V, const TensorProduct &T, const CGEmbedding &K, const std::vector<SparseVec> &others);
// pi(x) B = B Delta(x) for x in E_i, F_i, K_i.
Report verify_module_map(const Module &V, const TensorProduct &T, const SparseMatrix &B);

}  // namespace qla
