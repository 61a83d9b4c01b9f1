#pragma once

// The monodromy R^T R on V (x) W, built from its spectral form: it acts on the
// lambda-isotypic part of V(mu) (x) V(nu) as q^(c_lambda - c_mu - c_nu).

#include "qla/report.hpp"
#include "qla/repbuild.hpp"
#include "qla/tensorcg.hpp"

#include <vector>

namespace qla {

// c_lambda = (lambda, lambda + 2 rho)
Rational casimir_exponent(const CartanDatum &cd, const Weight &lambda);

struct IsotypicBlock {
    Weight weight;
    std::vector<SparseVec> hw;     // highest-weight vectors in V (x) W
    Rational exponent;             // q-exponent of the scalar, after the shift
    RatFunc scalar;
    std::vector<SparseVec> basis;  // spans the isotypic component
};

struct MonodromyMatrix {
    TensorProduct T;
    Weight mu, nu;
    SparseMatrix M;
    std::vector<IsotypicBlock> blocks;
    // M is q^(-shift) R^T R; nonzero only when the raw exponents leave (1/2)Z
    Rational shift = 0;
};

// Throws ObstructionDetected when the commutation or classical-limit oracle fails.
MonodromyMatrix monodromy_on_tensor(const IrrepModule &V, const IrrepModule &W);
Report verify_monodromy(const MonodromyMatrix &m);

struct AData {
    SparseMatrix minus_one;           // M - 1
    DenseMatrix<Rational> classical;  // d/dh (M - 1) at h = 0, q = e^h
};
AData extract_A(const MonodromyMatrix &m);

// Split Casimir sum_ab G^ab X_a (x) X_b of the v = 1 actions, G the trace form of V (+) W.
DenseMatrix<Rational> classical_split_casimir(const Module &V, const Module &W);
// The classical part of A against 2 (mu, nu) / (top eigenvalue) times the split Casimir.
Report check_classical_A(const MonodromyMatrix &m, const IrrepModule &V, const IrrepModule &W);

struct AdSubmodule {
    Report report;
    std::vector<SparseMatrix> A;  // A_a on W, one per adjoint basis vector
    std::size_t span_rank = 0;
};

// Contracts the V-slot of M - 1 with an adjoint copy inside End(V)* and checks
// that the resulting A_a on W transform in the adjoint under
// ad(x)(A) = rho(x_(1)) A rho(S(x_(2))).
AdSubmodule verify_ad_submodule(const MonodromyMatrix &m, const IrrepModule &V, const IrrepModule &W);

}  // namespace qla
