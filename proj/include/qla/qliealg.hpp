#pragma once

// Quantum Lie algebras as structure-constant tables over Q(v): the explicit
// (sl_n)(s,t) family, the generic construction through the adjoint module, and
// the structural checks.

#include "qla/linalg.hpp"
#include "qla/report.hpp"
#include "qla/repbuild.hpp"
#include "qla/rootdata.hpp"
#include "qla/tensorcg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qla {

struct BasisElement {
    bool cartan = false;
    std::vector<int> root;  // simple-root coordinates, all zero for Cartan elements
    int index = 0;          // 1-based index of H_k
    int i = 0, j = 0;       // X_ij for the explicit sl_n basis, 0 otherwise
    std::string name;

    friend bool operator==(const BasisElement &, const BasisElement &) = default;
};

struct SlnParams {
    int n = 2;
    RatFunc s{1}, t{0};
};

enum class Provenance { ExplicitSln, GenericPipeline };
std::string to_string(Provenance p);

struct QuantumLieAlgebra {
    CartanDatum cd;
    std::vector<BasisElement> basis;
    // [e_a, e_b] = sum_c f_ab^c e_c; only nonzero brackets are stored
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> constants;
    Provenance provenance = Provenance::GenericPipeline;
    std::optional<SlnParams> params;
    bool normalized = false;
    // Adjoint action of (possibly rescaled) generators E_i, F_i in this basis;
    // K_i acts through the grades. Present for generic outputs.
    std::vector<SparseMatrix> action_E, action_F;
    // lowering words of the basis vectors from the highest root vector (generic outputs)
    std::vector<std::vector<int>> words;
    // v = 1 value of the change from the word basis to this one (empty: identity)
    DenseMatrix<Rational> frame;

    std::size_t dim() const { return basis.size(); }
    RatFunc f(std::size_t a, std::size_t b, std::size_t c) const;
    const SparseVec &bracket(std::size_t a, std::size_t b) const;
    void set(std::size_t a, std::size_t b, std::size_t c, const RatFunc &x);
    std::optional<std::size_t> find_root(const std::vector<int> &root) const;
    std::optional<std::size_t> find_cartan(int k) const;
    std::optional<std::size_t> find_x(int i, int j) const;
    // grade of a basis element as a weight (values on h_i)
    Weight grade_weight(std::size_t a) const;

    // contents only (provenance, params and action excluded)
    bool same_table(const QuantumLieAlgebra &o) const { return cd == o.cd && basis == o.basis && constants == o.constants; }
};

QuantumLieAlgebra build_sln_explicit(const SlnParams &p);

// Intermediate objects of the generic construction, kept for verification.
struct GenericPipeline {
    IrrepModule V;
    TensorProduct T;
    HWSpace hw;
    SparseVec v0;
    std::vector<SparseVec> others;
    CGEmbedding K;
    SparseMatrix B;
    QuantumLieAlgebra algebra;
};

GenericPipeline run_generic_pipeline(const CartanDatum &cd, std::size_t budget_dim = default_budget_dim);
QuantumLieAlgebra build_generic(const CartanDatum &cd, std::size_t budget_dim = default_budget_dim);

// New basis given by the columns of P in old coordinates; the action and frame follow.
QuantumLieAlgebra change_basis(const QuantumLieAlgebra &A, const SparseMatrix &P);
QuantumLieAlgebra canonical_normalize(const QuantumLieAlgebra &A);

Report check_gradation(const QuantumLieAlgebra &A);
Report check_q_antisymmetry(const QuantumLieAlgebra &A);
Report check_classical_limit(const QuantumLieAlgebra &A);
// Uses the stored adjoint action; fails when none is stored.
Report check_ad_invariance(const QuantumLieAlgebra &A);
// B written in V's basis: coords[a] are the V-coordinates of basis element a.
Report check_ad_invariance(const QuantumLieAlgebra &A, const IrrepModule &V, const SparseMatrix &coords);
Report check_tau_sln(const QuantumLieAlgebra &A, int n);

struct RootTables {
    // per root basis element: l(H_k), r(H_k) for k = 1..number of Cartan elements
    std::map<std::size_t, std::vector<RatFunc>> l, r;
};
RootTables extract_roots(const QuantumLieAlgebra &A);
// l/r consistency: r_ij(H_k) = -l_ji(H_k) for explicit sl_n; r = conj(l) when
// q-antisymmetric; l = r = alpha at v = 1.
Report check_lr_identity(const QuantumLieAlgebra &A);

// Classical realization of the v=1 algebra by matrices, used as an oracle.
struct ClassicalOracle {
    std::vector<DenseMatrix<Rational>> matrices;  // one per basis element
    bool up_to_scalar = true;
    Rational scale = 1;  // expected ratio f(1) / commutator when !up_to_scalar
};
std::optional<ClassicalOracle> classical_oracle(const QuantumLieAlgebra &A);

struct FitResult {
    bool matched = false;
    std::optional<SlnParams> params;  // fitted (or fixed) s, t
    RatFunc epsilon;                  // t / s (zero when s = 0)
    bool epsilon_bar_invariant = false;
    RatFunc product_scale{1};         // kappa when fitting is disabled
    std::vector<std::vector<RatFunc>> cartan_map;  // C[k][m]: H_k -> sum_m C_km H^G_m
    std::map<std::string, RatFunc> root_scalars;   // X_ij -> lambda X^G_root
    std::vector<std::string> mismatches;           // witnesses
    std::size_t compared = 0;
    // Explicit basis element a in generic coordinates.
    SparseMatrix phi;
};

// Matches a generic sl_n algebra with the explicit family. When fixed is set the
// parameters are not fitted; only an overall product scale is allowed.
FitResult fit_explicit(const QuantumLieAlgebra &generic, std::optional<SlnParams> fixed = std::nullopt);
// Transports the generic adjoint action to the explicit basis through phi.
QuantumLieAlgebra with_transported_action(const QuantumLieAlgebra &explicit_alg, const QuantumLieAlgebra &generic, const FitResult &fit);
// Same, with the generic algebra and fit computed here.
QuantumLieAlgebra with_sln_action(const QuantumLieAlgebra &explicit_alg, std::size_t budget_dim = default_budget_dim);

}  // namespace qla
