#include "qla/error.hpp"
#include "qla/qliealg.hpp"

namespace qla {

namespace {

// image of the explicit basis element a under phi, in generic coordinates
SparseVec image(const SparseMatrix &phi, std::size_t a) { return phi.column(a); }

SparseVec apply_bracket(const QuantumLieAlgebra &G, const SparseVec &x, const SparseVec &y) {
    SparseVec out;
    for (const auto &[a, xa] : x)
        for (const auto &[b, yb] : y) axpy(out, xa * yb, G.bracket(a, b));
    return out;
}

}  // namespace

FitResult fit_explicit(const QuantumLieAlgebra &G, std::optional<SlnParams> fixed) {
    FitResult res;
    if (G.cd.series != Series::A) throw Error(ErrorKind::InvalidType, "fit needs a type A algebra, got " + G.cd.name());
    const int n = G.cd.rank + 1;
    const std::size_t r = static_cast<std::size_t>(n - 1);

    // explicit constants are linear in (s, t)
    const QuantumLieAlgebra Es = build_sln_explicit({n, RatFunc(1), RatFunc(0)});
    const QuantumLieAlgebra Et = build_sln_explicit({n, RatFunc(0), RatFunc(1)});
    const QuantumLieAlgebra &E = Es;  // for the basis

    std::vector<std::size_t> gen_root(E.dim());
    for (std::size_t a = 0; a < E.dim(); ++a) {
        const auto &e = E.basis[a];
        const auto g = e.cartan ? G.find_cartan(e.index) : G.find_root(e.root);
        if (!g) throw Error(ErrorKind::InternalInconsistency, "generic algebra has no element for " + e.name);
        gen_root[a] = *g;
    }
    std::vector<std::size_t> gen_h(r);
    for (std::size_t m = 0; m < r; ++m) gen_h[m] = gen_root[*E.find_cartan(static_cast<int>(m) + 1)];

    // unknowns: C[k][m] at k*r + m, then (s, t), or kappa alone when fixed
    const std::size_t nc = r * r;
    const std::size_t nu = nc + (fixed ? 1 : 2);
    std::vector<std::vector<RatFunc>> rows;
    for (std::size_t a = 0; a < E.dim(); ++a) {
        if (E.basis[a].cartan) continue;
        const std::size_t xg = gen_root[a];
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t hk = *E.find_cartan(static_cast<int>(k) + 1);
            for (int side = 0; side < 2; ++side) {
                // l: [H_k, X] coefficient on X; r: [X, H_k]
                std::vector<RatFunc> row(nu);
                for (std::size_t m = 0; m < r; ++m)
                    row[k * r + m] = side == 0 ? -G.f(gen_h[m], xg, xg) : -G.f(xg, gen_h[m], xg);
                const RatFunc ls = side == 0 ? Es.f(hk, a, a) : Es.f(a, hk, a);
                const RatFunc lt = side == 0 ? Et.f(hk, a, a) : Et.f(a, hk, a);
                if (fixed) {
                    row[nc] = fixed->s * ls + fixed->t * lt;
                } else {
                    row[nc] = ls;
                    row[nc + 1] = lt;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    DenseMatrix<RatFunc> M(rows.size(), nu);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < nu; ++j) M(i, j) = rows[i][j];
    const auto ker = kernel(M);
    if (ker.size() != 1) {
        res.mismatches.push_back("Cartan tables admit a " + std::to_string(ker.size()) + "-dimensional solution space");
        return res;
    }
    std::vector<RatFunc> sol = ker[0];
    std::size_t gauge = nc;
    if (!fixed && sol[nc].is_zero()) gauge = nc + 1;
    if (sol[gauge].is_zero()) {
        res.mismatches.push_back("solution forces the product to vanish");
        return res;
    }
    const RatFunc norm = sol[gauge].inverse();
    for (auto &x : sol) x *= norm;

    SlnParams P{n, RatFunc(1), RatFunc(0)};
    if (fixed) {
        P = *fixed;
        res.product_scale = sol[nc];
    } else {
        P.s = sol[nc];
        P.t = sol[nc + 1];
    }
    res.params = P;
    res.epsilon = P.s.is_zero() ? RatFunc(0) : P.t / P.s;
    res.epsilon_bar_invariant = res.epsilon == res.epsilon.qconjugate();
    res.cartan_map.assign(r, std::vector<RatFunc>(r));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m) res.cartan_map[k][m] = sol[k * r + m];

    // explicit algebra at the fitted point, product scaled by kappa in fixed mode
    QuantumLieAlgebra X = build_sln_explicit(P);
    if (fixed)
        for (auto &kv : X.constants)
            for (auto &cx : kv.second) cx.second *= res.product_scale;

    // root scalars: lambda = 1 on simple roots, then along [X_i,l-1, X_l-1,l] = N X_il
    std::map<std::pair<int, int>, RatFunc> lambda;
    for (int i = 1; i < n; ++i) lambda[{i, i + 1}] = RatFunc(1);
    for (int len = 2; len < n; ++len)
        for (int i = 1; i + len <= n; ++i) {
            const int l = i + len;
            const std::size_t a = *X.find_x(i, l - 1), b = *X.find_x(l - 1, l), c = *X.find_x(i, l);
            const RatFunc NE = X.f(a, b, c), NG = G.f(gen_root[a], gen_root[b], gen_root[c]);
            if (NE.is_zero() || NG.is_zero()) {
                res.mismatches.push_back("vanishing N constant for " + X.basis[c].name);
                return res;
            }
            lambda[{i, l}] = lambda.at({i, l - 1}) * lambda.at({l - 1, l}) * NG / NE;
        }
    // negative roots from [X_ij, X_ji] = sum_k g_k H_k
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::size_t a = *X.find_x(i, j), b = *X.find_x(j, i);
            const SparseVec &gG = G.bracket(gen_root[a], gen_root[b]);
            bool done = false;
            for (std::size_t m = 0; m < r && !done; ++m) {
                const auto it = gG.find(gen_h[m]);
                if (it == gG.end()) continue;
                RatFunc num;
                for (std::size_t k = 0; k < r; ++k) num += X.f(a, b, *X.find_cartan(static_cast<int>(k) + 1)) * res.cartan_map[k][m];
                lambda[{j, i}] = num / (lambda.at({i, j}) * it->second);
                done = true;
            }
            if (!done) {
                res.mismatches.push_back("generic [X,X] for " + X.basis[a].name + " has no Cartan part");
                return res;
            }
        }

    res.phi = SparseMatrix(G.dim(), X.dim());
    for (std::size_t a = 0; a < X.dim(); ++a) {
        const auto &e = X.basis[a];
        if (e.cartan) {
            for (std::size_t m = 0; m < r; ++m) {
                const RatFunc &c = res.cartan_map[static_cast<std::size_t>(e.index - 1)][m];
                if (!c.is_zero()) res.phi.set(gen_h[m], a, c);
            }
        } else {
            const RatFunc &l = lambda.at({e.i, e.j});
            if (l.is_zero()) {
                res.mismatches.push_back("vanishing scalar for " + e.name);
                return res;
            }
            res.phi.set(gen_root[a], a, l);
            res.root_scalars[e.name] = l;
        }
    }

    // phi([a,b]_E) = [phi a, phi b]_G for every pair
    for (std::size_t a = 0; a < X.dim(); ++a)
        for (std::size_t b = 0; b < X.dim(); ++b) {
            ++res.compared;
            const SparseVec lhs = res.phi.apply(X.bracket(a, b));
            const SparseVec rhs = apply_bracket(G, image(res.phi, a), image(res.phi, b));
            if (lhs != rhs && res.mismatches.size() < 20) res.mismatches.push_back("[" + X.basis[a].name + "," + X.basis[b].name + "]");
        }
    res.matched = res.mismatches.empty();
    return res;
}

QuantumLieAlgebra with_transported_action(const QuantumLieAlgebra &explicit_alg, const QuantumLieAlgebra &generic, const FitResult &fit) {
    if (!fit.matched) throw Error(ErrorKind::InternalInconsistency, "transport needs a matched fit");
    const std::size_t d = generic.dim();
    DenseMatrix<RatFunc> aug(d, 2 * d);
    fit.phi.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) { aug(i, j) = x; });
    for (std::size_t i = 0; i < d; ++i) aug(i, d + i) = RatFunc(1);
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < d || e.pivots[d - 1] != d - 1) throw Error(ErrorKind::SingularSystem, "basis change not invertible");
    SparseMatrix inv(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!e.reduced(i, d + j).is_zero()) inv.set(i, j, e.reduced(i, d + j));
    QuantumLieAlgebra out = explicit_alg;
    out.action_E.clear();
    out.action_F.clear();
    for (const auto &m : generic.action_E) out.action_E.push_back(inv * m * fit.phi);
    for (const auto &m : generic.action_F) out.action_F.push_back(inv * m * fit.phi);
    return out;
}

QuantumLieAlgebra with_sln_action(const QuantumLieAlgebra &explicit_alg, std::size_t budget_dim) {
    if (!explicit_alg.params) throw Error(ErrorKind::InvalidParams, "not an explicit sl_n table");
    const int n = explicit_alg.params->n;
    const auto generic = build_generic(build_cartan(Series::A, n - 1), budget_dim);
    // the basis identification does not depend on (s, t); any matching member will do.
    // For n = 2 only s + t enters, so the free fit has no unique solution.
    FitResult fit = n == 2 ? fit_explicit(generic, SlnParams{2, RatFunc(1), RatFunc(0)}) : fit_explicit(generic);
    if (!fit.matched) throw Error(ErrorKind::ObstructionDetected, "generic sl_" + std::to_string(n) + " does not fit the family");
    return with_transported_action(explicit_alg, generic, fit);
}

}  // namespace qla
