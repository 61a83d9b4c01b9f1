#include "qla/tensorcg.hpp"

#include "qla/error.hpp"

#include <algorithm>

namespace qla {

TensorProduct tensor_product(const Module &V, const Module &W) {
    if (!(V.cd == W.cd)) throw Error(ErrorKind::InvalidType, "tensor factors over different algebras");
    TensorProduct T;
    T.cd = V.cd;
    T.left_dim = V.dim();
    T.right_dim = W.dim();
    for (std::size_t a = 0; a < V.dim(); ++a)
        for (std::size_t b = 0; b < W.dim(); ++b) T.weights.push_back(V.weights[a] + W.weights[b]);
    for (int i = 0; i < V.cd.rank; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const SparseMatrix KV = V.K(i), KWi = W.K_inv(i);
        T.E.push_back(kron(V.E[ui], KWi) + kron(KV, W.E[ui]));
        T.F.push_back(kron(V.F[ui], KWi) + kron(KV, W.F[ui]));
    }
    return T;
}

SparseVec swap_factors(const TensorProduct &T, const SparseVec &x) {
    if (T.left_dim != T.right_dim) throw Error(ErrorKind::InvalidType, "swap needs a tensor square");
    SparseVec y;
    for (const auto &[k, c] : x) y.emplace(T.index(k % T.right_dim, k / T.right_dim), c);
    return y;
}

SparseVec sigma_tilde(const TensorProduct &T, const SparseVec &x) {
    SparseVec y = swap_factors(T, x);
    for (auto &kv : y) kv.second = kv.second.qconjugate();
    return y;
}

bool vanishes_at_one(const SparseVec &x) {
    for (const auto &kv : x)
        if (kv.second.classical_limit() != 0) return false;
    return true;
}

SparseVec normalize_vector(const SparseVec &x) {
    if (is_zero(x)) return {};
    LaurentPoly l(1);
    for (const auto &kv : x) {
        const LaurentPoly &d = kv.second.den();
        l = *(l * d).exact_div(poly_gcd(l, d));
    }
    std::vector<std::pair<std::size_t, LaurentPoly>> polys;
    LaurentPoly g;
    for (const auto &[k, c] : x) {
        LaurentPoly p = *(c.num() * l).exact_div(c.den());
        g = poly_gcd(g, p);
        polys.emplace_back(k, std::move(p));
    }
    SparseVec y;
    Rational lead = 0;
    for (auto &[k, p] : polys) {
        LaurentPoly r = *p.exact_div(g);
        if (lead == 0 && r.eval_at_one() != 0) lead = r.eval_at_one();
        y.emplace(k, RatFunc(r));
    }
    if (lead == 0) throw Error(ErrorKind::InternalInconsistency, "normalized vector vanishes at v = 1");
    const RatFunc s(Rational(1) / lead);
    for (auto &kv : y) kv.second *= s;
    return y;
}

HWSpace highest_weight_space(const TensorProduct &T, const Weight &w) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < T.dim(); ++k)
        if (T.weights[k] == w) cols.push_back(k);
    HWSpace h;
    h.weight = w;
    if (cols.empty()) throw Error(ErrorKind::EmptySpace, "no vectors of weight " + to_string(w));
    // rows: (i, target index) for every nonzero image
    std::map<std::pair<int, std::size_t>, std::size_t> row_of;
    for (int i = 0; i < T.cd.rank; ++i)
        for (std::size_t c : cols)
            for (const auto &kv : T.E[static_cast<std::size_t>(i)].column(c)) row_of.try_emplace({i, kv.first}, 0);
    std::size_t r = 0;
    for (auto &kv : row_of) kv.second = r++;
    DenseMatrix<RatFunc> M(row_of.size(), cols.size());
    for (int i = 0; i < T.cd.rank; ++i)
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto &[k, x] : T.E[static_cast<std::size_t>(i)].column(cols[c])) M(row_of.at({i, k}), c) = x;
    for (const auto &kv : kernel(M)) {
        SparseVec v;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!kv[c].is_zero()) v.emplace(cols[c], kv[c]);
        h.basis.push_back(normalize_vector(v));
    }
    if (h.basis.empty()) throw Error(ErrorKind::EmptySpace, "no highest-weight vectors of weight " + to_string(w));
    return h;
}

SparseVec symmetrize_hw(const TensorProduct &T, const SparseVec &x) {
    SparseVec y = scaled(x, RatFunc(Rational(1, 2)));
    axpy(y, RatFunc(Rational(1, 2)), sigma_tilde(T, x));
    return y;
}

SparseVec antisymmetrize_hw(const TensorProduct &T, const SparseVec &x) {
    SparseVec y = scaled(x, RatFunc(Rational(1, 2)));
    axpy(y, RatFunc(Rational(-1, 2)), sigma_tilde(T, x));
    if (vanishes_at_one(y)) throw Error(ErrorKind::ClassicallyZero, "antisymmetrized vector vanishes at v = 1");
    return y;
}

RatFunc CGEmbedding::K(std::size_t a, std::size_t bc) const {
    auto it = vhat[a].find(bc);
    return it == vhat[a].end() ? RatFunc() : it->second;
}

SparseMatrix CGEmbedding::matrix(std::size_t tensor_dim) const {
    SparseMatrix m(tensor_dim, vhat.size());
    for (std::size_t a = 0; a < vhat.size(); ++a) m.set_column(a, vhat[a]);
    return m;
}

CGEmbedding cg_embedding(const IrrepModule &V, const TensorProduct &T, const SparseVec &v0) {
    CGEmbedding K;
    K.vhat.resize(V.dim());
    K.vhat[0] = v0;
    for (std::size_t a = 1; a < V.dim(); ++a) {
        if (V.parent[a] >= a) throw Error(ErrorKind::InternalInconsistency, "basis not in lowering order");
        K.vhat[a] = T.F[static_cast<std::size_t>(V.letter[a])].apply(K.vhat[V.parent[a]]);
    }
    return K;
}

Report verify_embedding(const IrrepModule &V, const TensorProduct &T, const CGEmbedding &K) {
    Report rep;
    const SparseMatrix emb = K.matrix(T.dim());
    std::string bad;
    for (int i = 0; i < V.cd.rank && bad.empty(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (T.E[ui] * emb != emb * V.E[ui]) bad = "E" + std::to_string(i + 1);
        else if (T.F[ui] * emb != emb * V.F[ui]) bad = "F" + std::to_string(i + 1);
        else if (T.K(i) * emb != emb * V.K(i)) bad = "K" + std::to_string(i + 1);
    }
    rep.add("cg-intertwining", bad.empty(), bad);
    bool nonzero = false;
    for (const auto &v : K.vhat) nonzero = nonzero || !vanishes_at_one(v);
    rep.add("cg-classical-nonzero", nonzero);
    return rep;
}

SparseMatrix invert_cg(const IrrepModule &V, const TensorProduct &T, const CGEmbedding &K, const std::vector<SparseVec> &others) {
    const auto Vb = V.blocks();
    const auto Tb = T.blocks();
    const int n = V.cd.rank;
    std::vector<Weight> alpha;
    for (int i = 0; i < n; ++i) {
        Weight a(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = V.cd.a(k, i);
        alpha.push_back(a);
    }
    SparseMatrix B(V.dim(), T.dim());

    // Top weight: the functional phi on T_theta with phi(vhat_0) = 1, phi(others) = 0
    // that kills the images Delta(F_i) T_{theta + alpha_i}.
    const Weight &theta = V.highest_weight;
    const auto &top = Tb.at(theta);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < top.size(); ++k) pos[top[k]] = k;
    std::vector<SparseVec> constraints;
    std::vector<RatFunc> rhs;
    constraints.push_back(K.vhat[0]);
    rhs.emplace_back(1);
    for (const auto &o : others) {
        constraints.push_back(o);
        rhs.emplace_back(0);
    }
    for (int i = 0; i < n; ++i) {
        auto it = Tb.find(theta + alpha[static_cast<std::size_t>(i)]);
        if (it == Tb.end()) continue;
        for (std::size_t src : it->second) {
            constraints.push_back(T.F[static_cast<std::size_t>(i)].column(src));
            rhs.emplace_back(0);
        }
    }
    DenseMatrix<RatFunc> A(constraints.size(), top.size());
    for (std::size_t r = 0; r < constraints.size(); ++r)
        for (const auto &[k, x] : constraints[r]) {
            auto p = pos.find(k);
            if (p == pos.end()) throw Error(ErrorKind::InternalInconsistency, "constraint vector outside the top weight space");
            A(r, p->second) = x;
        }
    if (rank(A) != top.size()) throw Error(ErrorKind::SingularSystem, "top-weight functional not unique");
    const auto phi = solve(A, rhs);
    if (!phi) throw Error(ErrorKind::SingularSystem, "inconsistent normalization: hw vectors dependent");
    for (std::size_t k = 0; k < top.size(); ++k) B.set(0, top[k], (*phi)[k]);

    // Lower weights in basis order (by depth): B(w) is the unique x in V_mu with
    // E_j x = B(Delta(E_j) w) for all j.
    std::vector<Weight> order;
    for (const auto &w : V.weights)
        if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
    for (const auto &mu : order) {
        if (mu == theta) continue;
        const auto &vb = Vb.at(mu);
        auto tit = Tb.find(mu);
        if (tit == Tb.end()) continue;
        const auto &tb = tit->second;
        std::map<std::pair<int, std::size_t>, std::size_t> row_of;
        for (int j = 0; j < n; ++j) {
            auto f = Vb.find(mu + alpha[static_cast<std::size_t>(j)]);
            if (f == Vb.end()) continue;
            for (std::size_t g : f->second) row_of.emplace(std::make_pair(j, g), row_of.size());
        }
        DenseMatrix<RatFunc> aug(row_of.size(), vb.size() + tb.size());
        for (const auto &[jg, r] : row_of)
            for (std::size_t c = 0; c < vb.size(); ++c) aug(r, c) = V.E[static_cast<std::size_t>(jg.first)].get(jg.second, vb[c]);
        for (std::size_t c = 0; c < tb.size(); ++c)
            for (int j = 0; j < n; ++j)
                for (const auto &[g, x] : B.apply(T.E[static_cast<std::size_t>(j)].column(tb[c]))) {
                    auto r = row_of.find({j, g});
                    if (r == row_of.end()) throw Error(ErrorKind::InternalInconsistency, "bracket image outside module weights");
                    aug(r->second, vb.size() + c) = x;
                }
        const auto e = rref(std::move(aug));
        if (e.pivots.size() != vb.size())
            throw Error(ErrorKind::SingularSystem, "no module map extends to weight " + to_string(mu));
        for (std::size_t k = 0; k < vb.size(); ++k)
            if (e.pivots[k] != k) throw Error(ErrorKind::InternalInconsistency, "E-signature not injective at " + to_string(mu));
        for (std::size_t c = 0; c < tb.size(); ++c) {
            SparseVec col;
            for (std::size_t k = 0; k < vb.size(); ++k) {
                const RatFunc &x = e.reduced(k, vb.size() + c);
                if (!x.is_zero()) col.emplace(vb[k], x);
            }
            B.set_column(tb[c], std::move(col));
        }
    }
    const SparseMatrix emb = K.matrix(T.dim());
    if (B * emb != SparseMatrix::identity(V.dim())) throw Error(ErrorKind::InternalInconsistency, "bracket does not invert the embedding");
    for (const auto &o : others)
        if (!is_zero(B.apply(o))) throw Error(ErrorKind::InternalInconsistency, "bracket does not vanish on the complement");
    return B;
}

Report verify_module_map(const Module &V, const TensorProduct &T, const SparseMatrix &B) {
    Report rep;
    std::string bad;
    for (int i = 0; i < V.cd.rank && bad.empty(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (V.E[ui] * B != B * T.E[ui]) bad = "E" + std::to_string(i + 1);
        else if (V.F[ui] * B != B * T.F[ui]) bad = "F" + std::to_string(i + 1);
        else if (V.K(i) * B != B * T.K(i)) bad = "K" + std::to_string(i + 1);
    }
    rep.add("ad-invariance", bad.empty(), bad);
    return rep;
}

}  // namespace qla
