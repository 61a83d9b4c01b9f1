#include "qla/error.hpp"
#include "qla/qliealg.hpp"

#include <set>

namespace qla {

namespace {

std::string triple(const QuantumLieAlgebra &A, std::size_t a, std::size_t b, std::size_t c) {
    return "f[" + A.basis[a].name + "," + A.basis[b].name + "]^{" + A.basis[c].name + "}";
}

std::vector<int> add(const std::vector<int> &x, const std::vector<int> &y) {
    std::vector<int> r(x);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += y[k];
    return r;
}

// Dense table of values at v = 1: t[a][b][c].
using Table1 = std::vector<std::vector<std::vector<Rational>>>;

Table1 table_at_one(const QuantumLieAlgebra &A) {
    const std::size_t d = A.dim();
    Table1 t(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
    for (const auto &[ab, vec] : A.constants)
        for (const auto &[c, x] : vec) t[ab.first][ab.second][c] = x.classical_limit();
    return t;
}

DenseMatrix<Rational> matmul(const DenseMatrix<Rational> &x, const DenseMatrix<Rational> &y) {
    DenseMatrix<Rational> z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (y(k, j) != 0) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

DenseMatrix<Rational> commutator(const DenseMatrix<Rational> &x, const DenseMatrix<Rational> &y) {
    DenseMatrix<Rational> a = matmul(x, y), b = matmul(y, x);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

bool is_zero_matrix(const DenseMatrix<Rational> &x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(i, j) != 0) return false;
    return true;
}

Module algebra_module(const QuantumLieAlgebra &A) {
    Module m;
    m.cd = A.cd;
    for (std::size_t a = 0; a < A.dim(); ++a) m.weights.push_back(A.grade_weight(a));
    m.E = A.action_E;
    m.F = A.action_F;
    return m;
}

SparseMatrix bracket_matrix(const QuantumLieAlgebra &A) {
    const std::size_t d = A.dim();
    SparseMatrix B(d, d * d);
    for (const auto &[ab, vec] : A.constants) B.set_column(ab.first * d + ab.second, vec);
    return B;
}

std::optional<DenseMatrix<RatFunc>> inverse(const DenseMatrix<RatFunc> &m) {
    const std::size_t n = m.rows();
    DenseMatrix<RatFunc> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = RatFunc(1);
    }
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    DenseMatrix<RatFunc> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

SparseMatrix to_sparse(const DenseMatrix<RatFunc> &m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s.set(i, j, m(i, j));
    return s;
}

DenseMatrix<RatFunc> to_dense(const SparseMatrix &m) {
    DenseMatrix<RatFunc> d(m.rows(), m.cols());
    m.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) { d(i, j) = x; });
    return d;
}

}  // namespace

Report check_gradation(const QuantumLieAlgebra &A) {
    Report rep;
    std::string bad;
    for (const auto &[ab, vec] : A.constants)
        for (const auto &[c, x] : vec)
            if (bad.empty() && A.basis[c].root != add(A.basis[ab.first].root, A.basis[ab.second].root))
                bad = triple(A, ab.first, ab.second, c) + " = " + x.to_string();
    rep.add("gradation", bad.empty(), bad);
    return rep;
}

Report check_q_antisymmetry(const QuantumLieAlgebra &A) {
    Report rep;
    std::string bad;
    for (std::size_t a = 0; a < A.dim() && bad.empty(); ++a)
        for (std::size_t b = 0; b < A.dim() && bad.empty(); ++b) {
            std::set<std::size_t> support;
            for (const auto &kv : A.bracket(a, b)) support.insert(kv.first);
            for (const auto &kv : A.bracket(b, a)) support.insert(kv.first);
            for (std::size_t c : support) {
                const RatFunc x = A.f(a, b, c), y = A.f(b, a, c);
                if (x != -y.qconjugate()) {
                    bad = triple(A, a, b, c) + " = " + x.to_string() + " but -conj " + triple(A, b, a, c) + " = " +
                          (-y.qconjugate()).to_string();
                    break;
                }
            }
        }
    rep.add("q-antisymmetry", bad.empty(), bad);
    return rep;
}

namespace {

std::optional<ClassicalOracle> base_oracle(const QuantumLieAlgebra &A) {
    ClassicalOracle o;
    if (A.provenance == Provenance::ExplicitSln) {
        const int n = A.params->n;
        for (const auto &e : A.basis) {
            DenseMatrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            if (e.cartan) {
                m(static_cast<std::size_t>(e.index - 1), static_cast<std::size_t>(e.index - 1)) = 1;
                m(static_cast<std::size_t>(e.index), static_cast<std::size_t>(e.index)) = -1;
            } else {
                m(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1)) = 1;
            }
            o.matrices.push_back(std::move(m));
        }
        o.up_to_scalar = false;
        o.scale = (A.params->s + A.params->t).classical_limit();
        return o;
    }
    if (A.action_E.empty() || A.words.size() != A.dim()) return std::nullopt;
    // Matrices of the classical adjoint action; root vectors as nested commutators
    // of the e_i, then the basis by applying the lowering words to e_theta.
    std::vector<DenseMatrix<Rational>> e, f;
    for (int i = 0; i < A.cd.rank; ++i) {
        e.push_back(classical_limit(A.action_E[static_cast<std::size_t>(i)]));
        f.push_back(classical_limit(A.action_F[static_cast<std::size_t>(i)]));
    }
    const RootSystem rs = positive_roots(A.cd);
    std::map<std::vector<int>, DenseMatrix<Rational>> root_vec;
    for (const auto &r : rs.positive_roots) {
        if (r.height() == 1) {
            for (int i = 0; i < A.cd.rank; ++i)
                if (r.simple[static_cast<std::size_t>(i)] == 1) root_vec.emplace(r.simple, e[static_cast<std::size_t>(i)]);
            continue;
        }
        for (int i = 0; i < A.cd.rank; ++i) {
            std::vector<int> g = r.simple;
            --g[static_cast<std::size_t>(i)];
            auto it = root_vec.find(g);
            if (it == root_vec.end()) continue;
            DenseMatrix<Rational> c = commutator(e[static_cast<std::size_t>(i)], it->second);
            if (is_zero_matrix(c)) continue;
            root_vec.emplace(r.simple, std::move(c));
            break;
        }
    }
    auto top = root_vec.find(rs.highest_root.simple);
    if (top == root_vec.end()) return std::nullopt;
    for (const auto &w : A.words) {
        DenseMatrix<Rational> m = top->second;
        for (int i : w) m = commutator(f[static_cast<std::size_t>(i)], m);
        o.matrices.push_back(std::move(m));
    }
    o.up_to_scalar = true;
    return o;
}

}  // namespace

std::optional<ClassicalOracle> classical_oracle(const QuantumLieAlgebra &A) {
    auto o = base_oracle(A);
    if (!o) return o;
    if (A.frame.rows() == A.dim()) {
        std::vector<DenseMatrix<Rational>> framed;
        for (std::size_t a = 0; a < A.dim(); ++a) {
            DenseMatrix<Rational> m(o->matrices[0].rows(), o->matrices[0].cols());
            for (std::size_t b = 0; b < A.dim(); ++b) {
                if (A.frame(b, a) == 0) continue;
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += A.frame(b, a) * o->matrices[b](i, j);
            }
            framed.push_back(std::move(m));
        }
        o->matrices = std::move(framed);
    }
    return o;
}

Report check_classical_limit(const QuantumLieAlgebra &A) {
    Report rep;
    const std::size_t d = A.dim();
    std::string bad;
    for (const auto &[ab, vec] : A.constants)
        for (const auto &[c, x] : vec)
            if (bad.empty() && !x.is_regular_at_one()) bad = triple(A, ab.first, ab.second, c) + " = " + x.to_string();
    rep.add("regular-at-1", bad.empty(), bad);
    if (!bad.empty()) return rep;
    const Table1 t = table_at_one(A);

    bad.clear();
    for (std::size_t a = 0; a < d && bad.empty(); ++a)
        for (std::size_t b = 0; b < d && bad.empty(); ++b)
            for (std::size_t c = 0; c < d && bad.empty(); ++c)
                if (t[a][b][c] != -t[b][a][c]) bad = triple(A, a, b, c);
    rep.add("antisymmetry-at-1", bad.empty(), bad);

    bad.clear();
    for (std::size_t a = 0; a < d && bad.empty(); ++a)
        for (std::size_t b = a + 1; b < d && bad.empty(); ++b)
            for (std::size_t c = b + 1; c < d && bad.empty(); ++c)
                for (std::size_t z = 0; z < d && bad.empty(); ++z) {
                    Rational s = 0;
                    for (std::size_t e = 0; e < d; ++e)
                        s += t[a][b][e] * t[e][c][z] + t[b][c][e] * t[e][a][z] + t[c][a][e] * t[e][b][z];
                    if (s != 0) bad = "(" + A.basis[a].name + "," + A.basis[b].name + "," + A.basis[c].name + ")";
                }
    rep.add("jacobi-at-1", bad.empty(), bad);

    bad.clear();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (A.basis[a].cartan && A.basis[b].cartan)
                for (std::size_t c = 0; c < d; ++c)
                    if (bad.empty() && t[a][b][c] != 0) bad = triple(A, a, b, c);
    rep.add("cartan-abelian-at-1", bad.empty(), bad);

    // l = r = alpha: with h_i = [X_{alpha_i}, X_{-alpha_i}], 2 l_beta(h_i) / l_{alpha_i}(h_i) = beta(h_i)
    bad.clear();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (A.basis[a].cartan && !A.basis[b].cartan && bad.empty() && t[a][b][b] != -t[b][a][b])
                bad = A.basis[b].name + " on " + A.basis[a].name;
    rep.add("l-equals-r-at-1", bad.empty(), bad);
    bad.clear();
    for (int i = 0; i < A.cd.rank && bad.empty(); ++i) {
        std::vector<int> ai(static_cast<std::size_t>(A.cd.rank), 0);
        ai[static_cast<std::size_t>(i)] = 1;
        std::vector<int> mi = ai;
        mi[static_cast<std::size_t>(i)] = -1;
        const auto xp = A.find_root(ai), xm = A.find_root(mi);
        if (!xp || !xm) {
            bad = "missing simple root vector";
            break;
        }
        const std::vector<Rational> &h = t[*xp][*xm];
        auto l_of = [&](std::size_t x) {
            Rational s = 0;
            for (std::size_t c = 0; c < d; ++c)
                if (h[c] != 0) s += h[c] * t[c][x][x];
            return s;
        };
        const Rational li = l_of(*xp);
        if (li == 0) {
            bad = "degenerate h_" + std::to_string(i + 1);
            break;
        }
        for (std::size_t x = 0; x < d && bad.empty(); ++x) {
            if (A.basis[x].cartan) continue;
            const int want = A.grade_weight(x)[static_cast<std::size_t>(i)];
            if (2 * l_of(x) != want * li) bad = A.basis[x].name + " on h_" + std::to_string(i + 1);
        }
    }
    rep.add("roots-at-1", bad.empty(), bad);

    bad.clear();
    const auto oracle = classical_oracle(A);
    if (!oracle) {
        rep.add("classical-oracle", false, "no classical realization available");
        return rep;
    }
    // coordinates of a matrix in the span of the oracle matrices
    const auto &M = oracle->matrices;
    const std::size_t N = M[0].rows();
    DenseMatrix<Rational> flat(N * N, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) flat(i * N + j, c) = M[c](i, j);
    if (rank(flat) != d) {
        rep.add("classical-oracle", false, "oracle matrices are dependent");
        return rep;
    }
    std::optional<Rational> kappa;
    if (!oracle->up_to_scalar) kappa = oracle->scale;
    for (std::size_t a = 0; a < d && bad.empty(); ++a)
        for (std::size_t b = 0; b < d && bad.empty(); ++b) {
            const DenseMatrix<Rational> cm = commutator(M[a], M[b]);
            std::vector<Rational> rhs(N * N);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) rhs[i * N + j] = cm(i, j);
            const auto x = solve(flat, rhs);
            if (!x) {
                bad = "commutator outside the span";
                break;
            }
            for (std::size_t c = 0; c < d && bad.empty(); ++c) {
                const Rational &want = (*x)[c];
                const Rational &got = t[a][b][c];
                if (!kappa && want != 0) {
                    kappa = got / want;
                    if (*kappa == 0) bad = triple(A, a, b, c) + " vanishes";
                }
                if (bad.empty() && got != (kappa ? *kappa : Rational(0)) * want) bad = triple(A, a, b, c);
            }
        }
    rep.add("classical-oracle", bad.empty() && kappa && *kappa != 0, bad);
    return rep;
}

Report check_ad_invariance(const QuantumLieAlgebra &A) {
    if (A.action_E.size() != static_cast<std::size_t>(A.cd.rank) || A.action_F.size() != A.action_E.size()) {
        Report rep;
        rep.add("ad-invariance", false, "no adjoint action stored");
        return rep;
    }
    const Module m = algebra_module(A);
    return verify_module_map(m, tensor_square(m), bracket_matrix(A));
}

Report check_ad_invariance(const QuantumLieAlgebra &A, const IrrepModule &V, const SparseMatrix &coords) {
    const auto inv = inverse(to_dense(coords));
    if (!inv) {
        Report rep;
        rep.add("ad-invariance", false, "basis change not invertible");
        return rep;
    }
    const SparseMatrix Pi = to_sparse(*inv);
    QuantumLieAlgebra B = A;
    B.action_E.clear();
    B.action_F.clear();
    for (int i = 0; i < V.cd.rank; ++i) {
        B.action_E.push_back(Pi * V.E[static_cast<std::size_t>(i)] * coords);
        B.action_F.push_back(Pi * V.F[static_cast<std::size_t>(i)] * coords);
    }
    return check_ad_invariance(B);
}

Report check_tau_sln(const QuantumLieAlgebra &A, int n) {
    Report rep;
    // tau(X_ij) = -X_{n+1-j, n+1-i}, tau(H_i) = H_{n-i}
    std::vector<std::size_t> img(A.dim());
    std::vector<int> sign(A.dim(), 1);
    for (std::size_t a = 0; a < A.dim(); ++a) {
        const auto &e = A.basis[a];
        std::optional<std::size_t> t;
        if (e.cartan) {
            t = A.find_cartan(n - e.index);
        } else {
            t = A.find_x(n + 1 - e.j, n + 1 - e.i);
            sign[a] = -1;
        }
        if (!t || (!e.cartan && e.i == 0)) {
            rep.add("tau", false, "basis is not an sl_" + std::to_string(n) + " basis");
            return rep;
        }
        img[a] = *t;
    }
    auto tau = [&](const SparseVec &x) {
        SparseVec y;
        for (const auto &[c, v] : x) y.emplace(img[c], sign[c] == 1 ? v : -v);
        return y;
    };
    std::string bad;
    for (std::size_t a = 0; a < A.dim() && bad.empty(); ++a)
        for (std::size_t b = 0; b < A.dim() && bad.empty(); ++b) {
            const SparseVec lhs = tau(A.bracket(a, b));
            const SparseVec rhs = scaled(A.bracket(img[a], img[b]), RatFunc(sign[a] * sign[b]));
            if (lhs != rhs) bad = "[" + A.basis[a].name + "," + A.basis[b].name + "]";
        }
    rep.add("tau", bad.empty(), bad);
    return rep;
}

RootTables extract_roots(const QuantumLieAlgebra &A) {
    RootTables t;
    std::vector<std::size_t> hs;
    for (int k = 1;; ++k) {
        auto h = A.find_cartan(k);
        if (!h) break;
        hs.push_back(*h);
    }
    for (std::size_t a = 0; a < A.dim(); ++a) {
        if (A.basis[a].cartan) continue;
        auto &l = t.l[a];
        auto &r = t.r[a];
        for (std::size_t h : hs) {
            l.push_back(A.f(h, a, a));
            r.push_back(-A.f(a, h, a));
        }
    }
    return t;
}

Report check_lr_identity(const QuantumLieAlgebra &A) {
    Report rep;
    const RootTables t = extract_roots(A);
    std::string bad;
    if (A.provenance == Provenance::ExplicitSln) {
        for (const auto &[a, r] : t.r) {
            const auto &e = A.basis[a];
            const auto ji = A.find_x(e.j, e.i);
            for (std::size_t k = 0; k < r.size() && bad.empty(); ++k)
                if (r[k] != -t.l.at(*ji)[k]) bad = "r_" + std::to_string(e.i) + std::to_string(e.j) + "(H_" + std::to_string(k + 1) + ")";
        }
        rep.add("lr-identity", bad.empty(), bad);
    }
    if (check_q_antisymmetry(A).passed()) {
        bad.clear();
        for (const auto &[a, r] : t.r)
            for (std::size_t k = 0; k < r.size() && bad.empty(); ++k)
                if (r[k] != t.l.at(a)[k].qconjugate()) bad = A.basis[a].name + " on H_" + std::to_string(k + 1);
        rep.add("r-is-conjugate-l", bad.empty(), bad);
    }
    bad.clear();
    for (const auto &[a, r] : t.r)
        for (std::size_t k = 0; k < r.size() && bad.empty(); ++k) {
            const auto &l = t.l.at(a)[k];
            if (!l.is_regular_at_one() || !r[k].is_regular_at_one() || l.classical_limit() != r[k].classical_limit())
                bad = A.basis[a].name + " on H_" + std::to_string(k + 1);
        }
    rep.add("l-equals-r-at-1", bad.empty(), bad);
    return rep;
}

}  // namespace qla
