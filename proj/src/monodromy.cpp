#include "qla/monodromy.hpp"

#include "qla/error.hpp"

#include <algorithm>
#include <cmath>

namespace qla {

namespace {

using Dense = DenseMatrix<Rational>;

Dense mul(const Dense &a, const Dense &b) {
    Dense c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Dense bracket(const Dense &a, const Dense &b) {
    Dense x = mul(a, b), y = mul(b, a);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= y(i, j);
    return x;
}

Rational trace_of_product(const Dense &a, const Dense &b) {
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

bool equal_dense(const Dense &a, const Dense &b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

RatFunc q_power(const Rational &e) {
    const Rational twice = 2 * e;
    if (twice.get_den() != 1) throw Error(ErrorKind::InternalInconsistency, "exponent outside (1/2)Z");
    return RatFunc::v_pow(static_cast<int>(twice.get_num().get_si()));
}

Rational floor_half(const Rational &e) {
    // largest element of (1/2)Z not above e
    mpz_class f;
    const mpq_class twice = 2 * e;
    mpz_fdiv_q(f.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    Rational r(f, 2);
    r.canonicalize();
    return r;
}

}  // namespace

Rational casimir_exponent(const CartanDatum &cd, const Weight &lambda) {
    Weight l2 = lambda;
    for (auto &x : l2) x += 2;
    return inner_product(cd, lambda, l2);
}

MonodromyMatrix monodromy_on_tensor(const IrrepModule &V, const IrrepModule &W) {
    MonodromyMatrix out;
    const CartanDatum &cd = V.cd;
    out.T = tensor_product(V, W);
    out.mu = V.highest_weight;
    out.nu = W.highest_weight;
    const Rational cmn = casimir_exponent(cd, out.mu) + casimir_exponent(cd, out.nu);
    const auto dec = tensor_decomposition(cd, out.mu, out.nu);
    bool first = true;
    for (auto it = dec.rbegin(); it != dec.rend(); ++it) {
        const auto &[lambda, mult] = *it;
        IsotypicBlock b;
        b.weight = lambda;
        const Rational raw = casimir_exponent(cd, lambda) - cmn;
        if (first) {
            out.shift = raw - floor_half(raw);
            first = false;
        }
        b.exponent = raw - out.shift;
        if (Rational(2 * b.exponent).get_den() != 1)
            throw Error(ErrorKind::ObstructionDetected, "exponents of " + to_string(lambda) + " do not share a (1/2)Z coset");
        b.scalar = q_power(b.exponent);
        b.hw = highest_weight_space(out.T, lambda).basis;
        if (b.hw.size() != static_cast<std::size_t>(mult))
            throw Error(ErrorKind::ObstructionDetected, "multiplicity of " + to_string(lambda) + " is " + std::to_string(b.hw.size()) +
                                                            ", expected " + std::to_string(mult));
        const IrrepModule L = build_irrep(cd, lambda, out.T.dim());
        for (const auto &h : b.hw) {
            const auto emb = cg_embedding(L, out.T, h);
            b.basis.insert(b.basis.end(), emb.vhat.begin(), emb.vhat.end());
        }
        out.blocks.push_back(std::move(b));
    }

    // M S = S D on each weight space, solved as S^T M^T = D S^T
    std::map<Weight, std::vector<std::size_t>> rows_of;
    for (std::size_t k = 0; k < out.T.dim(); ++k) rows_of[out.T.weights[k]].push_back(k);
    std::map<Weight, std::vector<std::pair<const SparseVec *, const RatFunc *>>> cols_of;
    for (const auto &b : out.blocks)
        for (const auto &x : b.basis) {
            if (is_zero(x)) throw Error(ErrorKind::ObstructionDetected, "zero vector in an isotypic basis");
            cols_of[out.T.weights[x.begin()->first]].emplace_back(&x, &b.scalar);
        }
    out.M = SparseMatrix(out.T.dim(), out.T.dim());
    for (const auto &[w, rows] : rows_of) {
        const auto &cols = cols_of[w];
        const std::size_t n = rows.size();
        if (cols.size() != n) throw Error(ErrorKind::ObstructionDetected, "isotypic bases do not fill weight " + to_string(w));
        std::map<std::size_t, std::size_t> local;
        for (std::size_t r = 0; r < n; ++r) local[rows[r]] = r;
        DenseMatrix<RatFunc> aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto &[k, x] : *cols[i].first) {
                const auto r = local.find(k);
                if (r == local.end()) throw Error(ErrorKind::ObstructionDetected, "isotypic vector is not a weight vector");
                aug(i, r->second) = x;
                aug(i, n + r->second) = x * *cols[i].second;
            }
        const auto e = rref(std::move(aug));
        if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
            throw Error(ErrorKind::ObstructionDetected, "isotypic vectors are dependent in weight " + to_string(w));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!e.reduced(r, n + c).is_zero()) out.M.set(rows[c], rows[r], e.reduced(r, n + c));
    }
    const Report rep = verify_monodromy(out);
    if (!rep.passed()) {
        for (const auto &c : rep.checks)
            if (!c.passed) throw Error(ErrorKind::ObstructionDetected, c.name + ": " + c.witness);
    }
    return out;
}

Report verify_monodromy(const MonodromyMatrix &m) {
    Report rep;
    std::string bad;
    for (int i = 0; i < m.T.cd.rank && bad.empty(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (m.M * m.T.E[ui] != m.T.E[ui] * m.M) bad = "E_" + std::to_string(i + 1);
        else if (m.M * m.T.F[ui] != m.T.F[ui] * m.M) bad = "F_" + std::to_string(i + 1);
    }
    m.M.for_each([&](std::size_t r, std::size_t c, const RatFunc &) {
        if (bad.empty() && m.T.weights[r] != m.T.weights[c]) bad = "K (entry " + std::to_string(r) + "," + std::to_string(c) + ")";
    });
    rep.add("monodromy-commutation", bad.empty(), bad);
    bad.clear();
    const Dense one = classical_limit(m.M - SparseMatrix::identity(m.M.rows()));
    for (std::size_t r = 0; r < one.rows() && bad.empty(); ++r)
        for (std::size_t c = 0; c < one.cols() && bad.empty(); ++c)
            if (one(r, c) != 0) bad = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
    m.M.for_each([&](std::size_t r, std::size_t c, const RatFunc &x) {
        if (bad.empty() && !x.is_regular_at_one()) bad = "pole at entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
    });
    rep.add("monodromy-classical-triviality", bad.empty(), bad);
    return rep;
}

AData extract_A(const MonodromyMatrix &m) {
    AData a;
    a.minus_one = m.M - SparseMatrix::identity(m.M.rows());
    a.classical = Dense(m.M.rows(), m.M.cols());
    a.minus_one.for_each([&](std::size_t r, std::size_t c, const RatFunc &x) { a.classical(r, c) = x.h_derivative_at_zero(); });
    return a;
}

DenseMatrix<Rational> classical_split_casimir(const Module &V, const Module &W) {
    std::vector<std::pair<Dense, Dense>> gens, basis;
    for (int i = 0; i < V.cd.rank; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        gens.emplace_back(classical_limit(V.E[ui]), classical_limit(W.E[ui]));
        gens.emplace_back(classical_limit(V.F[ui]), classical_limit(W.F[ui]));
    }
    const std::size_t n = V.dim(), m = W.dim();
    auto flat = [&](const std::pair<Dense, Dense> &x) {
        std::vector<Rational> f;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f.push_back(x.first(i, j));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) f.push_back(x.second(i, j));
        return f;
    };
    std::vector<std::vector<Rational>> flats;
    auto try_add = [&](std::pair<Dense, Dense> x) {
        auto f = flat(x);
        DenseMatrix<Rational> M(f.size(), flats.size() + 1);
        for (std::size_t c = 0; c < flats.size(); ++c)
            for (std::size_t r = 0; r < f.size(); ++r) M(r, c) = flats[c][r];
        for (std::size_t r = 0; r < f.size(); ++r) M(r, flats.size()) = f[r];
        if (rank(M) <= flats.size()) return false;
        flats.push_back(std::move(f));
        basis.push_back(std::move(x));
        return true;
    };
    for (const auto &g : gens) try_add(g);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto &g : gens) try_add({bracket(g.first, basis[k].first), bracket(g.second, basis[k].second)});
    const std::size_t d = basis.size();
    DenseMatrix<Rational> G(d, 2 * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b)
            G(a, b) = trace_of_product(basis[a].first, basis[b].first) + trace_of_product(basis[a].second, basis[b].second);
        G(a, d + a) = 1;
    }
    const auto e = rref(std::move(G));
    if (e.pivots.size() < d || e.pivots[d - 1] != d - 1) throw Error(ErrorKind::SingularSystem, "degenerate trace form");
    Dense omega(n * m, n * m);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Rational g = e.reduced(a, d + b);
            if (g == 0) continue;
            const Dense &x = basis[a].first, &y = basis[b].second;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (x(i, j) == 0) continue;
                    for (std::size_t k = 0; k < m; ++k)
                        for (std::size_t l = 0; l < m; ++l)
                            if (y(k, l) != 0) omega(i * m + k, j * m + l) += g * x(i, j) * y(k, l);
                }
        }
    return omega;
}

Report check_classical_A(const MonodromyMatrix &mm, const IrrepModule &V, const IrrepModule &W) {
    Report rep;
    const Dense D = extract_A(mm).classical;
    const std::size_t N = D.rows();
    std::string bad;
    // commutes with the diagonal classical action
    for (int i = 0; i < mm.T.cd.rank && bad.empty(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (const auto *X : {&mm.T.E[ui], &mm.T.F[ui]}) {
            const Dense x = classical_limit(*X);
            if (!equal_dense(mul(D, x), mul(x, D))) bad = "generator " + std::to_string(i + 1);
        }
    }
    rep.add("A-classical-commutation", bad.empty(), bad);
    if (mm.T.left_dim == mm.T.right_dim && V.highest_weight == W.highest_weight) {
        bad.clear();
        const std::size_t n = mm.T.left_dim;
        for (std::size_t r = 0; r < N && bad.empty(); ++r)
            for (std::size_t c = 0; c < N && bad.empty(); ++c) {
                const std::size_t rs = (r % n) * n + r / n, cs = (c % n) * n + c / n;
                if (D(r, c) != D(rs, cs)) bad = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            }
        rep.add("A-classical-swap-symmetry", bad.empty(), bad);
    }
    bad.clear();
    const Rational mn = 2 * inner_product(mm.T.cd, mm.mu, mm.nu);
    const Dense omega = classical_split_casimir(V, W);
    const std::size_t top = mm.T.index(0, 0);
    if (omega(top, top) == 0 || mn == 0) {
        rep.add("A-classical-split-casimir", false, "degenerate normalization");
        return rep;
    }
    const Rational kappa = mn / omega(top, top);
    for (std::size_t r = 0; r < N && bad.empty(); ++r)
        for (std::size_t c = 0; c < N && bad.empty(); ++c) {
            const Rational want = kappa * omega(r, c) - (r == c ? mm.shift : Rational(0));
            if (D(r, c) != want) bad = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
    rep.add("A-classical-split-casimir", bad.empty(), bad);
    return rep;
}

AdSubmodule verify_ad_submodule(const MonodromyMatrix &mm, const IrrepModule &V, const IrrepModule &W) {
    AdSubmodule out;
    const CartanDatum &cd = V.cd;
    const std::size_t n = V.dim(), m = W.dim();
    // functionals on End(V): (x.phi)(B) = phi(sum S(x_(1)) B x_(2)); delta_ij has weight wt(j) - wt(i)
    TensorProduct Z;
    Z.cd = cd;
    Z.left_dim = Z.right_dim = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Z.weights.push_back(V.weights[j] - V.weights[i]);
    for (int g = 0; g < cd.rank; ++g) {
        const auto ug = static_cast<std::size_t>(g);
        const RatFunc qi = RatFunc::q_pow(cd.d(g));
        const SparseMatrix Kinv = V.K_inv(g);
        // R_E(B) = -q_i^-1 E B K^-1 + K^-1 B E, R_F(B) = -q_i F B K^-1 + K^-1 B F
        for (int which = 0; which < 2; ++which) {
            const SparseMatrix &X = which == 0 ? V.E[ug] : V.F[ug];
            const RatFunc c = which == 0 ? -qi.inverse() : -qi;
            SparseMatrix Zx(n * n, n * n);
            X.for_each([&](std::size_t k, std::size_t i, const RatFunc &x) {
                // (X e_ij K^-1)_kj = X_ki kinv_j
                for (std::size_t j = 0; j < n; ++j) Zx.add(i * n + j, k * n + j, c * x * Kinv.get(j, j));
                // (K^-1 e_ak X)_ai = kinv_a X_ki
                for (std::size_t a = 0; a < n; ++a) Zx.add(a * n + k, a * n + i, Kinv.get(a, a) * x);
            });
            (which == 0 ? Z.E : Z.F).push_back(std::move(Zx));
        }
    }
    const Report zrep = verify_module(static_cast<const Module &>(Z));
    out.report.add("dual-index-module", zrep.passed(), zrep.passed() ? "" : zrep.checks.front().witness);
    const IrrepModule adj = adjoint_module(cd);
    HWSpace hw;
    try {
        hw = highest_weight_space(Z, adj.highest_weight);
    } catch (const Error &e) {
        out.report.add("adjoint-embedding", false, e.what());
        return out;
    }
    const CGEmbedding emb = cg_embedding(adj, Z, hw.basis.front());
    const Report erep = verify_embedding(adj, Z, emb);
    out.report.add("adjoint-embedding", erep.passed(), erep.passed() ? "" : erep.checks.front().witness);

    const SparseMatrix T = mm.M - SparseMatrix::identity(mm.M.rows());
    out.A.assign(adj.dim(), SparseMatrix(m, m));
    T.for_each([&](std::size_t r, std::size_t c, const RatFunc &x) {
        const std::size_t i = r / m, k = r % m, j = c / m, l = c % m;
        for (std::size_t a = 0; a < adj.dim(); ++a) {
            const RatFunc kij = emb.K(a, i * n + j);
            if (!kij.is_zero()) out.A[a].add(k, l, kij * x);
        }
    });

    std::string bad;
    for (int g = 0; g < cd.rank && bad.empty(); ++g) {
        const auto ug = static_cast<std::size_t>(g);
        const RatFunc qi = RatFunc::q_pow(cd.d(g));
        const SparseMatrix K = W.K(g), Ki = W.K_inv(g);
        for (std::size_t a = 0; a < adj.dim() && bad.empty(); ++a) {
            const SparseMatrix &A = out.A[a];
            auto rhs = [&](const SparseMatrix &pi) {
                SparseMatrix s(m, m);
                for (const auto &[b, y] : pi.column(a)) s = s + y * out.A[b];
                return s;
            };
            if (W.E[ug] * A * K - qi.inverse() * (K * A * W.E[ug]) != rhs(adj.E[ug])) bad = "E_" + std::to_string(g + 1) + " on A_" + std::to_string(a);
            else if (W.F[ug] * A * K - qi * (K * A * W.F[ug]) != rhs(adj.F[ug])) bad = "F_" + std::to_string(g + 1) + " on A_" + std::to_string(a);
            else if (K * A * Ki != rhs(adj.K(g))) bad = "K_" + std::to_string(g + 1) + " on A_" + std::to_string(a);
        }
    }
    out.report.add("ad-submodule", bad.empty(), bad);

    DenseMatrix<RatFunc> span(m * m, adj.dim());
    for (std::size_t a = 0; a < adj.dim(); ++a) out.A[a].for_each([&](std::size_t k, std::size_t l, const RatFunc &x) { span(k * m + l, a) = x; });
    out.span_rank = rank(span);
    out.report.add("ad-submodule-nonzero", out.span_rank > 0, out.span_rank > 0 ? "" : "all A_a vanish");
    return out;
}

}  // namespace qla
