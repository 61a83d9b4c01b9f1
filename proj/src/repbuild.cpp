#include "qla/repbuild.hpp"

#include "qla/error.hpp"
#include "qla/qcombinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace qla {

SparseMatrix Module::K(int i) const {
    std::vector<RatFunc> d;
    d.reserve(dim());
    for (std::size_t a = 0; a < dim(); ++a) d.push_back(RatFunc::v_pow(k_exponent(i, a)));
    return SparseMatrix::diagonal(d);
}

SparseMatrix Module::K_inv(int i) const {
    std::vector<RatFunc> d;
    d.reserve(dim());
    for (std::size_t a = 0; a < dim(); ++a) d.push_back(RatFunc::v_pow(-k_exponent(i, a)));
    return SparseMatrix::diagonal(d);
}

std::map<Weight, std::vector<std::size_t>> Module::blocks() const {
    std::map<Weight, std::vector<std::size_t>> b;
    for (std::size_t a = 0; a < dim(); ++a) b[weights[a]].push_back(a);
    return b;
}

namespace {

Weight simple_root(const CartanDatum &cd, int i) {
    Weight w(static_cast<std::size_t>(cd.rank));
    for (int k = 0; k < cd.rank; ++k) w[static_cast<std::size_t>(k)] = cd.a(k, i);
    return w;
}

struct Candidate {
    int letter;
    std::size_t parent;
    std::vector<int> label;
};

}  // namespace

IrrepModule build_irrep(const CartanDatum &cd, const Weight &lambda, std::size_t budget_dim) {
    if (!is_dominant(lambda)) throw Error(ErrorKind::NonDominant, to_string(lambda) + " is not dominant");
    const long expected = weyl_dim(cd, lambda);
    if (static_cast<std::size_t>(expected) > budget_dim)
        throw Error(ErrorKind::BudgetExceeded, "dimension " + std::to_string(expected) + " exceeds budget " + std::to_string(budget_dim));
    const auto mults = weight_multiplicities(cd, lambda);
    const int n = cd.rank;
    std::vector<Weight> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(simple_root(cd, i));

    IrrepModule m;
    m.cd = cd;
    m.highest_weight = lambda;
    std::vector<std::vector<SparseVec>> Ecol(static_cast<std::size_t>(n)), Fcol(static_cast<std::size_t>(n));
    std::map<Weight, std::vector<std::size_t>> index;

    auto add_vector = [&](const Weight &w, std::vector<int> label, std::size_t parent, int letter) {
        const std::size_t a = m.weights.size();
        m.weights.push_back(w);
        m.labels.push_back(std::move(label));
        m.parent.push_back(parent);
        m.letter.push_back(letter);
        for (int i = 0; i < n; ++i) {
            Ecol[static_cast<std::size_t>(i)].emplace_back();
            Fcol[static_cast<std::size_t>(i)].emplace_back();
        }
        index[w].push_back(a);
        return a;
    };

    add_vector(lambda, {}, IrrepModule::npos, -1);
    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::map<Weight, std::vector<Candidate>> next;
        for (const auto &w : level)
            for (std::size_t b : index[w])
                for (int i = 0; i < n; ++i) {
                    std::vector<int> label = m.labels[b];
                    label.push_back(i);
                    next[w - alpha[static_cast<std::size_t>(i)]].push_back({i, b, std::move(label)});
                }
        level.clear();
        for (auto it = next.rbegin(); it != next.rend(); ++it) {
            const Weight &mu = it->first;
            auto &cands = it->second;
            std::sort(cands.begin(), cands.end(), [](const Candidate &x, const Candidate &y) { return x.label < y.label; });

            // Signature rows: coordinates of E_j c at weight mu + alpha_j, stacked over j.
            std::vector<std::pair<int, std::size_t>> rows;  // (j, global index)
            std::map<std::pair<int, std::size_t>, std::size_t> row_of;
            for (int j = 0; j < n; ++j) {
                auto f = index.find(mu + alpha[static_cast<std::size_t>(j)]);
                if (f == index.end()) continue;
                for (std::size_t g : f->second) {
                    row_of[{j, g}] = rows.size();
                    rows.emplace_back(j, g);
                }
            }
            std::vector<std::vector<SparseVec>> sig(cands.size(), std::vector<SparseVec>(static_cast<std::size_t>(n)));
            DenseMatrix<RatFunc> S(rows.size(), cands.size());
            for (std::size_t c = 0; c < cands.size(); ++c) {
                const int i = cands[c].letter;
                const std::size_t b = cands[c].parent;
                for (int j = 0; j < n; ++j) {
                    // E_j F_i b = F_i E_j b + delta_ij [wt(b)(h_i)]_{q_i} b
                    SparseVec out;
                    for (const auto &[k, x] : Ecol[static_cast<std::size_t>(j)][b]) axpy(out, x, Fcol[static_cast<std::size_t>(i)][k]);
                    if (i == j) axpy(out, RatFunc(q_int(m.weights[b][static_cast<std::size_t>(i)], cd.d(i))), SparseVec{{b, RatFunc(1)}});
                    for (const auto &[g, x] : out) S(row_of.at({j, g}), c) = x;
                    sig[c][static_cast<std::size_t>(j)] = std::move(out);
                }
            }
            DenseMatrix<Rational> S1(rows.size(), cands.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cands.size(); ++c) S1(r, c) = S(r, c).classical_limit();
            const std::vector<std::size_t> piv = independent_columns(S1);
            const auto mit = mults.find(mu);
            const std::size_t want = mit == mults.end() ? 0 : static_cast<std::size_t>(mit->second);
            if (piv.size() != want)
                throw Error(ErrorKind::InternalInconsistency, "weight " + to_string(mu) + " has rank " + std::to_string(piv.size()) +
                                                                  ", expected multiplicity " + std::to_string(want));
            if (piv.empty()) continue;  // all candidates vanish
            level.push_back(mu);

            std::vector<bool> is_piv(cands.size(), false);
            std::vector<std::size_t> new_index(cands.size(), IrrepModule::npos);
            for (std::size_t c : piv) {
                is_piv[c] = true;
                const std::size_t a = add_vector(mu, cands[c].label, cands[c].parent, cands[c].letter);
                new_index[c] = a;
                for (int j = 0; j < n; ++j) Ecol[static_cast<std::size_t>(j)][a] = sig[c][static_cast<std::size_t>(j)];
                Fcol[static_cast<std::size_t>(cands[c].letter)][cands[c].parent] = SparseVec{{a, RatFunc(1)}};
            }
            std::vector<std::size_t> rest;
            for (std::size_t c = 0; c < cands.size(); ++c)
                if (!is_piv[c]) rest.push_back(c);
            if (rest.empty()) continue;
            DenseMatrix<RatFunc> aug(rows.size(), piv.size() + rest.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t k = 0; k < piv.size(); ++k) aug(r, k) = S(r, piv[k]);
                for (std::size_t k = 0; k < rest.size(); ++k) aug(r, piv.size() + k) = S(r, rest[k]);
            }
            const auto e = rref(std::move(aug));
            for (std::size_t k = 0; k < piv.size(); ++k)
                if (k >= e.pivots.size() || e.pivots[k] != k)
                    throw Error(ErrorKind::InternalInconsistency, "pivot vectors dependent at weight " + to_string(mu));
            if (e.pivots.size() != piv.size())
                throw Error(ErrorKind::InternalInconsistency, "candidate outside the pivot span at weight " + to_string(mu));
            for (std::size_t k = 0; k < rest.size(); ++k) {
                const Candidate &c = cands[rest[k]];
                SparseVec col;
                for (std::size_t r = 0; r < piv.size(); ++r) {
                    const RatFunc &x = e.reduced(r, piv.size() + k);
                    if (!x.is_zero()) col.emplace(new_index[piv[r]], x);
                }
                Fcol[static_cast<std::size_t>(c.letter)][c.parent] = std::move(col);
            }
        }
    }
    if (static_cast<long>(m.dim()) != expected)
        throw Error(ErrorKind::InternalInconsistency, "built dimension " + std::to_string(m.dim()) + " differs from Weyl dimension " + std::to_string(expected));
    const std::size_t d = m.dim();
    for (int i = 0; i < n; ++i) {
        SparseMatrix E(d, d), F(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            E.set_column(a, Ecol[static_cast<std::size_t>(i)][a]);
            F.set_column(a, Fcol[static_cast<std::size_t>(i)][a]);
        }
        m.E.push_back(std::move(E));
        m.F.push_back(std::move(F));
    }
    return m;
}

IrrepModule adjoint_module(const CartanDatum &cd, std::size_t budget_dim) {
    return build_irrep(cd, positive_roots(cd).highest_root.weight, budget_dim);
}

Module dual_module(const Module &m) {
    Module d;
    d.cd = m.cd;
    for (const auto &w : m.weights) d.weights.push_back(-w);
    for (int i = 0; i < m.cd.rank; ++i) {
        const int di = m.cd.d(i);
        d.E.push_back(RatFunc::q_pow(-di) * RatFunc(-1) * m.E[static_cast<std::size_t>(i)].transpose());
        d.F.push_back(RatFunc::q_pow(di) * RatFunc(-1) * m.F[static_cast<std::size_t>(i)].transpose());
    }
    return d;
}

namespace {

std::string entry_witness(const SparseMatrix &diff) {
    std::string w;
    diff.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) {
        if (w.empty()) w = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") off by " + x.to_string();
    });
    return w;
}

void check_weights(const Module &m, Report &rep) {
    std::string bad;
    for (int i = 0; i < m.cd.rank && bad.empty(); ++i) {
        const Weight a = simple_root(m.cd, i);
        auto scan = [&](const SparseMatrix &X, int sign, const char *name) {
            X.for_each([&](std::size_t r, std::size_t c, const RatFunc &) {
                if (!bad.empty()) return;
                Weight expect = m.weights[c];
                for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += sign * a[k];
                if (m.weights[r] != expect)
                    bad = std::string(name) + std::to_string(i + 1) + " maps " + std::to_string(c) + " to " + std::to_string(r);
            });
        };
        scan(m.E[static_cast<std::size_t>(i)], 1, "E");
        scan(m.F[static_cast<std::size_t>(i)], -1, "F");
    }
    rep.add("weights", bad.empty(), bad);
}

}  // namespace

Report verify_module(const Module &m) {
    Report rep;
    const int n = m.cd.rank;
    const std::size_t d = m.dim();
    check_weights(m, rep);

    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j) {
            const auto &Ei = m.E[static_cast<std::size_t>(i)];
            const auto &Fj = m.F[static_cast<std::size_t>(j)];
            SparseMatrix lhs = Ei * Fj - Fj * Ei;
            SparseMatrix rhs(d, d);
            if (i == j) {
                std::vector<RatFunc> diag;
                for (std::size_t a = 0; a < d; ++a) diag.emplace_back(q_int(m.weights[a][static_cast<std::size_t>(i)], m.cd.d(i)));
                rhs = SparseMatrix::diagonal(diag);
            }
            if (lhs != rhs) bad = "[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "] " + entry_witness(lhs - rhs);
        }
    rep.add("commutator", bad.empty(), bad);

    for (const bool lower : {false, true}) {
        bad.clear();
        const auto &X = lower ? m.F : m.E;
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = 0; j < n && bad.empty(); ++j) {
                if (i == j) continue;
                const int N = 1 - m.cd.a(i, j);
                SparseMatrix sum(d, d);
                for (int k = 0; k <= N; ++k) {
                    RatFunc c(q_binomial(N, k, m.cd.d(i)));
                    if (k % 2) c = -c;
                    sum = sum + c * (power(X[static_cast<std::size_t>(i)], k) * X[static_cast<std::size_t>(j)] *
                                     power(X[static_cast<std::size_t>(i)], N - k));
                }
                if (!sum.is_zero()) bad = "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + entry_witness(sum);
            }
        rep.add(lower ? "serre-F" : "serre-E", bad.empty(), bad);
    }

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i) {
        const SparseMatrix K = m.K(i), Ki = m.K_inv(i);
        for (int j = 0; j < n && bad.empty(); ++j) {
            const int e = m.cd.d(i) * m.cd.a(i, j);
            const auto &Ej = m.E[static_cast<std::size_t>(j)];
            const auto &Fj = m.F[static_cast<std::size_t>(j)];
            if (K * Ej * Ki != RatFunc::v_pow(e) * Ej) bad = "K" + std::to_string(i + 1) + " E" + std::to_string(j + 1);
            else if (K * Fj * Ki != RatFunc::v_pow(-e) * Fj) bad = "K" + std::to_string(i + 1) + " F" + std::to_string(j + 1);
        }
    }
    rep.add("k-grading", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n; ++i)
        for (const auto *X : {&m.E[static_cast<std::size_t>(i)], &m.F[static_cast<std::size_t>(i)]})
            X->for_each([&](std::size_t r, std::size_t c, const RatFunc &x) {
                if (bad.empty() && !x.is_regular_at_one())
                    bad = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + x.to_string();
            });
    rep.add("regular-at-1", bad.empty(), bad);

    if (bad.empty()) {
        // classical module: [e_i, f_j] = delta_ij h_i at v = 1
        auto at_one = [](const SparseMatrix &X) { return X.map([](const RatFunc &x) { return RatFunc(x.classical_limit()); }); };
        std::vector<SparseMatrix> e, f;
        for (int i = 0; i < n; ++i) {
            e.push_back(at_one(m.E[static_cast<std::size_t>(i)]));
            f.push_back(at_one(m.F[static_cast<std::size_t>(i)]));
        }
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = 0; j < n && bad.empty(); ++j) {
                const auto &ei = e[static_cast<std::size_t>(i)];
                const auto &fj = f[static_cast<std::size_t>(j)];
                SparseMatrix want(d, d);
                if (i == j) {
                    std::vector<RatFunc> h;
                    for (std::size_t a = 0; a < d; ++a) h.emplace_back(m.weights[a][static_cast<std::size_t>(i)]);
                    want = SparseMatrix::diagonal(h);
                }
                if (ei * fj - fj * ei != want) bad = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
            }
        rep.add("classical-limit", bad.empty(), bad);
    }
    return rep;
}

Report verify_module(const IrrepModule &m) {
    Report rep;
    const long wd = weyl_dim(m.cd, m.highest_weight);
    const bool dim_ok = static_cast<long>(m.dim()) == wd;
    rep.add("dimension", dim_ok, dim_ok ? "" : "dim " + std::to_string(m.dim()) + " vs Weyl " + std::to_string(wd));
    const auto mult = weight_multiplicities(m.cd, m.highest_weight);
    std::map<Weight, int> got;
    for (const auto &w : m.weights) ++got[w];
    rep.add("multiplicities", got == mult);
    bool hw = !m.weights.empty() && m.weights[0] == m.highest_weight;
    for (const auto &E : m.E) hw = hw && E.column(0).empty();
    rep.add("highest-weight", hw);
    rep.append(verify_module(static_cast<const Module &>(m)));
    return rep;
}

}  // namespace qla
