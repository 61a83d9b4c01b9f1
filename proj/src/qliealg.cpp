#include "qla/qliealg.hpp"

#include "qla/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace qla {

std::string to_string(Provenance p) { return p == Provenance::ExplicitSln ? "explicit-sln" : "generic-pipeline"; }

RatFunc QuantumLieAlgebra::f(std::size_t a, std::size_t b, std::size_t c) const {
    auto it = constants.find({a, b});
    if (it == constants.end()) return RatFunc();
    auto jt = it->second.find(c);
    return jt == it->second.end() ? RatFunc() : jt->second;
}

const SparseVec &QuantumLieAlgebra::bracket(std::size_t a, std::size_t b) const {
    static const SparseVec empty;
    auto it = constants.find({a, b});
    return it == constants.end() ? empty : it->second;
}

void QuantumLieAlgebra::set(std::size_t a, std::size_t b, std::size_t c, const RatFunc &x) {
    if (x.is_zero()) {
        auto it = constants.find({a, b});
        if (it == constants.end()) return;
        it->second.erase(c);
        if (it->second.empty()) constants.erase(it);
        return;
    }
    constants[{a, b}][c] = x;
}

std::optional<std::size_t> QuantumLieAlgebra::find_root(const std::vector<int> &root) const {
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (!basis[a].cartan && basis[a].root == root) return a;
    return std::nullopt;
}

std::optional<std::size_t> QuantumLieAlgebra::find_cartan(int k) const {
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (basis[a].cartan && basis[a].index == k) return a;
    return std::nullopt;
}

std::optional<std::size_t> QuantumLieAlgebra::find_x(int i, int j) const {
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (!basis[a].cartan && basis[a].i == i && basis[a].j == j) return a;
    return std::nullopt;
}

Weight QuantumLieAlgebra::grade_weight(std::size_t a) const { return root_weight(cd, basis[a].root); }

namespace {

RatFunc qp(int k) { return RatFunc::q_pow(k); }
int delta(bool b) { return b ? 1 : 0; }

struct Sln {
    int n;
    RatFunc s, t;

    RatFunc l(int i, int j, int k) const {
        const RatFunc a = qp(1 - k) * RatFunc(delta(k == i)) - qp(-1 - k) * RatFunc(delta(k == i - 1));
        const RatFunc b = qp(k - 1) * RatFunc(delta(k == j)) - qp(k + 1) * RatFunc(delta(k == j - 1));
        return a * (s + t * qp(n)) - b * (s + t * qp(-n));
    }
    RatFunc r(int i, int j, int k) const { return -l(j, i, k); }

    RatFunc f(int i, int j, int k) const {
        RatFunc out;
        const RatFunc qq = qp(1) + qp(-1);
        if (i == j) {
            if (k == i) out += s * (qp(k + 1) - qp(-k - 1)) + t * (qp(n + 1 - i) - qp(-n - 1 + i));
            if (k < i) out += s * qq * (qp(k) - qp(-k));
            if (k > i) out += t * qq * (qp(n - k) - qp(-n + k));
        }
        if (i == j - 1) {
            if (k <= i) out += s * (qp(-k) - qp(k));
            else out += t * (qp(k - n) - qp(-k + n));
        }
        if (j == i - 1) {
            if (k <= j) out += s * (qp(-k) - qp(k));
            else out += t * (qp(k - n) - qp(-k + n));
        }
        return out;
    }

    RatFunc g(int i, int j, int k) const {
        const RatFunc a = qp(k) * RatFunc(delta(k < j)) - qp(-k) * RatFunc(delta(k < i));
        const RatFunc b = qp(n - k) * RatFunc(delta(k >= i)) - qp(k - n) * RatFunc(delta(k >= j));
        return qp(i - j) * (s * a + t * b);
    }

    // q^(1/2 - j) (s + t q^n) and q^(i - 1/2) (s + t q^-n)
    RatFunc N(int, int j, int) const { return RatFunc::v_pow(1 - 2 * j) * (s + t * qp(n)); }
    RatFunc M(int, int i, int) const { return RatFunc::v_pow(2 * i - 1) * (s + t * qp(-n)); }
};

std::string x_name(int i, int j, int n) {
    if (n < 10) return "X_{" + std::to_string(i) + std::to_string(j) + "}";
    return "X_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

QuantumLieAlgebra build_sln_explicit(const SlnParams &p) {
    if (p.n < 2) throw Error(ErrorKind::InvalidParams, "n must be at least 2");
    const RatFunc st = p.s + p.t;
    if (!st.is_regular_at_one() || st.classical_limit() == 0)
        throw Error(ErrorKind::InvalidParams, "s + t must be invertible at q = 1, got " + st.to_string());
    const int n = p.n;
    QuantumLieAlgebra A;
    A.cd = build_cartan(Series::A, n - 1);
    A.provenance = Provenance::ExplicitSln;
    A.params = p;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            BasisElement e;
            e.root.assign(static_cast<std::size_t>(n - 1), 0);
            const int sign = i < j ? 1 : -1;
            for (int k = std::min(i, j); k < std::max(i, j); ++k) e.root[static_cast<std::size_t>(k - 1)] = sign;
            e.i = i;
            e.j = j;
            e.name = x_name(i, j, n);
            A.basis.push_back(std::move(e));
        }
    for (int k = 1; k < n; ++k) {
        BasisElement e;
        e.cartan = true;
        e.root.assign(static_cast<std::size_t>(n - 1), 0);
        e.index = k;
        e.name = "H_" + std::to_string(k);
        A.basis.push_back(std::move(e));
    }
    const Sln c{n, p.s, p.t};
    auto X = [&](int i, int j) { return *A.find_x(i, j); };
    auto H = [&](int k) { return *A.find_cartan(k); };
    for (int k = 1; k < n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                A.set(H(k), X(i, j), X(i, j), c.l(i, j, k));
                A.set(X(i, j), H(k), X(i, j), -c.r(i, j, k));
            }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) A.set(H(i), H(j), H(k), c.f(i, j, k));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k < n; ++k) A.set(X(i, j), X(j, i), H(k), c.g(i, j, k));
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l || (k == j && l == i)) continue;
                    if (j == k && i != l) A.set(X(i, j), X(k, l), X(i, l), c.N(i, j, l));
                    if (i == l && j != k) A.set(X(i, j), X(k, l), X(k, j), -c.M(k, i, j));
                }
        }
    return A;
}

GenericPipeline run_generic_pipeline(const CartanDatum &cd, std::size_t budget_dim) {
    GenericPipeline p;
    p.V = adjoint_module(cd, budget_dim);
    p.T = tensor_square(p.V);
    const Weight &theta = p.V.highest_weight;
    p.hw = highest_weight_space(p.T, theta);
    const int mult = tensor_multiplicity(cd, theta, theta, theta);
    if (static_cast<int>(p.hw.basis.size()) != mult)
        throw Error(ErrorKind::InternalInconsistency, "highest-weight space has dimension " + std::to_string(p.hw.basis.size()) +
                                                          ", classical multiplicity " + std::to_string(mult));
    std::optional<SparseVec> v0;
    for (const auto &k : p.hw.basis) {
        try {
            v0 = antisymmetrize_hw(p.T, k);
            break;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::ClassicallyZero) throw;
        }
    }
    if (!v0) throw Error(ErrorKind::ClassicallyZero, "every highest-weight basis vector antisymmetrizes to zero at v = 1");
    p.v0 = *v0;
    // complement: sigma-symmetric parts of the kernel vectors, so the kernel of the
    // bracket is stable under sigma_tilde
    std::vector<SparseVec> span{p.v0};
    auto independent = [&](const std::vector<SparseVec> &vs) {
        std::map<std::size_t, std::size_t> idx;
        for (const auto &v : vs)
            for (const auto &kv : v) idx.try_emplace(kv.first, idx.size());
        DenseMatrix<RatFunc> m(idx.size(), vs.size());
        for (std::size_t c = 0; c < vs.size(); ++c)
            for (const auto &[k, x] : vs[c]) m(idx.at(k), c) = x;
        return rank(m) == vs.size();
    };
    for (const auto &k : p.hw.basis) {
        if (static_cast<int>(span.size()) == mult) break;
        SparseVec s = symmetrize_hw(p.T, k);
        if (is_zero(s)) continue;
        s = normalize_vector(s);
        auto trial = span;
        trial.push_back(s);
        if (!independent(trial)) continue;
        span = trial;
        p.others.push_back(s);
    }
    if (static_cast<int>(span.size()) != mult) throw Error(ErrorKind::SingularSystem, "could not complete the highest-weight basis");
    p.K = cg_embedding(p.V, p.T, p.v0);
    p.B = invert_cg(p.V, p.T, p.K, p.others);

    QuantumLieAlgebra &A = p.algebra;
    A.cd = cd;
    A.provenance = Provenance::GenericPipeline;
    int h = 0;
    for (std::size_t a = 0; a < p.V.dim(); ++a) {
        BasisElement e;
        e.root = root_coordinates(cd, p.V.weights[a]);
        e.cartan = std::all_of(e.root.begin(), e.root.end(), [](int x) { return x == 0; });
        if (e.cartan) {
            e.index = ++h;
            e.name = "H_" + std::to_string(h);
        } else {
            e.name = "X[";
            for (std::size_t k = 0; k < e.root.size(); ++k) e.name += (k ? "," : "") + std::to_string(e.root[k]);
            e.name += "]";
        }
        A.basis.push_back(std::move(e));
    }
    const std::size_t d = p.V.dim();
    p.B.for_each([&](std::size_t c, std::size_t ab, const RatFunc &x) { A.set(ab / d, ab % d, c, x); });
    A.action_E = p.V.E;
    A.action_F = p.V.F;
    A.words = p.V.labels;
    return p;
}

QuantumLieAlgebra build_generic(const CartanDatum &cd, std::size_t budget_dim) { return run_generic_pipeline(cd, budget_dim).algebra; }

QuantumLieAlgebra change_basis(const QuantumLieAlgebra &A, const SparseMatrix &P) {
    const std::size_t d = A.dim();
    DenseMatrix<RatFunc> aug(d, 2 * d);
    P.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) { aug(i, j) = x; });
    for (std::size_t i = 0; i < d; ++i) aug(i, d + i) = RatFunc(1);
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < d || e.pivots[d - 1] != d - 1) throw Error(ErrorKind::SingularSystem, "basis change not invertible");
    SparseMatrix inv(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!e.reduced(i, d + j).is_zero()) inv.set(i, j, e.reduced(i, d + j));
    QuantumLieAlgebra out = A;
    out.constants.clear();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            SparseVec br;
            for (const auto &[x, px] : P.column(a))
                for (const auto &[y, py] : P.column(b)) axpy(br, px * py, A.bracket(x, y));
            for (const auto &[c, z] : inv.apply(br)) out.set(a, b, c, z);
        }
    for (auto &m : out.action_E) m = inv * m * P;
    for (auto &m : out.action_F) m = inv * m * P;
    {
        const DenseMatrix<Rational> P1 = classical_limit(P);
        if (A.frame.rows() == 0) {
            out.frame = P1;
        } else {
            DenseMatrix<Rational> f(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t j = 0; j < d; ++j) f(i, j) += A.frame(i, k) * P1(k, j);
            out.frame = f;
        }
    }
    return out;
}

QuantumLieAlgebra canonical_normalize(const QuantumLieAlgebra &A) {
    const int d1 = A.cd.d(0);
    std::vector<int> plus(static_cast<std::size_t>(A.cd.rank), 0);
    plus[0] = 1;
    std::vector<int> minus = plus;
    minus[0] = -1;
    const auto xp = A.find_root(plus), xm = A.find_root(minus);
    if (!xp || !xm) throw Error(ErrorKind::GaugeObstruction, "no root vectors for the first simple root");
    // X_-a -> b X_-a and H := [X_a, X_-a], with b fixed by [H, X_a] = 2 q^d X_a
    const SparseVec &g = A.bracket(*xp, *xm);
    RatFunc G;
    for (const auto &[c, gk] : g) G += gk * A.f(c, *xp, *xp);
    if (G.is_zero()) throw Error(ErrorKind::GaugeObstruction, "degenerate first sl2 triple");
    const RatFunc b = RatFunc(2) * RatFunc::q_pow(d1) / G;
    if (!b.is_invertible_at_one()) throw Error(ErrorKind::GaugeObstruction, "rescaling " + b.to_string() + " is singular at q = 1");
    std::optional<std::size_t> slot;
    for (int k = 1; !slot; ++k) {
        const auto h = A.find_cartan(k);
        if (!h) throw Error(ErrorKind::GaugeObstruction, "[X_a, X_-a] has no Cartan part invertible at q = 1");
        // keep the change of basis regular at q = 1
        if (g.count(*h) && g.at(*h).is_invertible_at_one()) slot = h;
    }
    SparseMatrix P = SparseMatrix::identity(A.dim());
    P.set(*xm, *xm, b);
    P.set_column(*slot, scaled(g, b));
    QuantumLieAlgebra out = change_basis(A, P);
    out.normalized = true;
    return out;
}

}  // namespace qla
