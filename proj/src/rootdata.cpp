#include "qla/rootdata.hpp"

#include "qla/error.hpp"
#include "qla/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace qla {

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

std::string CartanDatum::name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

int Root::height() const { return std::accumulate(simple.begin(), simple.end(), 0); }

namespace {

bool valid_type(Series s, int n) {
    switch (s) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
    }
    return false;
}

// Symmetric form (alpha_i, alpha_j) in Bourbaki numbering.
std::vector<std::vector<int>> symmetric_form(Series s, int n) {
    std::vector<std::vector<int>> b(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j, int val) {
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = val;
        b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = val;
    };
    auto diag = [&](int i, int val) { b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = val; };
    switch (s) {
    case Series::A:
        for (int i = 0; i < n; ++i) diag(i, 2);
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case Series::B:  // alpha_n short
        for (int i = 0; i < n - 1; ++i) diag(i, 4);
        diag(n - 1, 2);
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case Series::C:  // alpha_n long
        for (int i = 0; i < n - 1; ++i) diag(i, 2);
        diag(n - 1, 4);
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case Series::D:
        for (int i = 0; i < n; ++i) diag(i, 2);
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case Series::E:
        for (int i = 0; i < n; ++i) diag(i, 2);
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case Series::F:
        diag(0, 4);
        diag(1, 4);
        diag(2, 2);
        diag(3, 2);
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case Series::G:  // alpha_1 short
        diag(0, 2);
        diag(1, 6);
        link(0, 1, -3);
        break;
    }
    return b;
}

DenseMatrix<Rational> inverse_cartan(const CartanDatum &cd) {
    const auto n = static_cast<std::size_t>(cd.rank);
    DenseMatrix<Rational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = cd.cartan[i][j];
        aug(i, n + i) = 1;
    }
    const auto e = rref(std::move(aug));
    DenseMatrix<Rational> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace

CartanDatum build_cartan(Series series, int rank) {
    if (!valid_type(series, rank))
        throw Error(ErrorKind::InvalidType, std::string(1, series_letter(series)) + std::to_string(rank) + " is not a finite type");
    const auto b = symmetric_form(series, rank);
    CartanDatum cd;
    cd.series = series;
    cd.rank = rank;
    const auto n = static_cast<std::size_t>(rank);
    cd.cartan.assign(n, std::vector<int>(n, 0));
    cd.symmetrizers.resize(n);
    int g = 0;
    for (std::size_t i = 0; i < n; ++i) g = std::gcd(g, b[i][i] / 2);
    for (std::size_t i = 0; i < n; ++i) {
        cd.symmetrizers[i] = b[i][i] / 2 / g;
        for (std::size_t j = 0; j < n; ++j) cd.cartan[i][j] = 2 * b[i][j] / b[i][i];
    }
    return cd;
}

CartanDatum parse_cartan(std::string_view name) {
    if (name.size() < 2) throw Error(ErrorKind::InvalidType, "bad algebra name '" + std::string(name) + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (c < 'A' || c > 'G') throw Error(ErrorKind::InvalidType, "unknown series in '" + std::string(name) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || i > 3)
            throw Error(ErrorKind::InvalidType, "bad rank in '" + std::string(name) + "'");
        rank = 10 * rank + (name[i] - '0');
    }
    return build_cartan(static_cast<Series>(c - 'A'), rank);
}

Weight root_weight(const CartanDatum &cd, const std::vector<int> &simple) {
    Weight w(static_cast<std::size_t>(cd.rank), 0);
    for (int i = 0; i < cd.rank; ++i)
        for (int k = 0; k < cd.rank; ++k) w[static_cast<std::size_t>(i)] += simple[static_cast<std::size_t>(k)] * cd.a(i, k);
    return w;
}

std::vector<Rational> simple_coordinates(const CartanDatum &cd, const Weight &lambda) {
    // lambda = sum_k c_k alpha_k, lambda(h_i) = sum_k a_ik c_k
    const auto inv = inverse_cartan(cd);
    const auto n = static_cast<std::size_t>(cd.rank);
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) c[k] += inv(k, i) * lambda[i];
    return c;
}

std::vector<int> root_coordinates(const CartanDatum &cd, const Weight &lambda) {
    std::vector<int> out;
    for (const auto &c : simple_coordinates(cd, lambda)) {
        if (c.get_den() != 1) throw Error(ErrorKind::InternalInconsistency, "weight " + to_string(lambda) + " is not in the root lattice");
        out.push_back(static_cast<int>(c.get_num().get_si()));
    }
    return out;
}

Rational inner_product(const CartanDatum &cd, const Weight &a, const Weight &b) {
    // (omega_i, alpha_k) = d_k delta_ik
    const auto c = simple_coordinates(cd, b);
    Rational r = 0;
    for (int k = 0; k < cd.rank; ++k) r += c[static_cast<std::size_t>(k)] * cd.d(k) * a[static_cast<std::size_t>(k)];
    return r;
}

bool is_dominant(const Weight &lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

Weight operator+(const Weight &a, const Weight &b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight &a, const Weight &b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Weight operator-(const Weight &a) {
    Weight r(a);
    for (auto &x : r) x = -x;
    return r;
}

std::string to_string(const Weight &w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

RootSystem positive_roots(const CartanDatum &cd) {
    const auto n = static_cast<std::size_t>(cd.rank);
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> level;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        level.push_back(e);
        found.insert(e);
    }
    std::vector<std::vector<int>> all = level;
    // alpha-string through beta: p = how far down, q = p - beta(h_i) how far up
    while (!level.empty()) {
        std::set<std::vector<int>> next;
        for (const auto &beta : level) {
            const Weight w = root_weight(cd, beta);
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                for (;;) {
                    --down[i];
                    if (!found.count(down)) break;
                    ++p;
                }
                if (p - w[i] > 0) {
                    std::vector<int> up = beta;
                    ++up[i];
                    if (!found.count(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        for (const auto &r : level) {
            found.insert(r);
            all.push_back(r);
        }
    }
    RootSystem rs;
    std::sort(all.begin(), all.end(), [](const auto &x, const auto &y) {
        const int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
        return hx != hy ? hx < hy : x < y;
    });
    for (const auto &r : all) rs.positive_roots.push_back(Root{r, root_weight(cd, r)});
    rs.highest_root = rs.positive_roots.back();
    rs.rho.assign(n, 1);
    rs.bilinear_form.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.bilinear_form[i][j] = cd.symmetrizers[i] * cd.cartan[i][j];
    return rs;
}

long weyl_dim(const CartanDatum &cd, const Weight &lambda) {
    if (!is_dominant(lambda)) throw Error(ErrorKind::NonDominant, to_string(lambda) + " is not dominant");
    const RootSystem rs = positive_roots(cd);
    const Weight lr = lambda + rs.rho;
    Rational dim = 1;
    for (const auto &a : rs.positive_roots) {
        // (mu, alpha) = sum_k c_k d_k mu_k for alpha = sum_k c_k alpha_k
        long num = 0, den = 0;
        for (std::size_t k = 0; k < a.simple.size(); ++k) {
            num += static_cast<long>(a.simple[k]) * cd.symmetrizers[k] * lr[k];
            den += static_cast<long>(a.simple[k]) * cd.symmetrizers[k] * rs.rho[k];
        }
        Rational f{mpz_class(num), mpz_class(den)};
        f.canonicalize();
        dim *= f;
    }
    if (dim.get_den() != 1) throw Error(ErrorKind::InternalInconsistency, "non-integral Weyl dimension");
    return dim.get_num().get_si();
}

std::map<Weight, int> weight_multiplicities(const CartanDatum &cd, const Weight &lambda) {
    if (!is_dominant(lambda)) throw Error(ErrorKind::NonDominant, to_string(lambda) + " is not dominant");
    const RootSystem rs = positive_roots(cd);
    const auto n = static_cast<std::size_t>(cd.rank);
    auto pair_root = [&](const Weight &mu, const Root &a) {
        long s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(a.simple[k]) * cd.symmetrizers[k] * mu[k];
        return s;
    };
    const Weight lr = lambda + rs.rho;
    const Rational top = inner_product(cd, lr, lr);
    std::map<Weight, int> mult{{lambda, 1}};
    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::set<Weight> cand;
        for (const auto &nu : level)
            for (std::size_t i = 0; i < n; ++i) {
                Weight mu = nu;
                for (std::size_t k = 0; k < n; ++k) mu[k] -= cd.cartan[k][i];
                cand.insert(mu);
            }
        level.clear();
        for (const auto &mu : cand) {
            long num = 0;
            for (const auto &a : rs.positive_roots) {
                Weight x = mu;
                for (;;) {
                    x = x + a.weight;
                    auto it = mult.find(x);
                    if (it == mult.end()) break;
                    num += 2L * it->second * pair_root(x, a);
                }
            }
            const Weight mr = mu + rs.rho;
            const Rational den = top - inner_product(cd, mr, mr);
            if (den == 0) {
                if (num != 0) throw Error(ErrorKind::InternalInconsistency, "Freudenthal recursion degenerate");
                continue;
            }
            Rational m = Rational(num) / den;
            m.canonicalize();
            if (m.get_den() != 1 || m < 0) throw Error(ErrorKind::InternalInconsistency, "non-integral multiplicity");
            if (m == 0) continue;
            mult[mu] = static_cast<int>(m.get_num().get_si());
            level.push_back(mu);
        }
    }
    return mult;
}

std::map<Weight, int> tensor_decomposition(const CartanDatum &cd, const Weight &mu, const Weight &nu) {
    const auto cm = weight_multiplicities(cd, mu);
    const auto cn = weight_multiplicities(cd, nu);
    std::map<Weight, long> ch;
    for (const auto &[a, ma] : cm)
        for (const auto &[b, mb] : cn) ch[a + b] += static_cast<long>(ma) * mb;
    std::map<Weight, int> out;
    auto height = [&](const Weight &w) {
        Rational h = 0;
        for (const auto &c : simple_coordinates(cd, w)) h += c;
        return h;
    };
    for (;;) {
        const Weight *best = nullptr;
        Rational hb;
        for (const auto &[w, m] : ch) {
            if (m == 0) continue;
            if (m < 0) throw Error(ErrorKind::InternalInconsistency, "negative character coefficient");
            const Rational h = height(w);
            if (!best || h > hb) {
                best = &w;
                hb = h;
            }
        }
        if (!best) break;
        const Weight top = *best;
        if (!is_dominant(top)) throw Error(ErrorKind::InternalInconsistency, "maximal weight not dominant");
        const long m = ch[top];
        out[top] = static_cast<int>(m);
        for (const auto &[w, k] : weight_multiplicities(cd, top)) ch[w] -= m * k;
    }
    return out;
}

int tensor_multiplicity(const CartanDatum &cd, const Weight &mu, const Weight &nu, const Weight &lambda) {
    if (!is_dominant(mu) || !is_dominant(nu) || !is_dominant(lambda)) throw Error(ErrorKind::NonDominant, "weights must be dominant");
    const auto d = tensor_decomposition(cd, mu, nu);
    auto it = d.find(lambda);
    return it == d.end() ? 0 : it->second;
}

}  // namespace qla
