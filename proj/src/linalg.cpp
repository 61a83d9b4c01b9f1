#include "qla/linalg.hpp"

namespace qla {

void axpy(SparseVec &y, const RatFunc &a, const SparseVec &x) {
    if (a.is_zero()) return;
    for (const auto &[i, xi] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * xi);
        } else {
            it->second += a * xi;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

SparseVec scaled(const SparseVec &x, const RatFunc &a) {
    SparseVec y;
    if (a.is_zero()) return y;
    for (const auto &[i, xi] : x) y.emplace(i, a * xi);
    return y;
}

bool is_zero(const SparseVec &x) {
    for (const auto &kv : x)
        if (!kv.second.is_zero()) return false;
    return true;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.col_[i].emplace(i, RatFunc(1));
    return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<RatFunc> &d) {
    SparseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) m.col_[i].emplace(i, d[i]);
    return m;
}

RatFunc SparseMatrix::get(std::size_t i, std::size_t j) const {
    auto it = col_[j].find(i);
    return it == col_[j].end() ? RatFunc() : it->second;
}

void SparseMatrix::set(std::size_t i, std::size_t j, const RatFunc &x) {
    if (x.is_zero()) col_[j].erase(i);
    else col_[j][i] = x;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const RatFunc &x) {
    if (x.is_zero()) return;
    auto it = col_[j].find(i);
    if (it == col_[j].end()) {
        col_[j].emplace(i, x);
    } else {
        it->second += x;
        if (it->second.is_zero()) col_[j].erase(it);
    }
}

void SparseMatrix::set_column(std::size_t j, SparseVec c) {
    for (auto it = c.begin(); it != c.end();) {
        if (it->second.is_zero()) it = c.erase(it);
        else ++it;
    }
    col_[j] = std::move(c);
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto &c : col_) n += c.size();
    return n;
}

SparseVec SparseMatrix::apply(const SparseVec &x) const {
    SparseVec y;
    for (const auto &[j, xj] : x) axpy(y, xj, col_[j]);
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto &[i, x] : col_[j]) t.col_[i].emplace(j, x);
    return t;
}

SparseMatrix SparseMatrix::map(const std::function<RatFunc(const RatFunc &)> &f) const {
    SparseMatrix m(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto &[i, x] : col_[j]) m.set(i, j, f(x));
    return m;
}

bool SparseMatrix::is_zero() const {
    for (const auto &c : col_)
        if (!c.empty()) return false;
    return true;
}

void SparseMatrix::for_each(const std::function<void(std::size_t, std::size_t, const RatFunc &)> &f) const {
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto &[i, x] : col_[j]) f(i, j, x);
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InternalInconsistency, "matrix product shape mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) c.col_[j] = a.apply(b.col_[j]);
    return c;
}

SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::InternalInconsistency, "matrix sum shape mismatch");
    SparseMatrix c = a;
    for (std::size_t j = 0; j < b.cols_; ++j) axpy(c.col_[j], RatFunc(1), b.col_[j]);
    return c;
}

SparseMatrix operator-(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::InternalInconsistency, "matrix difference shape mismatch");
    SparseMatrix c = a;
    for (std::size_t j = 0; j < b.cols_; ++j) axpy(c.col_[j], RatFunc(-1), b.col_[j]);
    return c;
}

SparseMatrix operator*(const RatFunc &s, const SparseMatrix &a) {
    SparseMatrix c(a.rows_, a.cols_);
    if (s.is_zero()) return c;
    for (std::size_t j = 0; j < a.cols_; ++j) c.col_[j] = scaled(a.col_[j], s);
    return c;
}

bool operator==(const SparseMatrix &a, const SparseMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b) {
    SparseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto &[i, x] : a.column(j))
            for (std::size_t l = 0; l < b.cols(); ++l)
                for (const auto &[k, y] : b.column(l)) c.set(i * b.rows() + k, j * b.cols() + l, x * y);
    return c;
}

SparseMatrix power(const SparseMatrix &a, int k) {
    SparseMatrix r = SparseMatrix::identity(a.rows());
    for (int i = 0; i < k; ++i) r = a * r;
    return r;
}

DenseMatrix<Rational> classical_limit(const SparseMatrix &a) {
    DenseMatrix<Rational> m(a.rows(), a.cols());
    a.for_each([&](std::size_t i, std::size_t j, const RatFunc &x) { m(i, j) = x.classical_limit(); });
    return m;
}

}  // namespace qla
