#pragma once

// Exact linear algebra over Q(v) (RatFunc) and Q (Rational): small dense
// matrices for eliminations, column-major sparse matrices for module actions.

#include "qla/error.hpp"
#include "qla/ratfunc.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qla {

inline bool is_zero_scalar(const RatFunc &x) { return x.is_zero(); }
inline bool is_zero_scalar(const Rational &x) { return x == 0; }

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
struct Echelon {
    DenseMatrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination. The pivot for a column
// is the first remaining row with a nonzero entry, so the result only depends
// on the input matrix.
template <class T>
Echelon<T> rref(DenseMatrix<T> m) {
    Echelon<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero_scalar(m(p, col))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        const T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!is_zero_scalar(m(row, j))) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero_scalar(m(i, col))) continue;
            const T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!is_zero_scalar(m(row, j))) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const DenseMatrix<T> &m) {
    return rref(m).pivots.size();
}

// Kernel basis: one vector per free column (in column order) with a 1 there.
template <class T>
std::vector<std::vector<T>> kernel(const DenseMatrix<T> &m) {
    const Echelon<T> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// A solution of A x = b (free variables set to zero), or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const DenseMatrix<T> &a, const std::vector<T> &b) {
    DenseMatrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon<T> e = rref(std::move(aug));
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

// Greedy selection of columns that are linearly independent, scanning left to right.
template <class T>
std::vector<std::size_t> independent_columns(const DenseMatrix<T> &m) {
    return rref(m).pivots;
}

using SparseVec = std::map<std::size_t, RatFunc>;

void axpy(SparseVec &y, const RatFunc &a, const SparseVec &x);
SparseVec scaled(const SparseVec &x, const RatFunc &a);
bool is_zero(const SparseVec &x);

// Column-major sparse matrix over Q(v).
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix diagonal(const std::vector<RatFunc> &d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    RatFunc get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const RatFunc &x);
    void add(std::size_t i, std::size_t j, const RatFunc &x);
    const SparseVec &column(std::size_t j) const { return col_[j]; }
    void set_column(std::size_t j, SparseVec c);
    std::size_t nonzeros() const;

    SparseVec apply(const SparseVec &x) const;
    SparseMatrix transpose() const;
    SparseMatrix map(const std::function<RatFunc(const RatFunc &)> &f) const;
    bool is_zero() const;
    // Visits nonzero entries column by column.
    void for_each(const std::function<void(std::size_t, std::size_t, const RatFunc &)> &f) const;

    friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator-(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator*(const RatFunc &s, const SparseMatrix &a);
    friend bool operator==(const SparseMatrix &a, const SparseMatrix &b);
    friend bool operator!=(const SparseMatrix &a, const SparseMatrix &b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> col_;
};

// Kronecker product: (a (x) b)[(i,k),(j,l)] = a[i][j] * b[k][l], index i*b.rows()+k.
SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b);
// Integer power of a square matrix.
SparseMatrix power(const SparseMatrix &a, int k);
// Entrywise value at v = 1.
DenseMatrix<Rational> classical_limit(const SparseMatrix &a);

}  // namespace qla
