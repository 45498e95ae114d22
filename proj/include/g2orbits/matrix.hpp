#pragma once

// Dense row-major matrices over an exact scalar and deterministic exact
// elimination. Scalars must provide +, -, *, /, unary -, ==, is_zero(),
// construction from long, and a default value equal to zero.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2orbits {

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Stacks equal-length vectors as rows.
    static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<T>& entries() const { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_) {
            if (!(x == T{})) return false;
        }
        return true;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] T trace() const {
        T s{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == T{}) continue;
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
std::vector<T> operator*(const Matrix<T>& m, std::span<const T> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        T s{};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == T{} || v[j] == T{}) continue;
            s += m(i, j) * v[j];
        }
        out[i] = std::move(s);
    }
    return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
    return m * std::span<const T>(v);
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
template <typename T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Columns are processed left to right; the pivot
/// for a column is the first remaining row, scanning top-down, whose entry
/// in that column is nonzero.
template <typename T>
RowEchelon<T> row_reduce(Matrix<T> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
    return row_reduce(m).pivot_cols.size();
}

/// Canonical basis of a span: the nonzero rows of the RREF of the stacked
/// vectors. Depends only on the subspace, not on the spanning set.
template <typename T>
std::vector<std::vector<T>> canonical_span_basis(std::span<const std::vector<T>> vectors, std::size_t dim) {
    auto ech = row_reduce(Matrix<T>::from_rows(vectors, dim));
    std::vector<std::vector<T>> basis;
    basis.reserve(ech.pivot_cols.size());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
        const auto row = ech.reduced.row(i);
        basis.emplace_back(row.begin(), row.end());
    }
    return basis;
}

/// Basis of the right null space in reduced echelon form: every vector has
/// leading entry 1, and the leading positions of the other vectors are zero.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    const auto ech = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<T>> raw;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols);
        v[f] = T(1);
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, f);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;
    return canonical_span_basis<T>(raw, cols);
}

/// One exact solution of m·x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, std::span<const T> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto ech = row_reduce(std::move(aug));
    if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<T> x(m.cols());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced(i, m.cols());
    return x;
}

template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
    return solve(m, std::span<const T>(b));
}

}  // namespace g2orbits
