#pragma once

// Dense row-major matrices over an exact ring, plus generic Gauss-Jordan
// elimination for the field cases (K and K(t)).

#include "alextor/laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace alextor {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data length does not match shape");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<T>& data() const { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transposed() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const
    {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using CycloMatrix = Matrix<CycloNumber>;
using LaurentMatrix = Matrix<LaurentPoly>;
using RatMatrix = Matrix<RatFunc>;

/// Elimination preference: smaller is a better pivot.
inline int pivot_weight(const CycloNumber&) { return 0; }
inline int pivot_weight(const RatFunc& f) { return f.num().span() + f.den().span(); }
inline int pivot_weight(const LaurentPoly& p) { return p.span(); }

template <class F>
struct RowEchelon {
    Matrix<F> reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan over a field. Deterministic: in each column the first row
/// holding a nonzero entry of minimal pivot_weight is used.
template <class F>
RowEchelon<F> rref(Matrix<F> a)
{
    RowEchelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t best = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            if (best == a.rows() || pivot_weight(a(i, c)) < pivot_weight(a(best, c))) best = i;
        }
        if (best == a.rows()) continue;
        a.swap_rows(r, best);
        F inv = F(1L) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            F f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

template <class F>
std::size_t field_rank(const Matrix<F>& a)
{
    return rref(a).pivot_cols.size();
}

/// Basis of the right kernel {v : a v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> field_kernel(const Matrix<F>& a)
{
    auto ech = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(a.cols());
        v[f] = F(1L);
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F field_det(Matrix<F> a)
{
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    F det(1L);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::size_t best = a.rows();
        for (std::size_t i = c; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            if (best == a.rows() || pivot_weight(a(i, c)) < pivot_weight(a(best, c))) best = i;
        }
        if (best == a.rows()) return F();
        if (best != c) {
            a.swap_rows(c, best);
            det = -det;
        }
        det *= a(c, c);
        F inv = F(1L) / a(c, c);
        for (std::size_t i = c + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            F f = a(i, c) * inv;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Inverse over a field; throws std::domain_error when singular.
template <class F>
Matrix<F> field_inverse(const Matrix<F>& a)
{
    if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = a.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F(1L);
    }
    auto ech = rref(std::move(aug));
    if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

inline LaurentPoly conjugate(const LaurentPoly& p) { return p.conjugated(); }
inline RatFunc conjugate(const RatFunc& f) { return f.conjugated(); }

template <class T>
Matrix<T> conjugate_transpose(const Matrix<T>& a)
{
    Matrix<T> out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conjugate(a(i, j));
    return out;
}

/// Block matrix assembled from equally sized blocks laid out row-major.
template <class T>
Matrix<T> block_matrix(const std::vector<std::vector<Matrix<T>>>& blocks, std::size_t block_rows, std::size_t block_cols)
{
    std::size_t br = blocks.size();
    std::size_t bc = br ? blocks[0].size() : 0;
    Matrix<T> out(br * block_rows, bc * block_cols);
    for (std::size_t I = 0; I < br; ++I)
        for (std::size_t J = 0; J < bc; ++J) {
            const auto& b = blocks[I][J];
            if (b.rows() != block_rows || b.cols() != block_cols) throw std::invalid_argument("block shape mismatch");
            for (std::size_t i = 0; i < block_rows; ++i)
                for (std::size_t j = 0; j < block_cols; ++j) out(I * block_rows + i, J * block_cols + j) = b(i, j);
        }
    return out;
}

template <class T>
std::string matrix_to_string(const Matrix<T>& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

} // namespace alextor
