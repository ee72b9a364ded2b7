#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "curvelim/errors.hpp"
#include "curvelim/scalar.hpp"

namespace curvelim {

/// Dense row-major matrix over one scalar backend. Desk-scale sizes only
/// (blown spaces stay under ~100x200), so no structure exploitation.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, scalar_traits<S>::zero()) {}
    Matrix(std::initializer_list<std::initializer_list<S>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw shape_error("ragged initializer");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    /// Column vector from entries.
    static Matrix column(const std::vector<S>& v) {
        Matrix m(v.size(), 1);
        m.e_ = v;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<S>& entries() const { return e_; }

    Matrix col(std::size_t c) const {
        Matrix m(rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
        return m;
    }
    std::vector<S> col_vec(std::size_t c) const {
        std::vector<S> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = -a.e_[i];
        return m;
    }
    friend Matrix operator*(const S& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (scalar_traits<S>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!scalar_traits<S>::is_zero(v)) return false;
        return true;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw shape_error("shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<S> e_;
};

/// Transpose with entrywise conjugation (identity on real rationals).
template <class S>
Matrix<S> conj_transpose(const Matrix<S>& a) {
    Matrix<S> m(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(c, r) = scalar_traits<S>::conj(a(r, c));
    return m;
}

/// Kronecker product; block (i,j) equals A(i,j)*B, blocks in A's row-major
/// entry order.
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (scalar_traits<S>::is_zero(a(i, j))) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    m(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return m;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.cols()) throw shape_error("vstack column mismatch");
    Matrix<S> m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
    return m;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows()) throw shape_error("hstack row mismatch");
    Matrix<S> m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

/// 2x2 block matrix [[0, s*B],[ -s*B... ]] helpers are built where needed;
/// this one assembles [[0, UR],[LL, 0]] with square blocks of equal size.
template <class S>
Matrix<S> antidiag_blocks(const Matrix<S>& upper_right, const Matrix<S>& lower_left) {
    std::size_t n = upper_right.rows();
    if (upper_right.cols() != n || lower_left.rows() != n || lower_left.cols() != n)
        throw shape_error("antidiag_blocks wants equal square blocks");
    Matrix<S> m(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            m(r, n + c) = upper_right(r, c);
            m(n + r, c) = lower_left(r, c);
        }
    return m;
}

using ExactMatrix = Matrix<ExactScalar>;
using FloatMatrix = Matrix<FloatScalar>;

}  // namespace curvelim
