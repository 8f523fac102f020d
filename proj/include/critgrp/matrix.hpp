#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critgrp/errors.hpp"

namespace critgrp {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    // Row-major nested initializer: Matrix<Integer>{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw PreconditionError("ragged matrix initializer");
            }
            for (long v : row) {
                data_.emplace_back(v);
            }
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out.push_back((*this)(i, j));
        }
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    // Columns listed in `which`, in that order.
    Matrix select_columns(std::span<const std::size_t> which) const {
        Matrix out(rows_, which.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < which.size(); ++k) {
                out(i, k) = (*this)(i, which[k]);
            }
        }
        return out;
    }

    Matrix select_rows(std::span<const std::size_t> which) const {
        Matrix out(which.size(), cols_);
        for (std::size_t k = 0; k < which.size(); ++k) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(k, j) = (*this)(which[k], j);
            }
        }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }

    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(dst, j) += k * (*this)(src, j);
        }
    }

    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, dst) += k * (*this)(i, src);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(i, j) = -(*this)(i, j);
        }
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, j) = -(*this)(i, j);
        }
    }

    bool is_zero() const {
        for (const auto& v : data_) {
            if (v != 0) return false;
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw PreconditionError("matrix product dimension mismatch");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw PreconditionError("matrix sum dimension mismatch");
        }
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] += b.data_[i];
        }
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw PreconditionError("matrix difference dimension mismatch");
        }
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] -= b.data_[i];
        }
        return a;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& a);

// Exact rational in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

} // namespace critgrp
