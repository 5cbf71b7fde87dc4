#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

using i64 = std::int64_t;

// Overflow raises instead of wrapping; group words stay far below the
// 64-bit range but the symplectic condition must never silently degrade.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

/// Dense integer matrix with exact (overflow-checked) arithmetic.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw validation_error("IntMat: negative dimension");
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    i64& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    i64 operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw validation_error("IntMat: shape mismatch in product");
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) {
                i64 acc = 0;
                for (int k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul((*this)(i, k), o(k, j)));
                r(i, j) = acc;
            }
        return r;
    }

    IntMat operator+(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("IntMat: shape mismatch in sum");
        IntMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
        return r;
    }

    IntMat operator-() const {
        IntMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_sub(0, a_[i]);
        return r;
    }

    IntMat transpose() const {
        IntMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    /// Determinant by cofactor expansion; exact, intended for small n.
    i64 det() const;

    /// Exact inverse of a unimodular matrix (|det| = 1); throws otherwise.
    IntMat unimodular_inverse() const;

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    // Lexicographic order so matrices can key ordered maps.
    bool operator<(const IntMat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return a_ < o.a_;
    }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<i64> a_;
};

} // namespace qtorus
