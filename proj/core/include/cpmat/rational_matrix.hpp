#pragma once

#include <cstddef>
#include <vector>

#include "cpmat/rational.hpp"

namespace cpmat {

/// Dense matrix of exact rationals.  Rank and determinant use fraction-free
/// Bareiss elimination on a denominator-cleared integer copy, so results are
/// exact for any input size.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;

    /// [lhs | rhs] side-by-side; row counts must agree.
    static RationalMatrix hstack(const RationalMatrix& lhs, const RationalMatrix& rhs);

    /// Copy of columns [first, first+count).
    RationalMatrix columns(std::size_t first, std::size_t count) const;

    /// Exact rank via fraction-free elimination with column pivot search.
    std::size_t rank() const;

    /// Exact determinant (square matrices only; throws std::invalid_argument
    /// otherwise).
    Rational determinant() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace cpmat
