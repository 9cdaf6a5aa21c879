#include "cpmat/rational_matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cpmat {
namespace {

/// Clears denominators row by row: returns an integer matrix Z with
/// Z[i] = d_i * M[i] for the least common denominator d_i of row i, plus the
/// product of all d_i.  rank(Z) == rank(M) and det(M) == det(Z) / prod(d_i).
struct ClearedMatrix {
    std::vector<std::vector<Integer>> z;
    Integer denominator_product;
};

ClearedMatrix clear_denominators(const RationalMatrix& m) {
    ClearedMatrix out;
    out.denominator_product = 1;
    out.z.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer den = m.at(i, j).get_den();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        out.z[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j);
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), row_lcm.get_mpz_t(),
                         v.get_den().get_mpz_t());
            out.z[i][j] = v.get_num() * scale;
        }
        out.denominator_product *= row_lcm;
    }
    return out;
}

/// Fraction-free (Bareiss) elimination on an integer matrix with row
/// pivoting and column skipping.  Returns the rank; when `det` is non-null
/// and the matrix is square, also stores the exact determinant of Z.
std::size_t bareiss(std::vector<std::vector<Integer>>& z, Integer* det) {
    const std::size_t rows = z.size();
    const std::size_t cols = rows == 0 ? 0 : z[0].size();
    std::size_t rank = 0;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && z[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;  // no pivot in this column
        if (pivot != rank) {
            std::swap(z[pivot], z[rank]);
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer num = z[rank][col] * z[i][j] - z[i][col] * z[rank][j];
                // Bareiss guarantees exact divisibility by the previous pivot:
                // every intermediate entry is a minor of the original matrix.
                assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(z[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    if (det) {
        if (rows == 0) *det = 1;           // empty matrix: det of nothing is 1
        else if (rank < rows) *det = 0;    // a column was skipped or rows ran out
        else *det = sign > 0 ? prev : -prev;
    }
    return rank;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: inner dimensions disagree");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& lhs_ik = at(i, k);
            if (lhs_ik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += lhs_ik * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_)
        throw std::invalid_argument("hstack: row counts disagree");
    RationalMatrix out(lhs.rows_, lhs.cols_ + rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t j = 0; j < lhs.cols_; ++j) out.at(i, j) = lhs.at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, lhs.cols_ + j) = rhs.at(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_)
        throw std::out_of_range("columns: slice exceeds matrix width");
    RationalMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
}

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    auto cleared = clear_denominators(*this);
    return bareiss(cleared.z, nullptr);
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant: matrix is not square");
    if (rows_ == 0) return Rational(1);
    auto cleared = clear_denominators(*this);
    Integer det_z;
    bareiss(cleared.z, &det_z);
    Rational det(det_z, cleared.denominator_product);
    det.canonicalize();
    return det;
}

}  // namespace cpmat
