#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace plumbforge {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using ZMatrix = Matrix<Integer>;

ZMatrix to_integer_matrix(const IntMatrix& m);
ZMatrix multiply(const ZMatrix& a, const ZMatrix& b);

// Leading principal minors D_1..D_n by fraction-free elimination without pivoting.
// Stops after the first zero minor; the returned vector is then shorter than n.
std::vector<Integer> leading_minors(const IntMatrix& m);

// Throws on non-symmetric input.
bool is_negative_definite(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

// Unique solution of a x = rhs for square nonsingular a.
std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<Rational>& rhs);

struct SmithForm {
    std::vector<Integer> factors;  // nonzero diagonal, positive, d_i | d_{i+1}
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const ZMatrix& m);

long long floor_to_ll(const Rational& q);
std::string to_string(const Rational& q);

}  // namespace plumbforge
