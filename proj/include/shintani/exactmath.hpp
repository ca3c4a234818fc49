// Exact integer and rational linear algebra over GMP.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "shintani/error.hpp"

namespace shintani {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<T>>& cols);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const;
    std::vector<T> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<T>& v);
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
{
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_)
            fail(Errc::InvalidInput, "ragged matrix literal");
        for (const auto& x : r)
            data_.push_back(x);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols)
{
    if (cols.empty())
        return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        m.set_column(j, cols[j]);
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows)
{
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            fail(Errc::InvalidInput, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const
{
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const
{
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
void Matrix<T>::set_column(std::size_t j, const std::vector<T>& v)
{
    if (v.size() != rows_)
        fail(Errc::InvalidInput, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        fail(Errc::InvalidInput, "matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.cols() != x.size())
        fail(Errc::InvalidInput, "matrix-vector shape mismatch");
    std::vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

// Determinant by fraction-free Bareiss elimination.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

struct InverseDet {
    RatMatrix inverse;
    Rational det;
};

// Throws SingularMatrix when det = 0.
InverseDet inv_det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

// Solves m x = b for square nonsingular m.
RatVector solve(const RatMatrix& m, const RatVector& b);

std::size_t rank(const RatMatrix& m);

struct HnfResult {
    IntMatrix h;  // row Hermite normal form
    IntMatrix u;  // unimodular, h = u * m
};

// Row HNF: pivots positive, entries above a pivot reduced into [0, pivot),
// zero rows last.
HnfResult hnf(const IntMatrix& m);

// Z^n / sigma Z^n, where sigma Z^n is spanned by the columns of sigma.
class LatticeQuotient {
public:
    explicit LatticeQuotient(IntMatrix sigma);

    const IntMatrix& sigma() const noexcept { return sigma_; }
    const std::vector<IntVector>& reps() const noexcept { return reps_; }
    std::size_t size() const noexcept { return reps_.size(); }

    // The canonical representative congruent to x.
    IntVector reduce(const IntVector& x) const;
    bool congruent(const IntVector& x, const IntVector& y) const;

private:
    IntMatrix sigma_;
    IntMatrix basis_rows_;  // upper triangular row basis of sigma Z^n
    std::vector<IntVector> reps_;
};

// Throws SingularMatrix if det sigma = 0.
LatticeQuotient quotient_reps(const IntMatrix& sigma);

// True iff v is an integer combination of gens.
bool in_integer_span(const IntVector& v, const std::vector<IntVector>& gens);

// As in_integer_span, also producing coefficients c with v = sum c_i gens_i.
bool in_integer_span(const IntVector& v, const std::vector<IntVector>& gens, IntVector& witness);

Integer gcd_of(const IntVector& v);
Integer lcm_of_denominators(const RatVector& v);
// Scales a nonzero rational vector to the primitive integer vector on the same ray.
IntVector primitive(const RatVector& v);
Rational frac(const Rational& x);
Integer floor_of(const Rational& x);
bool is_integer(const Rational& x);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

}  // namespace shintani
