#pragma once

#include "lorentz/errors.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// Dense n x n matrix, row-major.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
    Matrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data))
    {
        if (data_.size() != n_ * n_) throw DimensionMismatch("matrix data does not have n*n entries");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        Matrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must form a square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    const std::vector<T>& data() const { return data_; }

    /// Top-left k x k block.
    Matrix leading_block(std::size_t k) const
    {
        Matrix b(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
        return b;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("matrix product of different sizes");
    const std::size_t n = a.size();
    Matrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("matrix sum of different sizes");
    std::vector<T> d(a.data());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.data()[i];
    return Matrix<T>(a.size(), std::move(d));
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.size() != x.size()) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<T> y(a.size(), T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    Matrix<T> t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
    return t;
}

template <class U, class T>
Matrix<U> convert(const Matrix<T>& a)
{
    std::vector<U> d;
    d.reserve(a.data().size());
    for (const auto& x : a.data()) {
        if constexpr (std::is_same_v<U, double>) d.push_back(to_double(x));
        else if constexpr (std::is_same_v<T, double>) d.push_back(rational_from_double(x));
        else d.push_back(U(x));
    }
    return Matrix<U>(a.size(), std::move(d));
}

template <class T>
bool is_symmetric(const Matrix<T>& a, const Tolerance& tol)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if constexpr (is_exact_v<T>) {
                if (a(i, j) != a(j, i)) return false;
            } else {
                const double s = std::max(std::fabs(a(i, j)), std::fabs(a(j, i)));
                if (std::fabs(a(i, j) - a(j, i)) > tol.band(s)) return false;
            }
        }
    return true;
}

/// Frobenius norm, as a double.
template <class T>
double frobenius_norm(const Matrix<T>& a)
{
    double s = 0.0;
    for (const auto& x : a.data()) {
        const double d = to_double(x);
        s += d * d;
    }
    return std::sqrt(s);
}

/// Fraction-free (Bareiss) elimination for rationals; partial pivoting LU
/// for doubles. The 0 x 0 determinant is 1.
template <class T>
T determinant(const Matrix<T>& m);

/// Delta_k = det of the top-left k x k block, k = 1..n.
template <class T>
std::vector<T> leading_minors(const Matrix<T>& m);

/// Product of the Euclidean norms of the first k rows restricted to the
/// first k columns: the Hadamard bound on |Delta_k|.
template <class T>
double hadamard_bound(const Matrix<T>& m, std::size_t k);

/// det(tI - A) by Faddeev-LeVerrier; monic of degree n.
template <class T>
UniPoly<T> char_poly(const Matrix<T>& a);

/// Companion matrix of a monic-normalized polynomial (last column holds
/// -a_k / a_d); its characteristic polynomial is p / a_d.
template <class T>
Matrix<T> companion(const UniPoly<T>& p);

} // namespace lorentz
