#include "lorentz/matrix.hpp"

#include <cmath>
#include <utility>

namespace lorentz {

namespace {

Rational bareiss_det(Matrix<Rational> m)
{
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    Rational det = m(n - 1, n - 1);
    return sign > 0 ? det : Rational(-det);
}

double lu_det(Matrix<double> m)
{
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

} // namespace

template <>
Rational determinant(const Matrix<Rational>& m)
{
    return bareiss_det(m);
}

template <>
double determinant(const Matrix<double>& m)
{
    return lu_det(m);
}

template <>
std::vector<Rational> leading_minors(const Matrix<Rational>& m)
{
    // Without pivoting, the k-th Bareiss pivot is Delta_{k+1}. A zero
    // pivot stops the recurrence; remaining minors are computed directly.
    const std::size_t n = m.size();
    std::vector<Rational> minors;
    minors.reserve(n);
    Matrix<Rational> w = m;
    Rational prev(1);
    std::size_t k = 0;
    for (; k < n; ++k) {
        minors.push_back(w(k, k));
        if (sgn(w(k, k)) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    for (std::size_t j = k + 1; j < n; ++j) minors.push_back(bareiss_det(m.leading_block(j + 1)));
    return minors;
}

template <>
std::vector<double> leading_minors(const Matrix<double>& m)
{
    std::vector<double> minors;
    minors.reserve(m.size());
    for (std::size_t k = 1; k <= m.size(); ++k) minors.push_back(lu_det(m.leading_block(k)));
    return minors;
}

template <class T>
double hadamard_bound(const Matrix<T>& m, std::size_t k)
{
    double bound = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double d = to_double(m(i, j));
            s += d * d;
        }
        bound *= std::sqrt(s);
    }
    return bound;
}

template <class T>
UniPoly<T> char_poly(const Matrix<T>& a)
{
    const std::size_t n = a.size();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix<T> mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        const Matrix<T> am = a * mk;
        T trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / T(static_cast<long>(k));
    }
    return UniPoly<T>(std::move(c));
}

template <class T>
Matrix<T> companion(const UniPoly<T>& p)
{
    const std::size_t d = p.degree_or_throw();
    Matrix<T> c(d);
    const T& lead = p.leading();
    for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = T(1);
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeffs()[i] / lead;
    return c;
}

template double hadamard_bound(const Matrix<double>&, std::size_t);
template double hadamard_bound(const Matrix<Rational>&, std::size_t);
template UniPoly<double> char_poly(const Matrix<double>&);
template UniPoly<Rational> char_poly(const Matrix<Rational>&);
template Matrix<double> companion(const UniPoly<double>&);
template Matrix<Rational> companion(const UniPoly<Rational>&);

} // namespace lorentz
