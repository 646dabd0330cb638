#pragma once

// Generators and brute-force oracles shared by the test binaries.

#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using lorentz::Matrix;
using lorentz::Rational;
using lorentz::UniPoly;

/// p/q in lowest terms; mpq_class(p, q) alone leaves the fraction as is.
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| <= num, 1 <= q <= den.
    Rational rational(long num = 9, long den = 5)
    {
        Rational r(integer(-num, num), integer(1, den));
        r.canonicalize();
        return r;
    }

    Rational positive_rational(long num = 9, long den = 5)
    {
        Rational r(integer(1, num), integer(1, den));
        r.canonicalize();
        return r;
    }

    /// Positive reals spread over a few orders of magnitude.
    double log_uniform(double decades = 2.0) { return std::pow(10.0, uniform(-decades / 2, decades / 2)); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

template <class T>
Matrix<T> minor_of(const Matrix<T>& m, std::size_t row, std::size_t col)
{
    const std::size_t n = m.size();
    Matrix<T> out(n - 1);
    for (std::size_t i = 0, oi = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, oj = 0; j < n; ++j) {
            if (j == col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix<Rational>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m(0, j)) == 0) continue;
        const Rational c = m(0, j) * cofactor_det(minor_of(m, 0, j));
        if (j % 2 == 0) acc += c;
        else acc -= c;
    }
    return acc;
}

/// Gauss-Jordan inverse of a nonsingular rational matrix.
inline Matrix<Rational> inverse_of(Matrix<Rational> m)
{
    const std::size_t n = m.size();
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (sgn(m(p, c)) == 0) ++p;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(p, j), m(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const Rational piv = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m(r, c)) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// det(tI - A) by Laplace expansion over polynomial entries.
inline UniPoly<Rational> cofactor_char_poly(const Matrix<Rational>& a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<UniPoly<Rational>>> e(n, std::vector<UniPoly<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = -a(i, j);
            if (i == j) e[i][j] = UniPoly<Rational>({c, Rational(1)});
            else e[i][j] = UniPoly<Rational>({c});
        }
    struct Rec {
        static UniPoly<Rational> det(const std::vector<std::vector<UniPoly<Rational>>>& m)
        {
            const std::size_t k = m.size();
            if (k == 0) return UniPoly<Rational>({Rational(1)});
            if (k == 1) return m[0][0];
            UniPoly<Rational> acc;
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<std::vector<UniPoly<Rational>>> sub;
                for (std::size_t i = 1; i < k; ++i) {
                    std::vector<UniPoly<Rational>> row;
                    for (std::size_t c = 0; c < k; ++c)
                        if (c != j) row.push_back(m[i][c]);
                    sub.push_back(row);
                }
                const auto term = m[0][j] * det(sub);
                acc = j % 2 == 0 ? acc + term : acc - term;
            }
            return acc;
        }
    };
    return Rec::det(e);
}

/// Expands prod (t - r_i) with complex arithmetic.
inline std::vector<std::complex<double>> expand_roots(const std::vector<std::complex<double>>& roots)
{
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = next;
    }
    return c;
}

/// Real polynomial with prescribed roots: real ones taken as is, complex
/// ones paired with their conjugates.
inline std::vector<double> poly_from_roots(const std::vector<double>& real_roots,
                                           const std::vector<std::complex<double>>& upper)
{
    std::vector<std::complex<double>> all;
    for (double r : real_roots) all.emplace_back(r, 0.0);
    for (const auto& z : upper) {
        all.push_back(z);
        all.push_back(std::conj(z));
    }
    const auto c = expand_roots(all);
    std::vector<double> out;
    for (const auto& x : c) out.push_back(x.real());
    return out;
}

/// Positive sequence with a_k^2 > ((k+1)/k) a_{k-1} a_{k+1}: successive
/// ratios shrink by more than k/(k+1) at every step.
inline std::vector<Rational> strict_newton_sequence(Gen& g, std::size_t d)
{
    std::vector<Rational> a{g.positive_rational()};
    Rational ratio = g.positive_rational();
    for (std::size_t k = 1; k <= d; ++k) {
        a.push_back(a.back() * ratio);
        ratio *= frac(static_cast<long>(k), static_cast<long>(k + 1)) * frac(g.integer(1, 19), 20);
    }
    return a;
}

/// Degree-d polynomial over both sides of the stability boundary: either
/// log-uniform positive coefficients or a product over random roots with
/// real parts in [-3, 0.6]. Coefficients are exact images of doubles.
inline std::vector<Rational> random_stability_poly(Gen& g, std::size_t d)
{
    std::vector<double> c;
    if (g.integer(0, 2) == 0) {
        for (std::size_t k = 0; k <= d; ++k) c.push_back(g.log_uniform(3.0));
    } else {
        std::vector<double> real_roots;
        std::vector<std::complex<double>> upper;
        std::size_t left = d;
        while (left > 0) {
            const double re = g.uniform(-3.0, 0.6);
            if (left >= 2 && g.coin()) {
                upper.emplace_back(re, g.uniform(0.05, 3.0));
                left -= 2;
            } else {
                real_roots.push_back(re);
                left -= 1;
            }
        }
        c = poly_from_roots(real_roots, upper);
        const double lead = g.log_uniform(2.0);
        for (auto& x : c) x *= lead;
    }
    std::vector<Rational> out;
    for (double x : c) out.push_back(lorentz::rational_from_double(x));
    return out;
}

} // namespace testing_support
