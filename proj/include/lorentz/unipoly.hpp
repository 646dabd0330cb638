#pragma once

#include "lorentz/errors.hpp"
#include "lorentz/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace lorentz {

/// Univariate polynomial a_0 + a_1 t + ... + a_d t^d, coefficients stored
/// ascending. Trailing zeros are stripped on construction, so the last
/// stored coefficient is nonzero unless the polynomial is zero.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

    bool is_zero() const { return coeffs_.empty(); }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const
    {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    std::size_t degree_or_throw() const
    {
        if (coeffs_.empty()) throw ZeroPolynomial();
        return coeffs_.size() - 1;
    }

    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Coefficient of t^k; zero outside 0..d (negative k included).
    T coeff(long k) const
    {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return T(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const T& leading() const
    {
        if (coeffs_.empty()) throw ZeroPolynomial();
        return coeffs_.back();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize()
    {
        while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
    }
    static bool is_zero_scalar(const T& x) { return lorentz::is_zero(x); }

    std::vector<T> coeffs_;
};

template <class T>
T eval(const UniPoly<T>& p, const T& t)
{
    T acc(0);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

template <class T>
UniPoly<T> derivative(const UniPoly<T>& p, std::size_t m = 1)
{
    const auto& c = p.coeffs();
    if (m >= c.size()) return {};
    std::vector<T> out(c.size() - m);
    for (std::size_t k = 0; k < out.size(); ++k) {
        // (k+m)! / k!
        T falling(1);
        for (std::size_t j = k + 1; j <= k + m; ++j) falling *= T(static_cast<long>(j));
        out[k] = falling * c[k + m];
    }
    return UniPoly<T>(std::move(out));
}

/// t^d p(1/t).
template <class T>
UniPoly<T> reverse(const UniPoly<T>& p)
{
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<T> c(p.coeffs().rbegin(), p.coeffs().rend());
    return UniPoly<T>(std::move(c));
}

template <class T>
UniPoly<T> operator*(const UniPoly<T>& p, const UniPoly<T>& q)
{
    if (p.is_zero() || q.is_zero()) return {};
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return UniPoly<T>(std::move(out));
}

template <class T>
UniPoly<T> multiply(const UniPoly<T>& p, const UniPoly<T>& q)
{
    return p * q;
}

template <class T>
UniPoly<T> operator+(const UniPoly<T>& p, const UniPoly<T>& q)
{
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<T> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p.coeff(static_cast<long>(k)) + q.coeff(static_cast<long>(k));
    return UniPoly<T>(std::move(out));
}

template <class T>
UniPoly<T> operator-(const UniPoly<T>& p, const UniPoly<T>& q)
{
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<T> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p.coeff(static_cast<long>(k)) - q.coeff(static_cast<long>(k));
    return UniPoly<T>(std::move(out));
}

template <class T>
UniPoly<T> scale(const UniPoly<T>& p, const T& c)
{
    std::vector<T> out(p.coeffs());
    for (auto& x : out) x *= c;
    return UniPoly<T>(std::move(out));
}

/// f_even keeps a_0, a_2, ... in place; f_odd keeps a_1, a_3, ... in place.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> even_odd_parts(const UniPoly<T>& p)
{
    std::vector<T> ev(p.coeffs().size(), T(0));
    std::vector<T> od(p.coeffs().size(), T(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) (k % 2 == 0 ? ev : od)[k] = p.coeffs()[k];
    return {UniPoly<T>(std::move(ev)), UniPoly<T>(std::move(od))};
}

/// Hermite-Biehler parts in the variable s = w^2:
///   f_e(s) = sum (-1)^m a_{2m} s^m,  f_o(s) = sum (-1)^m a_{2m+1} s^m,
/// so that p(iw) = f_e(w^2) + i w f_o(w^2).
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> hb_parts(const UniPoly<T>& p)
{
    const std::size_t n = p.coeffs().size();
    std::vector<T> fe((n + 1) / 2);
    std::vector<T> fo(n / 2);
    for (std::size_t m = 0; m < fe.size(); ++m) fe[m] = (m % 2 == 0) ? p.coeffs()[2 * m] : T(-p.coeffs()[2 * m]);
    for (std::size_t m = 0; m < fo.size(); ++m) fo[m] = (m % 2 == 0) ? p.coeffs()[2 * m + 1] : T(-p.coeffs()[2 * m + 1]);
    return {UniPoly<T>(std::move(fe)), UniPoly<T>(std::move(fo))};
}

template <class U, class T>
UniPoly<U> convert(const UniPoly<T>& p)
{
    std::vector<U> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if constexpr (std::is_same_v<U, double>) out.push_back(to_double(c));
        else if constexpr (std::is_same_v<T, double>) out.push_back(rational_from_double(c));
        else out.push_back(U(c));
    }
    return UniPoly<U>(std::move(out));
}

} // namespace lorentz
