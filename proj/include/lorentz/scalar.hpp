#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

using Rational = mpq_class;

/// Absolute and relative slack used whenever a floating quantity is
/// compared against zero. Exact computations ignore it.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double band(double scale) const { return abs + rel * std::fabs(scale); }
};

/// Checks the Tolerance invariant (both components finite and >= 0).
void validate(const Tolerance& tol);

enum class Sign { Negative, Zero, Positive, Indeterminate };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& x) { return std::fabs(x.get_d()); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Sign of the stored value itself, no tolerance: -1, 0 or 1.
inline int exact_sign(double x) { return (x > 0.0) - (x < 0.0); }
inline int exact_sign(const Rational& x) { return sgn(x); }

/// Exact sign for rationals. A double is Positive only when it clears
/// tol.band(scale); anything inside the band is Indeterminate.
inline Sign sign_of(const Rational& x, double /*scale*/, const Tolerance& /*tol*/)
{
    const int s = sgn(x);
    return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline Sign sign_of(double x, double scale, const Tolerance& tol)
{
    const double b = tol.band(scale);
    if (x > b) return Sign::Positive;
    if (x < -b) return Sign::Negative;
    return Sign::Indeterminate;
}

/// Sign of lhs - rhs with the band scaled by max(|lhs|, |rhs|).
template <class T>
Sign compare(const T& lhs, const T& rhs, const Tolerance& tol)
{
    const T diff = lhs - rhs;
    return sign_of(diff, std::max(magnitude(lhs), magnitude(rhs)), tol);
}

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Accepts integers, decimals with optional exponent, and "p/q".
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& x);

template <class T>
T scalar_from_rational(const Rational& x);

template <>
inline double scalar_from_rational<double>(const Rational& x) { return x.get_d(); }

template <>
inline Rational scalar_from_rational<Rational>(const Rational& x) { return x; }

template <class T>
T scalar_from_double(double x);

template <>
inline double scalar_from_double<double>(double x) { return x; }

template <>
inline Rational scalar_from_double<Rational>(double x) { return rational_from_double(x); }

template <class T>
std::vector<T> vector_from_double(const std::vector<double>& v)
{
    std::vector<T> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(scalar_from_double<T>(x));
    return out;
}

template <class T>
std::vector<double> vector_to_double(const std::vector<T>& v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_double(x));
    return out;
}

/// Scale-free slack (lhs - rhs) / max(|lhs|, |rhs|, 1), as a double.
template <class T>
double normalized_slack(const T& lhs, const T& rhs)
{
    const T diff = lhs - rhs;
    const double denom = std::max({magnitude(lhs), magnitude(rhs), 1.0});
    return to_double(diff) / denom;
}

} // namespace lorentz
