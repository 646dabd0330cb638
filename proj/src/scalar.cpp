#include "lorentz/scalar.hpp"

#include "lorentz/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace lorentz {

void validate(const Tolerance& tol)
{
    if (!(std::isfinite(tol.abs) && std::isfinite(tol.rel)) || tol.abs < 0.0 || tol.rel < 0.0) {
        throw InputError("tolerance components must be finite and nonnegative");
    }
}

Rational rational_from_double(double x)
{
    if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made exact");
    Rational r(x);
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational parse_integer(std::string_view s)
{
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(s) + "'");
    mpz_class z(std::string(body), 10);
    if (negative) z = -z;
    return Rational(z);
}

Rational parse_decimal(std::string_view s)
{
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = body.substr(e + 1);
        body = body.substr(0, e);
        const Rational ex = parse_integer(exp_text);
        if (abs(ex) > 10000) throw ParseError("exponent out of range: '" + std::string(s) + "'");
        exponent = ex.get_num().get_si();
    }
    std::string digits;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) throw ParseError("bad number: '" + std::string(s) + "'");
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
            throw ParseError("bad number: '" + std::string(s) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(body)) throw ParseError("bad number: '" + std::string(s) + "'");
        digits = std::string(body);
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const Rational p = parse_integer(trim(s.substr(0, slash)));
        const Rational q = parse_integer(trim(s.substr(slash + 1)));
        if (sgn(q) == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        Rational r = p / q;
        r.canonicalize();
        return r;
    }
    return parse_decimal(s);
}

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_str();
}

} // namespace lorentz
