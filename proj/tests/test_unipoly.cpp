#include "doctest.h"
#include "support.hpp"

#include "lorentz/errors.hpp"
#include "lorentz/hurwitz.hpp"
#include "lorentz/unipoly.hpp"

using namespace lorentz;
using testing_support::Gen;

using P = UniPoly<Rational>;

namespace {

P random_poly(Gen& g, std::size_t max_deg)
{
    const std::size_t d = static_cast<std::size_t>(g.integer(0, static_cast<long>(max_deg)));
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = g.rational();
    return P(c);
}

} // namespace

TEST_CASE("normalization strips trailing zeros")
{
    const P p({1, 2, 0, 0});
    CHECK(p.degree() == std::optional<std::size_t>(1));
    CHECK(P({0, 0}).is_zero());
    CHECK_FALSE(P({0, 0}).degree().has_value());
    CHECK_THROWS_AS(P{}.degree_or_throw(), ZeroPolynomial);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.coeff(7) == 0);
}

TEST_CASE("evaluation")
{
    CHECK(eval(P{}, Rational(5)) == 0);
    CHECK(eval(P({1, 2, 1}), Rational(1)) == 4);
    CHECK(eval(P({3, 7, 7, 4}), Rational(1)) == 21);
    CHECK(eval(P({1, 1, 1}), Rational(1)) * eval(P({3, 4}), Rational(1)) == 21);
}

TEST_CASE("derivatives")
{
    CHECK(derivative(P({1, 1, 1})) == P({1, 2}));
    CHECK(derivative(P({1, 1, 1}), 3).is_zero());
    CHECK(derivative(P({1, 1, 1}), 0) == P({1, 1, 1}));
    Gen g(21);
    for (int trial = 0; trial < 200; ++trial) {
        const P p = random_poly(g, 8);
        CHECK(derivative(p, 2) == derivative(derivative(p)));
        const auto d2 = derivative(p, 2);
        for (std::size_t k = 0; k + 2 < p.coeffs().size(); ++k)
            CHECK(d2.coeff(static_cast<long>(k)) == Rational(static_cast<long>((k + 2) * (k + 1))) * p.coeffs()[k + 2]);
    }
}

TEST_CASE("reverse")
{
    CHECK(reverse(P({1, 2, 3})) == P({3, 2, 1}));
    CHECK(reverse(reverse(P({1, 2, 3}))) == P({1, 2, 3}));
    CHECK_THROWS_AS(reverse(P{}), ZeroPolynomial);
    const P stable({5, 25, 50, 30, 10, 3});
    CHECK(root_oracle_stable(stable).status == Status::Holds);
    CHECK(root_oracle_stable(reverse(stable)).status == Status::Holds);
}

TEST_CASE("reverse preserves the Routh-Hurwitz verdict")
{
    Gen g(22);
    for (int trial = 0; trial < 1000; ++trial) {
        P p = random_poly(g, 8);
        if (p.is_zero() || p.coeffs()[0] == 0) continue;
        CHECK(routh_hurwitz_stable(p).status == routh_hurwitz_stable(reverse(p)).status);
    }
}

TEST_CASE("multiplication")
{
    CHECK(multiply(P({1, 1, 1}), P({3, 4})) == P({3, 7, 7, 4}));
    CHECK(multiply(P({1, 2}), P({1})) == P({1, 2}));
    CHECK(multiply(P({1, 2}), P{}).is_zero());
    Gen g(23);
    for (int trial = 0; trial < 300; ++trial) {
        const P p = random_poly(g, 5), q = random_poly(g, 5), r = random_poly(g, 5);
        const P pq = p * q;
        for (long t = -3; t <= 3; ++t) CHECK(eval(pq, Rational(t)) == eval(p, Rational(t)) * eval(q, Rational(t)));
        CHECK(pq == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(derivative(pq) == derivative(p) * q + p * derivative(q));
    }
}

TEST_CASE("even and odd parts")
{
    const auto [e, o] = even_odd_parts(P({1, 2, 3, 4}));
    CHECK(e == P({1, 0, 3}));
    CHECK(o == P({0, 2, 0, 4}));
    const auto [e2, o2] = even_odd_parts(P({1, 0, 5}));
    CHECK(e2 == P({1, 0, 5}));
    CHECK(o2.is_zero());
    Gen g(24);
    for (int trial = 0; trial < 100; ++trial) {
        const P p = random_poly(g, 9);
        const auto [ev, od] = even_odd_parts(p);
        CHECK(ev + od == p);
    }
}

TEST_CASE("Hermite-Biehler parts")
{
    auto [fe, fo] = hb_parts(P({1, 2, 3, 4}));
    CHECK(fe == P({1, -3}));
    CHECK(fo == P({2, -4}));
    std::tie(fe, fo) = hb_parts(P({7}));
    CHECK(fe == P({7}));
    CHECK(fo.is_zero());
    std::tie(fe, fo) = hb_parts(P({5, 25, 50, 30, 10, 3}));
    CHECK(fe == P({5, -50, 10}));
    CHECK(fo == P({25, -30, 3}));
    // p(iw) = f_e(w^2) + i w f_o(w^2)
    Gen g(25);
    for (int trial = 0; trial < 100; ++trial) {
        const P p = random_poly(g, 9);
        std::tie(fe, fo) = hb_parts(p);
        const Rational w = g.rational();
        Rational re = 0, im = 0, pw = 1;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            const Rational term = p.coeffs()[k] * pw;
            switch (k % 4) {
            case 0: re += term; break;
            case 1: im += term; break;
            case 2: re -= term; break;
            case 3: im -= term; break;
            }
            pw *= w;
        }
        CHECK(re == eval(fe, Rational(w * w)));
        CHECK(im == w * eval(fo, Rational(w * w)));
    }
}
