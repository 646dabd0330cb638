#include "doctest.h"
#include "support.hpp"

#include "lorentz/errors.hpp"
#include "lorentz/sequences.hpp"

using namespace lorentz;
using testing_support::Gen;
using testing_support::strict_newton_sequence;

using P = UniPoly<Rational>;
using Seq = std::vector<Rational>;

namespace {

Seq q(std::initializer_list<const char*> xs)
{
    Seq out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

Rational factorial(std::size_t n)
{
    Rational r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= static_cast<long>(k);
    return r;
}

Seq random_positive(Gen& g, std::size_t n)
{
    Seq a;
    for (std::size_t k = 0; k < n; ++k) a.push_back(g.positive_rational());
    return a;
}

} // namespace

TEST_CASE("log-concavity")
{
    CHECK(is_log_concave(Seq{1, 1, 1}, false).status == Status::Holds);
    CHECK(is_log_concave(Seq{1, 1, 1}, true).status == Status::Fails);
    const auto geo = is_log_concave(Seq{1, 2, 4}, false);
    CHECK(geo.status == Status::Holds);
    CHECK(geo.margin == 0.0);
    REQUIRE(geo.witness);
    CHECK(geo.witness->indices == std::vector<std::size_t>{1});
    CHECK(is_log_concave(Seq{1, 4, 6, 4, 1}, true).status == Status::Holds);
    CHECK(is_log_concave(Seq{1, 0, 1}, false).status == Status::Fails);
    CHECK(is_log_concave(Seq{3}, true).status == Status::Holds);
    CHECK(is_log_concave(Seq{3, 5}, true).status == Status::Holds);
    CHECK_THROWS_AS(is_log_concave(Seq{}, false), InputError);
}

TEST_CASE("ultra log-concavity")
{
    const auto binom = is_ultra_log_concave(Seq{1, 3, 3, 1}, false);
    CHECK(binom.status == Status::Holds);
    CHECK(binom.margin == 0.0);
    CHECK(is_ultra_log_concave(Seq{1, 3, 3, 1}, true).status == Status::Fails);
    const auto f = is_ultra_log_concave(Seq{1, 1, 1}, false);
    CHECK(f.status == Status::Fails);
    REQUIRE(f.witness);
    CHECK(f.witness->indices == std::vector<std::size_t>{1});
    CHECK(is_ultra_log_concave(Seq{1, -1}, false).status == Status::Fails);
}

TEST_CASE("univariate CLC")
{
    CHECK(is_univariate_clc(P({3, 7, 7, 4}), false).status == Status::Holds);
    CHECK(is_univariate_clc(P({3, 7, 7, 4}), true).status == Status::Holds);
    const auto f = is_univariate_clc(P({1, 1, 1}), false);
    CHECK(f.status == Status::Fails);
    REQUIRE(f.witness);
    CHECK(f.witness->indices == std::vector<std::size_t>{1});

    const P unstable(q({"5", "14", "12.5", "7.2", "3", "1"}));
    const auto ns = is_univariate_clc(unstable, false);
    CHECK(ns.status == Status::Holds);
    CHECK(ns.margin == 0.0);
    REQUIRE(ns.witness);
    CHECK(ns.witness->indices == std::vector<std::size_t>{4});
    // 4 * 3^2 = 5 * 7.2 * 1
    CHECK(Rational(4) * 9 == Rational(5) * unstable.coeffs()[3]);
    const auto st = is_univariate_clc(unstable, true);
    CHECK(st.status == Status::Fails);
    CHECK(st.witness->indices == std::vector<std::size_t>{4});

    CHECK(is_univariate_clc(P{}, false).status == Status::Holds);
    CHECK(is_univariate_clc(P{}, true).status == Status::Fails);
    CHECK(is_univariate_clc(P({2}), true).status == Status::Holds);
    CHECK(is_univariate_clc(P({-2}), false).status == Status::Fails);
}

TEST_CASE("CLC agrees with ultra log-concavity of factorial weights")
{
    // c_i = a_i/(d-i)! turns i a_i^2 >= (i+1) a_{i-1} a_{i+1} into the ULC condition
    auto weights = [](const Seq& a) {
        const std::size_t d = a.size() - 1;
        Seq c;
        for (std::size_t i = 0; i <= d; ++i) c.push_back(a[i] / factorial(d - i));
        return c;
    };
    const Seq quintic = q({"5", "14", "12.5", "7.2", "3", "1"});
    CHECK(is_ultra_log_concave(weights(quintic), false).status == is_univariate_clc(P(quintic), false).status);
    CHECK(is_ultra_log_concave(weights(quintic), true).status == is_univariate_clc(P(quintic), true).status);

    Gen g(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = static_cast<std::size_t>(g.integer(0, 8));
        const Seq a = g.coin() ? random_positive(g, d + 1) : strict_newton_sequence(g, d);
        for (bool strict : {false, true})
            CHECK(is_ultra_log_concave(weights(a), strict).status == is_univariate_clc(P(a), strict).status);
    }
}

TEST_CASE("reversal duality")
{
    // p is CLC iff reverse(p) satisfies (d-i) b_i^2 >= (d-i+1) b_{i-1} b_{i+1}
    Gen g(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = static_cast<std::size_t>(g.integer(1, 8));
        const Seq a = g.coin() ? random_positive(g, d + 1) : strict_newton_sequence(g, d);
        const P r = reverse(P(a));
        bool dual = true;
        for (const auto& b : r.coeffs()) dual = dual && b > 0;
        for (std::size_t i = 1; i + 1 <= d; ++i) {
            const auto& b = r.coeffs();
            dual = dual && Rational(static_cast<long>(d - i)) * b[i] * b[i] >=
                               Rational(static_cast<long>(d - i + 1)) * b[i - 1] * b[i + 1];
        }
        CHECK((is_univariate_clc(P(a), false).status == Status::Holds) == dual);
    }
}

TEST_CASE("scale invariance of verdicts")
{
    Gen g(33);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 9));
        Seq a = g.coin() ? random_positive(g, n) : strict_newton_sequence(g, n - 1);
        const Rational c = g.positive_rational(50, 7);
        Seq b;
        for (const auto& x : a) b.push_back(c * x);
        for (bool strict : {false, true}) {
            CHECK(is_log_concave(a, strict).status == is_log_concave(b, strict).status);
            CHECK(is_ultra_log_concave(a, strict).status == is_ultra_log_concave(b, strict).status);
            CHECK(is_univariate_clc(P(a), strict).status == is_univariate_clc(P(b), strict).status);
        }
    }
}

TEST_CASE("Newton chain report")
{
    const auto eq = newton_chain_report(Seq{24, 24, 12, 4, 1});
    CHECK(eq.hypothesis.status == Status::Holds);
    CHECK(eq.hypothesis.margin == 0.0);
    for (const auto& [name, v] : eq.families) {
        if (name.rfind("ratio_chain", 0) == 0) continue;
        INFO(name);
        CHECK(v.status == Status::Holds);
        CHECK(v.margin == doctest::Approx(0.0));
    }

    const auto strong = newton_chain_report(Seq{1, 10, 40, 80});
    CHECK(strong.hypothesis.status == Status::Holds);
    CHECK(strong.families.size() == 7);
    for (const auto& [name, v] : strong.families) {
        INFO(name);
        CHECK(v.status == Status::Holds);
    }

    try {
        newton_chain_report(Seq{1, 3, 4, 6});
        FAIL("expected Inapplicable");
    } catch (const Inapplicable& e) {
        CHECK(e.index() == 2);
    }
    try {
        newton_chain_report(Seq{1, 0, 1});
        FAIL("expected Inapplicable");
    } catch (const Inapplicable& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("Newton hypothesis implies every derived family")
{
    Gen g(34);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t d = static_cast<std::size_t>(g.integer(1, 9));
        const Seq a = strict_newton_sequence(g, d);
        const auto report = newton_chain_report(a);
        REQUIRE(report.hypothesis.status == Status::Holds);
        for (const auto& [name, v] : report.families) {
            INFO(name);
            CHECK(v.status == Status::Holds);
        }
    }
}

TEST_CASE("quintic cross inequality")
{
    const P unstable(q({"5", "14", "12.5", "7.2", "3", "1"}));
    const auto v = quintic_cross_inequality(unstable);
    // (14*3 - 5)^2 = 1369 against (14*12.5 - 5*7.2)(7.2*3 - 12.5) = 139 * 9.1 = 1264.9
    CHECK(v.status == Status::Fails);
    CHECK(Rational(139) * parse_rational("9.1") == parse_rational("1264.9"));

    const P stable({5, 25, 50, 30, 10, 3});
    CHECK(quintic_cross_inequality(stable).status == Status::Holds);

    CHECK_THROWS_AS(quintic_cross_inequality(P({1, 2, 3})), WrongDegree);
    CHECK_THROWS_AS(quintic_cross_inequality(P({1, -2, 3, 4, 5, 6})), Inapplicable);

    Gen g(35);
    for (int trial = 0; trial < 300; ++trial) {
        Seq a = random_positive(g, 6);
        const Rational c = g.positive_rational(30, 7);
        Seq b;
        for (const auto& x : a) b.push_back(c * x);
        CHECK(quintic_cross_inequality(P(a)).status == quintic_cross_inequality(P(b)).status);
    }

    // a_5 -> 0: both sides tend to (a1 a4)^2 and (a1 a2 - a0 a3) a3 a4
    const Seq base{2, 9, 11, 7, 3, 1};
    const Rational limit_rhs = (base[1] * base[2] - base[0] * base[3]) * base[3] * base[4];
    const Rational limit_lhs = base[1] * base[4] * base[1] * base[4];
    const bool limit_holds = limit_lhs < limit_rhs;
    for (long den : {1000L, 100000L, 10000000L}) {
        Seq s = base;
        s[5] = Rational(1, den);
        CHECK((quintic_cross_inequality(P(s)).status == Status::Holds) == limit_holds);
    }
}
