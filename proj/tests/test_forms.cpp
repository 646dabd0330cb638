#include "doctest.h"
#include "support.hpp"

#include "lorentz/eigen.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/forms.hpp"
#include "lorentz/sequences.hpp"

#include <cmath>

using namespace lorentz;
using testing_support::Gen;

namespace {

using RForm = MultiForm<Rational>;
using DForm = MultiForm<double>;

template <class T>
std::vector<T> vec(std::initializer_list<long> xs)
{
    std::vector<T> out;
    for (long x : xs) out.emplace_back(static_cast<double>(x));
    return out;
}

template <class T>
MultiForm<T> elementary2(std::size_t n)
{
    MultiForm<T> f(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Exponent e(n, 0);
            e[i] = e[j] = 1;
            f.add_term(e, T(1));
        }
    return f;
}

std::vector<Exponent> all_exponents(std::size_t n, std::size_t d)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == n) {
            e[i] = static_cast<unsigned>(left);
            out.push_back(e);
            return;
        }
        for (std::size_t k = 0; k <= left; ++k) {
            e[i] = static_cast<unsigned>(k);
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

// (x_1 + ... + x_n)^d by multinomial coefficients.
template <class T>
MultiForm<T> power_of_sum(std::size_t n, std::size_t d)
{
    MultiForm<T> f(n, d);
    for (const auto& e : all_exponents(n, d)) {
        Rational c(1);
        for (std::size_t j = 2; j <= d; ++j) c *= j;
        for (auto k : e)
            for (unsigned j = 2; j <= k; ++j) c /= j;
        f.add_term(e, scalar_from_rational<T>(c));
    }
    return f;
}

RForm random_form(Gen& g, std::size_t n, std::size_t d)
{
    RForm f(n, d);
    for (const auto& e : all_exponents(n, d))
        if (g.integer(0, 2) > 0) f.add_term(e, g.rational());
    return f;
}

std::vector<Rational> random_vector(Gen& g, std::size_t n)
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(g.rational());
    return v;
}

DForm bivariate_homogenization(const std::vector<double>& a)
{
    const std::size_t d = a.size() - 1;
    DForm f(2, d);
    for (std::size_t k = 0; k <= d; ++k) f.add_term({static_cast<unsigned>(d - k), static_cast<unsigned>(k)}, a[k]);
    return f;
}

} // namespace

TEST_CASE("eval on small forms and exact homogeneity")
{
    RForm sq(2, 2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(2)}, {{0, 2}, Rational(1)}});
    CHECK(eval(sq, vec<Rational>({1, 1})) == 4);
    CHECK(eval(elementary2<Rational>(3), vec<Rational>({1, 1, 1})) == 3);
    CHECK_THROWS_AS(eval(sq, vec<Rational>({1, 1, 1})), DimensionMismatch);

    Gen g(11);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = g.integer(1, 4), d = g.integer(0, 5);
        const RForm f = random_form(g, n, d);
        const auto x = random_vector(g, n);
        const Rational c = g.positive_rational();
        std::vector<Rational> cx(x);
        for (auto& xi : cx) xi *= c;
        Rational cd(1);
        for (std::size_t k = 0; k < d; ++k) cd *= c;
        CHECK(eval(f, cx) == cd * eval(f, x));

        const DForm fd = convert<double>(f);
        const auto xd = vector_to_double(x);
        std::vector<double> cxd(xd);
        for (auto& xi : cxd) xi *= c.get_d();
        const double lhs = eval(fd, cxd), rhs = std::pow(c.get_d(), double(d)) * eval(fd, xd);
        CHECK(std::fabs(lhs - rhs) <= 1e-9 * (1 + std::fabs(rhs)));
    }
}

TEST_CASE("construction keeps the form homogeneous and sparse")
{
    RForm f(2, 2);
    CHECK_THROWS_AS(f.add_term({1, 0}, Rational(1)), WrongDegree);
    CHECK_THROWS_AS(f.add_term({1, 1, 0}, Rational(1)), DimensionMismatch);
    f.add_term({1, 1}, Rational(3));
    f.add_term({1, 1}, Rational(-3));
    f.add_term({2, 0}, Rational(0));
    CHECK(f.is_zero());
}

TEST_CASE("directional derivatives")
{
    RForm x1x2(2, 2, {{{1, 1}, Rational(1)}});
    const RForm d = dir_derivative(x1x2, vec<Rational>({1, 1}));
    CHECK(d == RForm(2, 1, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}}));

    const RForm sq = power_of_sum<Rational>(2, 2);
    const RForm dd = dir_derivative(dir_derivative(sq, vec<Rational>({1, 1})), vec<Rational>({1, 1}));
    CHECK(dd.d() == 0);
    CHECK(eval(dd, std::vector<Rational>(2)) == 8);

    CHECK_THROWS_AS(dir_derivative(RForm(2, 0), vec<Rational>({1, 1})), WrongDegree);
    CHECK_THROWS_AS(dir_derivative(sq, vec<Rational>({1})), DimensionMismatch);

    Gen g(12);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = g.integer(1, 4), d = g.integer(1, 5);
        const RForm f = random_form(g, n, d);
        const auto u = random_vector(g, n), v = random_vector(g, n);
        std::vector<Rational> uv(n);
        for (std::size_t i = 0; i < n; ++i) uv[i] = u[i] + v[i];
        CHECK(dir_derivative(f, uv) == dir_derivative(f, u) + dir_derivative(f, v));
        // Euler: D_x f(x) = d f(x)
        const auto x = random_vector(g, n);
        CHECK(eval(dir_derivative(f, x), x) == Rational(static_cast<long>(d)) * eval(f, x));
    }
}

TEST_CASE("Hessians: closed forms and a finite-difference oracle")
{
    const auto h = hessian_at(elementary2<Rational>(3), vec<Rational>({5, -2, 7}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(h(i, j) == (i == j ? 0 : 1));

    const auto h2 = hessian_at(power_of_sum<double>(2, 2), vec<double>({3, 1}));
    for (double x : h2.data()) CHECK(x == 2.0);
    const auto e = sym_eigs(h2).values;
    CHECK(e[0] == doctest::Approx(4.0));
    CHECK(std::fabs(e[1]) < 1e-12);

    CHECK_THROWS_AS(hessian_at(RForm(2, 1), vec<Rational>({1, 1})), WrongDegree);

    // central second differences are exact for cubics up to rounding
    Gen g(13);
    const double step = 1e-3;
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = g.integer(1, 4);
        const DForm f = convert<double>(random_form(g, n, 3));
        std::vector<double> a(n);
        for (auto& x : a) x = g.uniform(-2, 2);
        const auto hf = hessian_at(f, a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto at = [&](double si, double sj) {
                    auto p = a;
                    p[i] += si * step;
                    p[j] += sj * step;
                    return eval(f, p);
                };
                const double fd = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * step * step);
                CHECK(std::fabs(fd - hf(i, j)) <= 1e-5 * std::max(1.0, std::fabs(hf(i, j))));
            }
    }
}

TEST_CASE("line restrictions: examples and point-evaluation oracle")
{
    const auto p = restrict_line(power_of_sum<Rational>(2, 2), vec<Rational>({1, 1}), vec<Rational>({1, 1}));
    CHECK(p == UniPoly<Rational>{4, 8, 4});
    const auto q = restrict_line(elementary2<Rational>(3), vec<Rational>({1, 1, 1}), vec<Rational>({1, 1, 1}));
    CHECK(q == UniPoly<Rational>{3, 6, 3});

    Gen g(14);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t n = g.integer(1, 4), d = g.integer(0, 5);
        const RForm f = random_form(g, n, d);
        const auto x = random_vector(g, n), v = random_vector(g, n);
        UniPoly<Rational> r;
        REQUIRE_NOTHROW(r = restrict_line(f, x, v));
        CHECK(r.coeffs().size() <= d + 1);
        for (long t = -2; t <= 3; ++t) {
            std::vector<Rational> pt(n);
            for (std::size_t i = 0; i < n; ++i) pt[i] = x[i] + Rational(t) * v[i];
            CHECK(eval(r, Rational(t)) == eval(f, pt));
        }
        // k-th derivative at 0 equals D_v^k f(x)
        RForm dk = f;
        for (std::size_t k = 0; k <= d; ++k) {
            CHECK(eval(derivative(r, k), Rational(0)) == eval(dk, x));
            if (k < d) dk = dir_derivative(dk, v);
        }
    }
}

TEST_CASE("inertia: exact count agrees with the eigensolver on integer matrices")
{
    Gen g(15);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = g.integer(1, 5);
        Matrix<Rational> m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(g.integer(-3, 3));
        const Inertia ex = inertia(m);
        const auto vals = sym_eigs(m).values;
        std::size_t pos = 0, zero = 0;
        bool clear = true;
        for (double l : vals) {
            if (std::fabs(l) > 1e-12 && std::fabs(l) < 1e-6) clear = false;
            if (l > 1e-6) ++pos;
            if (std::fabs(l) <= 1e-12) ++zero;
        }
        if (!clear) continue;
        CHECK(ex.positive == pos);
        CHECK(ex.zero == zero);
        const Inertia fl = inertia(convert<double>(m));
        CHECK(fl.positive == pos);
        CHECK(fl.zero == zero);
    }
}

TEST_CASE("quadratic Lorentzian check: examples")
{
    const Cone k3 = Cone::orthant(3);
    Matrix<Rational> j3(3, std::vector<Rational>(9, Rational(1)));
    const auto rj = quadratic_lorentzian_check(j3, k3);
    CHECK(rj.verdict.status == Status::Holds);
    CHECK(rj.eigenvalues[0] == doctest::Approx(3.0));

    const auto ri = quadratic_lorentzian_check(Matrix<Rational>::identity(3), k3);
    CHECK(ri.verdict.status == Status::Fails);
    REQUIRE(ri.verdict.witness);

    for (const bool exact : {true, false}) {
        const Cone k2 = Cone::orthant(2);
        const FormReport r = exact ? quadratic_lorentzian_check(Matrix<Rational>::from_rows({{0, 1}, {1, 0}}), k2)
                                   : quadratic_lorentzian_check(Matrix<double>::from_rows({{0, 1}, {1, 0}}), k2);
        CHECK(r.verdict.status == Status::Holds);
        CHECK(r.eigenvalues[0] == doctest::Approx(1.0));
        CHECK(r.eigenvalues[1] == doctest::Approx(-1.0));
        REQUIRE(r.details.size() == 4);
        CHECK(r.details[2].second.holds());
        CHECK(r.details[3].second.holds());
    }

    // the Lorentz form x_n^2 - |y|^2 on the second-order cone, and its negative
    Matrix<double> lor = Matrix<double>::identity(3);
    lor(0, 0) = lor(1, 1) = -1;
    CHECK(quadratic_lorentzian_check(lor, Cone::second_order(3)).verdict.status == Status::HoldsSampled);
    Matrix<double> neg = Matrix<double>::identity(3);
    neg(2, 2) = -1;
    CHECK(quadratic_lorentzian_check(neg, Cone::second_order(3)).verdict.fails());

    CHECK_THROWS_AS(quadratic_lorentzian_check(Matrix<double>::from_rows({{0, 1}, {2, 0}}), Cone::orthant(2)),
                    InputError);
}

TEST_CASE("quadratic check on the orthant matches one positive eigenvalue plus nonnegative entries")
{
    Gen g(16);
    std::size_t holds = 0;
    for (int it = 0; it < 400; ++it) {
        const std::size_t n = g.integer(2, 4);
        Matrix<Rational> m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(g.integer(-1, 3));
        bool nonneg = true;
        for (const auto& x : m.data()) nonneg = nonneg && sgn(x) >= 0;
        const auto vals = sym_eigs(m).values;
        std::size_t pos = 0;
        for (double l : vals) pos += l > 1e-9;
        const FormReport r = quadratic_lorentzian_check(m, Cone::orthant(n));
        CHECK(r.verdict.holds() == (pos == 1 && nonneg));
        if (r.verdict.holds()) {
            ++holds;
            CHECK(r.details[2].second.holds());
            CHECK(r.details[3].second.holds());
        }
    }
    CHECK(holds > 20);
}

TEST_CASE("sampled Lorentzian check")
{
    const Cone k3 = Cone::orthant(3), k2 = Cone::orthant(2);
    CHECK(lorentzian_sample_check(elementary2<Rational>(3), k3).verdict.status == Status::Holds);
    CHECK(lorentzian_sample_check(elementary2<double>(3), k3).verdict.holds());
    const DForm sq(2, 2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}});
    CHECK(lorentzian_sample_check(sq, k2).verdict.fails());
    for (std::size_t d = 3; d <= 5; ++d) {
        const FormReport r = lorentzian_sample_check(power_of_sum<Rational>(2, d), k2, {}, {40, 7});
        CHECK(r.verdict.status == Status::HoldsSampled);
        CHECK(r.samples == 40);
        CHECK(lorentzian_sample_check(power_of_sum<double>(3, d), k3).verdict.status == Status::HoldsSampled);
    }
    // x1^3 + x2^3: reductions are diag(a1, a2) with two positive eigenvalues
    const RForm cubes(2, 3, {{{3, 0}, Rational(1)}, {{0, 3}, Rational(1)}});
    const FormReport rc = lorentzian_sample_check(cubes, k2);
    CHECK(rc.verdict.fails());
    REQUIRE(rc.verdict.witness);
    CHECK(rc.verdict.witness->points.size() == 1);

    // degree <= 1: nonnegativity on K
    CHECK(lorentzian_sample_check(RForm(2, 1, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(2)}}), k2).verdict.holds());
    CHECK(lorentzian_sample_check(RForm(2, 1, {{{1, 0}, Rational(-1)}}), k2).verdict.fails());
    CHECK(lorentzian_sample_check(RForm(2, 0, {{{0, 0}, Rational(3)}}), k2).verdict.holds());
    const Cone soc = Cone::second_order(3);
    CHECK(lorentzian_sample_check(DForm(3, 1, {{{0, 0, 1}, 1.0}}), soc).verdict.holds());
    CHECK(lorentzian_sample_check(DForm(3, 1, {{{1, 0, 0}, 1.0}}), soc).verdict.fails());
}

TEST_CASE("CLC necessary conditions")
{
    const Cone k2 = Cone::orthant(2);
    for (std::size_t d = 1; d <= 5; ++d)
        CHECK(clc_necessary_check(power_of_sum<Rational>(2, d), k2, {}, {60, 3}).verdict.status == Status::HoldsSampled);

    // closed form at x = v = (1, 1): D_v^k f(x) = d!/(d-k)! 2^d
    const std::size_t d = 4;
    const auto p = restrict_line(power_of_sum<Rational>(2, d), vec<Rational>({1, 1}), vec<Rational>({1, 1}));
    for (std::size_t k = 0; k <= d; ++k) {
        Rational fk(1), ratio(1);
        for (std::size_t j = 2; j <= k; ++j) fk *= j;
        for (std::size_t j = d - k + 1; j <= d; ++j) ratio *= j;
        CHECK(fk * p.coeff(static_cast<long>(k)) == ratio * 16);
    }

    // necessary but not sufficient
    const RForm sq(2, 2, {{{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}});
    CHECK(restrict_line(sq, vec<Rational>({1, 1}), vec<Rational>({1, 1})) == UniPoly<Rational>{2, 4, 2});
    CHECK(is_log_concave(std::vector<Rational>{2, 4, 4}, false).holds());
    CHECK(lorentzian_sample_check(sq, k2).verdict.fails());
    // elsewhere the sequence |x|^2, 2 x.v, 2 |v|^2 breaks once the angle
    // between x and v exceeds 45 degrees
    const FormReport rs = clc_necessary_check(sq, k2);
    CHECK(rs.verdict.fails());
    REQUIRE(rs.verdict.witness);
    const auto& xs = rs.verdict.witness->points[0];
    const auto& vs = rs.verdict.witness->points[1];
    const double dot = xs[0] * vs[0] + xs[1] * vs[1];
    CHECK(2 * dot * dot < (xs[0] * xs[0] + xs[1] * xs[1]) * (vs[0] * vs[0] + vs[1] * vs[1]));

    const RForm bad(2, 3, {{{3, 0}, Rational(-1)}, {{0, 3}, Rational(1)}});
    const FormReport r = clc_necessary_check(bad, k2);
    CHECK(r.verdict.fails());
    REQUIRE(r.verdict.witness);
    CHECK(r.verdict.witness->points.size() == 2);
}

TEST_CASE("refutations of the necessary conditions carry over to the sampled Lorentzian check")
{
    Gen g(17);
    const Cone k2 = Cone::orthant(2);
    int refuted = 0;
    for (int it = 0; it < 40; ++it) {
        const std::size_t d = g.integer(2, 4);
        RForm f = power_of_sum<Rational>(2, d);
        f.add_term({static_cast<unsigned>(d), 0}, Rational(-g.integer(2, 6)));
        const SampleOptions opt{100, static_cast<std::uint64_t>(it)};
        if (!clc_necessary_check(f, k2, {}, opt).verdict.fails()) continue;
        ++refuted;
        CHECK(lorentzian_sample_check(f, k2, {}, opt).verdict.fails());
    }
    CHECK(refuted > 10);
}

TEST_CASE("Hessian signature check")
{
    const Cone k3 = Cone::orthant(3);
    for (const bool exact : {true, false}) {
        const FormReport r = exact ? hessian_signature_check(elementary2<Rational>(3), k3, {}, {100, 1})
                                   : hessian_signature_check(elementary2<double>(3), k3, {}, {100, 1});
        CHECK(r.verdict.status == Status::HoldsSampled);
        CHECK(r.samples == 100);
        CHECK(r.eigenvalues[0] == doctest::Approx(2.0));
        CHECK(r.eigenvalues[1] == doctest::Approx(-1.0));
        CHECK(r.eigenvalues[2] == doctest::Approx(-1.0));
        REQUIRE(r.counts.size() == 2);
        CHECK(r.counts[0].second == 100);
    }
    const auto pf = perron_frobenius_check(hessian_at(elementary2<double>(3), vec<double>({1, 1, 1})), k3).perron;
    for (double x : pf.eigenvector) CHECK(x == doctest::Approx(1.0 / std::sqrt(3.0)));

    const RForm cubes(2, 3, {{{3, 0}, Rational(1)}, {{0, 3}, Rational(1)}});
    CHECK(hessian_signature_check(cubes, Cone::orthant(2)).verdict.fails());

    for (std::size_t d = 2; d <= 5; ++d) {
        const FormReport r = hessian_signature_check(power_of_sum<double>(3, d), k3, {}, {100, 2});
        CHECK(r.verdict.status == Status::HoldsSampled);
        REQUIRE(r.counts.size() == 2);
        CHECK(r.counts[1].second == 100);
        const FormReport re = hessian_signature_check(power_of_sum<Rational>(3, d), k3, {}, {100, 2});
        CHECK(re.verdict.status == Status::HoldsSampled);
    }
    CHECK_THROWS_AS(hessian_signature_check(RForm(2, 1), Cone::orthant(2)), WrongDegree);
}

TEST_CASE("Hurwitz stability over a cone")
{
    const Cone k2 = Cone::orthant(2);
    CHECK(hurwitz_over_cone_check(power_of_sum<Rational>(2, 3), k2).verdict.status == Status::HoldsSampled);
    CHECK(hurwitz_over_cone_check(elementary2<Rational>(3), Cone::orthant(3)).verdict.status == Status::HoldsSampled);

    const DForm f = bivariate_homogenization({5, 14, 12.5, 7.2, 3, 1});
    // f(1, t) is the quintic; the probe below moves its zeros by about 1e-3
    const std::vector<LineProbe> probe{{{1.0, 1e-3}, {1e-3, 1.0}}};
    CHECK_THROWS_AS(hurwitz_over_cone_check(f, k2, {}, {10, 0}, {{{1.0, 0.0}, {0.0, 1.0}}}), NotInterior);
    const auto shifted = restrict_line(f, probe[0].x, probe[0].v);
    CHECK(spectral_abscissa(all_roots(shifted)) > 0.04);
    const FormReport r = hurwitz_over_cone_check(f, k2, {}, {10, 0}, probe);
    CHECK(r.verdict.fails());
    REQUIRE(r.verdict.witness);
    CHECK(r.verdict.witness->indices[0] == 0);
    CHECK(r.verdict.witness->points[0] == probe[0].x);

    const DForm stable = bivariate_homogenization({5, 25, 50, 30, 10, 3});
    CHECK(hurwitz_over_cone_check(stable, k2, {}, {10, 0}, {{{1.0, 1e-3}, {1e-3, 1.0}}}).verdict.holds());
    CHECK_THROWS_AS(hurwitz_over_cone_check(RForm(2, 0), k2), WrongDegree);
}

TEST_CASE("sum condition")
{
    const auto e1 = vec<Rational>({1, 0}), e2 = vec<Rational>({0, 1});
    const RForm x1sq(2, 2, {{{2, 0}, Rational(1)}});
    const RForm x2sq(2, 2, {{{0, 2}, Rational(1)}});
    CHECK_FALSE(verify_sum_condition(x1sq, x2sq, e1, e2));
    CHECK(verify_sum_condition(x1sq, x1sq, e1, e1));
    CHECK_FALSE(verify_sum_condition(x1sq, x1sq, e2, e2));

    const RForm f(2, 2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
    const RForm g(2, 2, {{{1, 1}, Rational(1)}});
    const RForm g2(2, 2, {{{1, 1}, Rational(1)}, {{0, 2}, Rational(1)}});
    CHECK(verify_sum_condition(f, g, e2, e2));
    CHECK_FALSE(verify_sum_condition(f, g2, e2, e2));
    CHECK(verify_sum_condition(convert<double>(f), convert<double>(g), vec<double>({0, 1}), vec<double>({0, 1})));

    CHECK_THROWS_AS(verify_sum_condition(f, RForm(2, 3), e2, e2), DegreeMismatch);
    CHECK_THROWS_AS(verify_sum_condition(f, g, vec<Rational>({1}), e2), DimensionMismatch);
}
