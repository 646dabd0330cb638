#include "lorentz/sequences.hpp"

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

template <class T>
T binomial(std::size_t n, std::size_t k)
{
    T r(1);
    for (std::size_t j = 1; j <= k; ++j) {
        r *= T(static_cast<long>(n - k + j));
        r /= T(static_cast<long>(j));
    }
    return r;
}

template <class T>
T integer(std::size_t k)
{
    return T(static_cast<long>(k));
}

} // namespace

template <class T>
Verdict is_log_concave(const std::vector<T>& seq, bool strict, const Tolerance& tol)
{
    if (seq.empty()) throw InputError("log-concavity of an empty sequence");
    InequalityChain<T> chain(tol, strict);
    for (std::size_t k = 0; k < seq.size(); ++k) chain.require_positive(seq[k], k);
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        chain.require(T(seq[k] * seq[k]), T(seq[k - 1] * seq[k + 1]), {k}, "a_k^2 >= a_{k-1} a_{k+1}");
    }
    return chain.finish();
}

template <class T>
Verdict is_ultra_log_concave(const std::vector<T>& seq, bool strict, const Tolerance& tol)
{
    if (seq.empty()) throw InputError("ultra log-concavity of an empty sequence");
    const std::size_t n = seq.size() - 1;
    InequalityChain<T> chain(tol, strict);
    std::vector<T> w(seq.size());
    for (std::size_t k = 0; k <= n; ++k) {
        chain.require_positive(seq[k], k, /*allow_zero=*/true, "coefficient negative");
        w[k] = seq[k] / binomial<T>(n, k);
    }
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        chain.require(T(w[k] * w[k]), T(w[k - 1] * w[k + 1]), {k}, "(c_k/C(n,k))^2 >= neighbours");
    }
    return chain.finish();
}

template <class T>
Verdict newton_inequalities(const std::vector<T>& a, bool strict, const Tolerance& tol)
{
    InequalityChain<T> chain(tol, strict);
    for (std::size_t k = 0; k < a.size(); ++k) chain.require_positive(a[k], k);
    for (std::size_t k = 1; k + 1 < a.size(); ++k) {
        chain.require(T(integer<T>(k) * a[k] * a[k]), T(integer<T>(k + 1) * a[k - 1] * a[k + 1]), {k},
                      "k a_k^2 >= (k+1) a_{k-1} a_{k+1}");
    }
    return chain.finish();
}

template <class T>
Verdict is_univariate_clc(const UniPoly<T>& p, bool strict, const Tolerance& tol)
{
    if (p.is_zero()) {
        // The zero polynomial is log-concave but never strictly.
        Verdict v = make_verdict(strict ? Status::Fails : Status::Holds, "zero polynomial");
        if (strict) v.witness = Witness{{}, {}, "zero polynomial is not strictly log-concave"};
        return v;
    }
    return newton_inequalities(p.coeffs(), strict, tol);
}

template <class T>
NewtonChainReport newton_chain_report(const std::vector<T>& a, const Tolerance& tol)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (exact_sign(a[k]) <= 0) throw Inapplicable("entry is not positive", k);
    }
    NewtonChainReport report;
    report.hypothesis = newton_inequalities(a, false, tol);
    if (report.hypothesis.status == Status::Fails) {
        throw Inapplicable("Newton hypothesis a_k^2 >= ((k+1)/k) a_{k-1} a_{k+1} fails",
                           report.hypothesis.witness->indices.front());
    }
    if (a.empty()) return report;
    const std::size_t d = a.size() - 1;
    auto K = [](std::size_t k) { return integer<T>(k); };

    {
        InequalityChain<T> c(tol, false);
        for (std::size_t k = 1; k + 2 <= d; ++k)
            c.require(T(K(k) * a[k] * a[k + 1]), T(K(k + 2) * a[k - 1] * a[k + 2]), {k},
                      "a_k a_{k+1} >= ((k+2)/k) a_{k-1} a_{k+2}");
        report.families.emplace_back("adjacent_products", c.finish());
    }
    {
        InequalityChain<T> c(tol, false);
        for (std::size_t k = 2; k + 2 <= d; ++k)
            c.require(T(K(k) * K(k - 1) * a[k] * a[k]), T(K(k + 2) * K(k + 1) * a[k - 2] * a[k + 2]), {k},
                      "a_k^2 >= ((k+2)(k+1)/(k(k-1))) a_{k-2} a_{k+2}");
        report.families.emplace_back("second_neighbours", c.finish());
    }
    {
        InequalityChain<T> c(tol, false);
        for (std::size_t k = 1; k + 3 <= d; ++k)
            c.require(T(K(k) * a[k] * a[k + 2]), T(K(k + 3) * a[k - 1] * a[k + 3]), {k},
                      "a_k a_{k+2} >= ((k+3)/k) a_{k-1} a_{k+3}");
        report.families.emplace_back("gap_two_products", c.finish());
    }
    {
        InequalityChain<T> c(tol, false);
        for (std::size_t k = 1; k + 1 <= d; ++k)
            c.require(T(K(k) * a[k] * a[d - 1]), T(K(d) * a[k - 1] * a[d]), {k},
                      "a_k a_{d-1} >= (d/k) a_{k-1} a_d");
        report.families.emplace_back("tail_products", c.finish());
    }
    {
        // a_i a_j >= (l/i) a_k a_l whenever i + j = k + l and k < i < j < l
        InequalityChain<T> c(tol, false);
        for (std::size_t k = 0; k <= d; ++k)
            for (std::size_t i = k + 1; i <= d; ++i)
                for (std::size_t j = i + 1; j <= d; ++j) {
                    const std::size_t l = i + j - k;
                    if (l > d) continue;
                    c.require(T(K(i) * a[i] * a[j]), T(K(l) * a[k] * a[l]), {k, i, j, l},
                              "a_i a_j >= (l/i) a_k a_l");
                }
        report.families.emplace_back("general_products", c.finish());
    }
    {
        // a_2/a_0 > a_3/a_1 > a_4/a_2 > ...
        InequalityChain<T> c(tol, true);
        for (std::size_t k = 1; k + 2 <= d; ++k)
            c.require(T(a[k + 1] * a[k]), T(a[k + 2] * a[k - 1]), {k}, "a_{k+1}/a_{k-1} > a_{k+2}/a_k");
        report.families.emplace_back("ratio_chain_shifted", c.finish());
    }
    {
        // a_1/a_0 > a_3/a_2 > a_5/a_4 > ...
        InequalityChain<T> c(tol, true);
        for (std::size_t k = 2; k + 1 <= d; ++k)
            c.require(T(a[k - 1] * a[k]), T(a[k - 2] * a[k + 1]), {k}, "a_{k-1}/a_{k-2} > a_{k+1}/a_k");
        report.families.emplace_back("ratio_chain_separated", c.finish());
    }
    return report;
}

template <class T>
Verdict quintic_cross_inequality(const UniPoly<T>& p, const Tolerance& tol)
{
    if (p.degree() != std::optional<std::size_t>(5)) throw WrongDegree("quintic cross inequality needs degree 5");
    const auto& a = p.coeffs();
    for (std::size_t k = 0; k <= 5; ++k) {
        if (exact_sign(a[k]) <= 0) throw Inapplicable("quintic coefficient is not positive", k);
    }
    const T u = a[1] * a[4] - a[0] * a[5];
    const T lhs = (a[1] * a[2] - a[0] * a[3]) * (a[3] * a[4] - a[2] * a[5]);
    InequalityChain<T> c(tol, true);
    c.require(lhs, T(u * u), {5}, "(a1 a4 - a0 a5)^2 < (a1 a2 - a0 a3)(a3 a4 - a2 a5)");
    return c.finish();
}

#define LORENTZ_INSTANTIATE(T)                                                         \
    template Verdict is_log_concave(const std::vector<T>&, bool, const Tolerance&);     \
    template Verdict is_ultra_log_concave(const std::vector<T>&, bool, const Tolerance&); \
    template Verdict is_univariate_clc(const UniPoly<T>&, bool, const Tolerance&);      \
    template Verdict newton_inequalities(const std::vector<T>&, bool, const Tolerance&); \
    template NewtonChainReport newton_chain_report(const std::vector<T>&, const Tolerance&); \
    template Verdict quintic_cross_inequality(const UniPoly<T>&, const Tolerance&);

LORENTZ_INSTANTIATE(double)
LORENTZ_INSTANTIATE(Rational)
#undef LORENTZ_INSTANTIATE

} // namespace lorentz
