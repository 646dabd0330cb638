#include "lorentz/hurwitz.hpp"

#include "lorentz/eigen.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

namespace lorentz {

namespace {

template <class T>
UniPoly<T> normalized(const UniPoly<T>& p)
{
    if (exact_sign(p.leading()) < 0) return scale(p, T(-1));
    return p;
}

template <class T>
std::string scalar_text(const T& x)
{
    if constexpr (is_exact_v<T>) {
        return to_string(x);
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
}

// Checks the given minors (1-based indices) of M for positivity.
template <class T>
void require_minors(InequalityChain<T>& chain, const Matrix<T>& m, const std::vector<T>& minors,
                    const std::vector<std::size_t>& which, const Tolerance& tol)
{
    for (std::size_t k : which) {
        const T& delta = minors[k - 1];
        const double h = std::max(hadamard_bound(m, k), std::numeric_limits<double>::min());
        chain.record(sign_of(delta, h, tol), to_double(delta) / h, {k}, "Delta_k not positive");
    }
}

// Near-zero imaginary parts count as real.
constexpr double kRootBand = 1e-6;

bool is_real_root(const std::complex<double>& z)
{
    return std::fabs(z.imag()) <= kRootBand * std::max(1.0, std::abs(z));
}

struct PartZero {
    double at;
    bool odd;
};

// Exact localization of approximate zeros of f_e and s f_o: cut the line
// between neighbouring candidates and require each part to change sign in
// its own candidates' cells only, as often as its degree. Then every zero
// is real, simple and sits in the cell of its candidate.
bool certify_zeros(const UniPoly<Rational>& fe, const UniPoly<Rational>& fo, const std::vector<PartZero>& zeros)
{
    const UniPoly<Rational> so = UniPoly<Rational>({Rational(0), Rational(1)}) * fo;
    std::vector<Rational> cuts;
    cuts.push_back(rational_from_double(zeros.front().at) - 1 - abs(rational_from_double(zeros.front().at)));
    for (std::size_t i = 1; i < zeros.size(); ++i) {
        const Rational a = rational_from_double(zeros[i - 1].at), b = rational_from_double(zeros[i].at);
        if (!(a < b)) return false;
        cuts.push_back((a + b) / 2);
    }
    cuts.push_back(rational_from_double(zeros.back().at) + 1 + abs(rational_from_double(zeros.back().at)));
    std::size_t changes_e = 0, changes_o = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const bool e = sgn(eval(fe, cuts[i])) * sgn(eval(fe, cuts[i + 1])) < 0;
        const bool o = sgn(eval(so, cuts[i])) * sgn(eval(so, cuts[i + 1])) < 0;
        if (zeros[i].odd ? (!o || e) : (!e || o)) return false;
        changes_e += e;
        changes_o += o;
    }
    return changes_e == static_cast<std::size_t>(fe.degree_or_throw()) &&
           changes_o == static_cast<std::size_t>(so.degree_or_throw());
}

} // namespace

template <class T>
Matrix<T> hurwitz_matrix(const UniPoly<T>& p)
{
    const std::size_t d = p.degree_or_throw();
    Matrix<T> m(d);
    for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t j = 1; j <= d; ++j) {
            m(i - 1, j - 1) = p.coeff(2 * static_cast<long>(j) - static_cast<long>(i));
        }
    }
    return m;
}

template <class T>
std::vector<T> hurwitz_minors(const UniPoly<T>& p)
{
    const UniPoly<T> q = normalized(p);
    if (q.degree_or_throw() == 0) return {};
    return leading_minors(hurwitz_matrix(q));
}

template <class T>
double minor_margin(const UniPoly<T>& p)
{
    const UniPoly<T> q = normalized(p);
    const std::size_t d = q.degree_or_throw();
    double best = std::numeric_limits<double>::infinity();
    if (d <= 1) return best;
    const Matrix<T> m = hurwitz_matrix(q);
    const auto minors = leading_minors(m);
    for (std::size_t k = 1; k < d; ++k) {
        const double h = hadamard_bound(m, k);
        best = std::min(best, h > 0 ? magnitude(minors[k - 1]) / h : 0.0);
    }
    return best;
}

template <class T>
Verdict routh_hurwitz_stable(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    const UniPoly<T> q = normalized(p);
    const std::size_t d = q.degree_or_throw();
    if (d == 0) return make_verdict(Status::Holds, "constant polynomial has no zeros");
    InequalityChain<T> chain(tol, true);
    for (std::size_t k = 0; k <= d; ++k) chain.require_positive(q.coeffs()[k], k);
    if (chain.failed()) return chain.finish();
    const Matrix<T> m = hurwitz_matrix(q);
    const auto minors = leading_minors(m);
    std::vector<std::size_t> which;
    for (std::size_t k = 1; k < d; ++k) which.push_back(k);
    require_minors(chain, m, minors, which, tol);
    return chain.finish();
}

template <class T>
Verdict lienard_chipart_stable(const UniPoly<T>& p, int variant, const Tolerance& tol)
{
    validate(tol);
    if (variant < 1 || variant > 4) throw InputError("Lienard-Chipart variant must be 1..4");
    const UniPoly<T> q = normalized(p);
    const std::size_t d = q.degree_or_throw();
    if (d == 0) return make_verdict(Status::Holds, "constant polynomial has no zeros");
    InequalityChain<T> chain(tol, true);
    chain.require_positive(q.coeffs()[0], 0);
    if (chain.failed()) return chain.finish();

    // coefficients a_d, a_{d-2}, ... or a_d, a_{d-1}, a_{d-3}, ...
    std::vector<std::size_t> coeffs{d};
    for (long k = static_cast<long>(d) - (variant <= 2 ? 2 : 1); k >= 0; k -= 2)
        coeffs.push_back(static_cast<std::size_t>(k));
    for (std::size_t k : coeffs) chain.require_positive(q.coeffs()[k], k);
    if (chain.failed()) return chain.finish();

    const Matrix<T> m = hurwitz_matrix(q);
    const auto minors = leading_minors(m);
    std::vector<std::size_t> which;
    for (std::size_t k = (variant % 2 == 1) ? 1 : 2; k <= d; k += 2) which.push_back(k);
    require_minors(chain, m, minors, which, tol);
    return chain.finish();
}

template <class T>
Verdict hermite_biehler_stable(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    const UniPoly<T> q = normalized(p);
    const std::size_t d = q.degree_or_throw();
    if (d == 0) return make_verdict(Status::Holds, "constant polynomial has no zeros");
    for (std::size_t k = 0; k <= d; ++k) {
        if (exact_sign(q.coeffs()[k]) <= 0) return make_failure({k}, "coefficient not positive");
    }
    const auto [fe, fo] = hb_parts(q);

    using Zero = PartZero;
    std::vector<Zero> zeros{{0.0, true}};
    try {
        for (int part = 0; part < 2; ++part) {
            const UniPoly<T>& f = part == 0 ? fe : fo;
            if (f.degree_or_throw() == 0) continue;
            for (const auto& z : all_roots(f, tol)) {
                if (!is_real_root(z)) {
                    Verdict v = make_failure({}, part == 0 ? "f_e has a non-real zero" : "f_o has a non-real zero");
                    v.witness->points.push_back({z.real(), z.imag()});
                    return v;
                }
                zeros.push_back({z.real(), part == 1});
            }
        }
    } catch (const NonConvergence& e) {
        return make_verdict(Status::Unknown, e.what());
    }
    std::sort(zeros.begin(), zeros.end(), [](const Zero& a, const Zero& b) { return a.at < b.at; });

    double scale = 1.0;
    for (const auto& z : zeros) scale = std::max(scale, std::fabs(z.at));
    Verdict v;
    v.margin = std::numeric_limits<double>::infinity();
    bool unclear = false;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const bool want_odd = i % 2 == 0;
        if (i > 0) {
            const double gap = zeros[i].at - zeros[i - 1].at;
            v.margin = std::min(v.margin, gap / scale);
            if (gap <= kRootBand * scale) unclear = true;
        }
        if (zeros[i].odd != want_odd) {
            if (unclear) break;
            v = make_failure({i}, "zeros of f_e and s f_o do not interlace");
            v.witness->points.push_back({zeros[i].at});
            return v;
        }
    }
    if (unclear) {
        if constexpr (is_exact_v<T>) {
            if (certify_zeros(fe, fo, zeros)) {
                for (std::size_t i = 0; i < zeros.size(); ++i) {
                    if (zeros[i].odd == (i % 2 == 0)) continue;
                    v = make_failure({i}, "zeros of f_e and s f_o do not interlace");
                    v.witness->points.push_back({zeros[i].at});
                    return v;
                }
                v.status = Status::Holds;
                v.note = "close zeros separated exactly";
                return v;
            }
        }
        v.status = Status::Unknown;
        v.note = "zeros of f_e and s f_o too close to separate";
        return v;
    }
    v.status = Status::Holds;
    return v;
}

template <class T>
UniPoly<T> reduce_degree(const UniPoly<T>& p)
{
    const std::size_t d = p.degree_or_throw();
    if (d < 1) throw WrongDegree("degree reduction needs degree >= 1");
    const auto& a = p.coeffs();
    if (exact_sign(a[d - 1]) == 0) throw Inapplicable("a_{d-1} vanishes", d - 1);
    const T mu = a[d] / a[d - 1];
    std::vector<T> g(a.begin(), a.end() - 1);
    for (std::size_t k = d % 2; k < d; k += 2) {
        if (k == 0) continue;
        g[k] = a[k] - mu * a[k - 1];
    }
    return UniPoly<T>(std::move(g));
}

template <class T>
Verdict degree_reduction_stable(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    UniPoly<T> q = normalized(p);
    std::size_t d = q.degree_or_throw();
    if (d == 0) return make_verdict(Status::Holds, "constant polynomial has no zeros");
    for (std::size_t k = 0; k <= d; ++k) {
        if (exact_sign(q.coeffs()[k]) <= 0) return make_failure({d, k}, "coefficient not positive");
    }
    Verdict out;
    while (d > 2) {
        const auto& a = q.coeffs();
        const T mu = a[d] / a[d - 1];
        std::vector<T> g(a.begin(), a.end() - 1);
        for (std::size_t k = d % 2; k < d; k += 2) {
            if (k == 0) continue;
            const T sub = mu * a[k - 1];
            g[k] = a[k] - sub;
            const double scale = std::max(magnitude(a[k]), magnitude(sub));
            out.margin = std::min(out.margin, to_double(g[k]) / std::max(scale, 1.0));
            const Sign s = sign_of(g[k], scale, tol);
            if (s == Sign::Indeterminate) {
                out.status = Status::Unknown;
                out.witness = Witness{{d - 1, k}, {}, "reduced coefficient inside tolerance band"};
                return out;
            }
            if (s != Sign::Positive) {
                out.status = Status::Fails;
                out.witness = Witness{{d - 1, k}, {}, "reduced coefficient not positive"};
                return out;
            }
        }
        // constant term is never touched for odd k, and g_0 = a_0 otherwise
        q = UniPoly<T>(std::move(g));
        d = q.degree_or_throw();
    }
    out.status = Status::Holds;
    return out;
}

template <class T>
Verdict root_oracle_stable(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    const std::size_t d = p.degree_or_throw();
    if (d == 0) return make_verdict(Status::Holds, "constant polynomial has no zeros");
    if (exact_sign(p.coeffs()[0]) == 0) return make_failure({0}, "zero is a root");
    std::vector<std::complex<double>> roots;
    try {
        roots = all_roots(p, tol);
    } catch (const NonConvergence& e) {
        return make_verdict(Status::Unknown, e.what());
    }
    // each root is judged against a band at its own magnitude, so small
    // roots stay decidable next to huge ones
    Verdict v;
    v.margin = std::numeric_limits<double>::infinity();
    bool unclear = false;
    std::optional<std::complex<double>> bad;
    for (const auto& r : roots) {
        v.margin = std::min(v.margin, -r.real() / std::max(std::abs(r), 1.0));
        const Sign s = sign_of(-r.real(), std::abs(r), tol);
        if (s == Sign::Indeterminate) unclear = true;
        else if (s != Sign::Positive && (!bad || r.real() > bad->real())) bad = r;
    }
    if (bad) {
        v.status = Status::Fails;
        v.witness = Witness{{}, {{bad->real(), bad->imag()}}, "root with nonnegative real part"};
    } else if (unclear) {
        v.status = Status::Unknown;
        v.note = "a root lies within tolerance of the imaginary axis";
    } else {
        v.status = Status::Holds;
    }
    return v;
}

template <class T>
Verdict clc_d_le_4_criterion(const UniPoly<T>& p, const Tolerance& tol)
{
    const auto d = p.degree();
    if (!d || *d == 0 || *d > 4) throw WrongDegree("criterion needs 1 <= deg <= 4");
    return as_criterion(newton_inequalities(p.coeffs(), true, tol));
}

template <class T>
Verdict quintic_criterion(const UniPoly<T>& p, const Tolerance& tol)
{
    if (p.degree() != std::optional<std::size_t>(5)) throw WrongDegree("criterion needs degree 5");
    InequalityChain<T> chain(tol, true);
    const Verdict newton = newton_inequalities(p.coeffs(), true, tol);
    chain.absorb(newton);
    const bool positive = std::all_of(p.coeffs().begin(), p.coeffs().end(),
                                      [](const T& x) { return exact_sign(x) > 0; });
    if (positive) chain.absorb(quintic_cross_inequality(p, tol));
    return as_criterion(chain.finish());
}

double alpha_constant()
{
    auto c = [](double t) { return ((t - 1.0) * t - 2.0) * t - 1.0; };
    double lo = 2.0;
    double hi = 3.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (c(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::fabs(c(lo)) <= std::fabs(c(hi)) ? lo : hi;
}

template <class T>
Verdict alpha_criterion(const UniPoly<T>& p, AlphaMode mode, const Tolerance& tol)
{
    validate(tol);
    const std::size_t d = p.degree_or_throw();
    InequalityChain<T> chain(tol, false);
    for (std::size_t k = 0; k <= d; ++k) chain.require_positive(p.coeffs()[k], k);
    if (chain.failed()) return as_criterion(chain.finish());
    const double alpha = alpha_constant();
    const double factor = mode == AlphaMode::Product ? alpha : std::sqrt(alpha);
    const std::string label = mode == AlphaMode::Product ? "a_k a_{k+1} >= alpha a_{k-1} a_{k+2}"
                                                         : "a_k^2 >= sqrt(alpha) a_{k-1} a_{k+1}";
    for (std::size_t k = 1; k < d; ++k) {
        const long ks = static_cast<long>(k);
        const T lhs = mode == AlphaMode::Product ? T(p.coeff(ks) * p.coeff(ks + 1)) : T(p.coeff(ks) * p.coeff(ks));
        const T base = mode == AlphaMode::Product ? T(p.coeff(ks - 1) * p.coeff(ks + 2))
                                                  : T(p.coeff(ks - 1) * p.coeff(ks + 1));
        const double slack = normalized_slack(to_double(lhs), factor * to_double(base));
        if (exact_sign(base) == 0) {
            chain.record(Sign::Positive, slack, {k}, label);
            continue;
        }
        if constexpr (is_exact_v<T>) {
            // q > alpha iff q^3 - q^2 - 2q - 1 > 0 for q > 0; alpha is irrational so never equal
            T q = lhs / base;
            if (mode == AlphaMode::Square) q *= q;
            const T c = ((q - 1) * q - 2) * q - 1;
            chain.record(exact_sign(c) > 0 ? Sign::Positive : Sign::Negative, slack, {k}, label);
        } else {
            chain.require(lhs, T(factor * base), {k}, label);
        }
    }
    return as_criterion(chain.finish());
}

const Verdict& StabilityReport::decider(const std::string& name) const
{
    for (const auto& [n, v] : deciders)
        if (n == name) return v;
    throw InputError("no decider named " + name);
}

const Verdict& StabilityReport::criterion(const std::string& name) const
{
    for (const auto& [n, v] : criteria)
        if (n == name) return v;
    throw InputError("no criterion named " + name);
}

template <class T>
StabilityReport stability_report(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    const std::size_t d = p.degree_or_throw();
    StabilityReport r;
    r.deciders.emplace_back("routh_hurwitz", routh_hurwitz_stable(p, tol));
    for (int v = 1; v <= 4; ++v)
        r.deciders.emplace_back("lienard_chipart_" + std::to_string(v), lienard_chipart_stable(p, v, tol));
    r.deciders.emplace_back("hermite_biehler", hermite_biehler_stable(p, tol));
    r.deciders.emplace_back("degree_reduction", degree_reduction_stable(p, tol));
    const Verdict oracle = root_oracle_stable(p, tol);
    r.deciders.emplace_back("root_oracle", oracle);

    const Verdict na = make_verdict(Status::NotApplicable, "degree out of range");
    r.criteria.emplace_back("clc_d_le_4", d >= 1 && d <= 4 ? clc_d_le_4_criterion(p, tol) : na);
    r.criteria.emplace_back("quintic", d == 5 ? quintic_criterion(p, tol) : na);
    const bool leading_positive = exact_sign(p.leading()) > 0;
    r.criteria.emplace_back("alpha_product", d >= 1 && leading_positive ? alpha_criterion(p, AlphaMode::Product, tol) : na);
    r.criteria.emplace_back("alpha_square", d >= 1 && leading_positive ? alpha_criterion(p, AlphaMode::Square, tol) : na);

    for (const auto& m : hurwitz_minors(p)) r.minors.push_back(scalar_text(m));
    r.minor_margin = minor_margin(p);
    try {
        if (d > 0) r.roots = all_roots(p, tol);
    } catch (const NonConvergence&) {
    }

    if (oracle.status == Status::Holds || oracle.status == Status::Fails) {
        const bool stable = oracle.status == Status::Holds;
        for (const auto& [name, v] : r.deciders) {
            if (v.status == Status::Holds && !stable) r.consistent = false;
            if (v.status == Status::Fails && stable) r.consistent = false;
        }
        for (const auto& [name, v] : r.criteria) {
            if (v.status == Status::Holds && !stable) r.consistent = false;
        }
    }
    return r;
}

#define LORENTZ_INSTANTIATE(T)                                                          \
    template Matrix<T> hurwitz_matrix(const UniPoly<T>&);                                \
    template std::vector<T> hurwitz_minors(const UniPoly<T>&);                           \
    template double minor_margin(const UniPoly<T>&);                                     \
    template Verdict routh_hurwitz_stable(const UniPoly<T>&, const Tolerance&);          \
    template Verdict lienard_chipart_stable(const UniPoly<T>&, int, const Tolerance&);   \
    template Verdict hermite_biehler_stable(const UniPoly<T>&, const Tolerance&);        \
    template UniPoly<T> reduce_degree(const UniPoly<T>&);                                \
    template Verdict degree_reduction_stable(const UniPoly<T>&, const Tolerance&);       \
    template Verdict root_oracle_stable(const UniPoly<T>&, const Tolerance&);            \
    template Verdict clc_d_le_4_criterion(const UniPoly<T>&, const Tolerance&);          \
    template Verdict quintic_criterion(const UniPoly<T>&, const Tolerance&);             \
    template Verdict alpha_criterion(const UniPoly<T>&, AlphaMode, const Tolerance&);    \
    template StabilityReport stability_report(const UniPoly<T>&, const Tolerance&);

LORENTZ_INSTANTIATE(double)
LORENTZ_INSTANTIATE(Rational)
#undef LORENTZ_INSTANTIATE

} // namespace lorentz
