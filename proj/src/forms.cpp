#include "lorentz/forms.hpp"

#include "lorentz/eigen.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/hurwitz.hpp"
#include "lorentz/random.hpp"
#include "lorentz/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

namespace lorentz {

namespace {

// Inner sampling budget of the second-order quadratic check when it runs
// once per outer trial.
constexpr std::size_t kInnerTrials = 32;

void check_len(std::size_t want, std::size_t got, const char* what)
{
    if (want != got)
        throw DimensionMismatch(std::string(what) + " has length " + std::to_string(got) + ", expected " +
                                std::to_string(want));
}

template <class T>
T power(const T& x, unsigned e)
{
    T r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

template <class T>
T factorial(std::size_t k)
{
    T r(1);
    for (std::size_t j = 2; j <= k; ++j) r *= T(static_cast<long>(j));
    return r;
}

template <class T>
T binomial(unsigned n, unsigned k)
{
    T r(1);
    for (unsigned j = 1; j <= k; ++j) {
        r *= T(static_cast<long>(n - k + j));
        r /= T(static_cast<long>(j));
    }
    return r;
}

// Substitution route: expand every term prod (x_i + t v_i)^{e_i}.
template <class T>
UniPoly<T> expand_restriction(const MultiForm<T>& f, const std::vector<T>& x, const std::vector<T>& v)
{
    UniPoly<T> total;
    for (const auto& [e, c] : f.terms()) {
        UniPoly<T> term{c};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::vector<T> bin(e[i] + 1);
            for (unsigned j = 0; j <= e[i]; ++j)
                bin[j] = binomial<T>(e[i], j) * power(x[i], e[i] - j) * power(v[i], j);
            term = term * UniPoly<T>(std::move(bin));
        }
        total = total + term;
    }
    return total;
}

// Upper bound on the magnitude of the restriction coefficients.
template <class T>
double restriction_scale(const MultiForm<T>& f, const std::vector<T>& x, const std::vector<T>& v)
{
    double s = 0;
    for (const auto& [e, c] : f.terms()) {
        double m = magnitude(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            m *= std::pow(magnitude(x[i]) + magnitude(v[i]), static_cast<double>(e[i]));
        s += m;
    }
    return s;
}

Witness witness(std::vector<std::size_t> idx, std::vector<std::vector<double>> pts, std::string detail)
{
    return Witness{std::move(idx), std::move(pts), std::move(detail)};
}

template <class T>
Matrix<T> constant_hessian(const MultiForm<T>& q)
{
    return hessian_at(q, std::vector<T>(q.n(), T(0)));
}

template <class T>
bool is_singular(const Matrix<T>& m, const Inertia& in)
{
    if constexpr (is_exact_v<T>) return is_zero(determinant(m));
    else return in.zero > 0;
}

// Nonsingular and K-irreducible, or singular and K-nonnegative.
template <class T>
Verdict dichotomy(const Matrix<T>& q, const Cone& k, bool singular, const Tolerance& tol, SampleOptions opt)
{
    if (singular) {
        Verdict v = matrix_k_nonnegative(q, k, tol, opt);
        v.note = "singular branch: " + std::string(v.holds() ? "K-nonnegative" : "not K-nonnegative");
        return v;
    }
    try {
        Verdict v = matrix_k_irreducible(q, k, tol, opt);
        v.note = "nonsingular branch: K-irreducibility";
        return v;
    } catch (const Inapplicable& e) {
        Verdict v = make_verdict(Status::Fails, "nonsingular branch: not K-nonnegative");
        v.witness = witness({e.index()}, {}, e.what());
        return v;
    }
}

// Finalizes a sampled report: unknown if any trial was undecided.
void close_sampled(FormReport& r, std::size_t undecided, const std::string& what)
{
    if (r.verdict.fails()) return;
    if (undecided > 0) {
        r.verdict.status = Status::Unknown;
        r.verdict.note = std::to_string(undecided) + " of " + std::to_string(r.samples) + " samples undecided";
    } else {
        r.verdict.status = Status::HoldsSampled;
        r.verdict.note = "no refutation in " + std::to_string(r.samples) + " " + what;
    }
}

} // namespace

template <class T>
void MultiForm<T>::add_term(const Exponent& e, const T& c)
{
    check_len(n_, e.size(), "exponent vector");
    const std::size_t sum = std::accumulate(e.begin(), e.end(), std::size_t{0});
    if (sum != d_)
        throw WrongDegree("term of degree " + std::to_string(sum) + " in a form of degree " + std::to_string(d_));
    if (lorentz::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (lorentz::is_zero(it->second)) terms_.erase(it);
    }
}

template <class T>
MultiForm<T> operator+(const MultiForm<T>& a, const MultiForm<T>& b)
{
    if (a.n() != b.n()) throw DimensionMismatch("forms in different numbers of variables");
    if (a.d() != b.d()) throw DegreeMismatch("forms of different degrees");
    MultiForm<T> r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

template <class U, class T>
MultiForm<U> convert(const MultiForm<T>& f)
{
    MultiForm<U> r(f.n(), f.d());
    for (const auto& [e, c] : f.terms()) {
        if constexpr (std::is_same_v<U, T>) r.add_term(e, c);
        else if constexpr (std::is_same_v<U, double>) r.add_term(e, to_double(c));
        else r.add_term(e, rational_from_double(c));
    }
    return r;
}

template <class T>
T eval(const MultiForm<T>& f, const std::vector<T>& x)
{
    check_len(f.n(), x.size(), "point");
    T s(0);
    for (const auto& [e, c] : f.terms()) {
        T m = c;
        for (std::size_t i = 0; i < e.size(); ++i) m *= power(x[i], e[i]);
        s += m;
    }
    return s;
}

template <class T>
MultiForm<T> partial_derivative(const MultiForm<T>& f, std::size_t i)
{
    if (i >= f.n()) throw DimensionMismatch("variable index out of range");
    std::vector<T> v(f.n(), T(0));
    v[i] = T(1);
    return dir_derivative(f, v);
}

template <class T>
MultiForm<T> dir_derivative(const MultiForm<T>& f, const std::vector<T>& v)
{
    check_len(f.n(), v.size(), "direction");
    if (f.d() == 0) throw WrongDegree("directional derivative of a degree-0 form");
    MultiForm<T> r(f.n(), f.d() - 1);
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0 || is_zero(v[i])) continue;
            Exponent de = e;
            --de[i];
            r.add_term(de, c * T(static_cast<long>(e[i])) * v[i]);
        }
    }
    return r;
}

template <class T>
Matrix<T> hessian_at(const MultiForm<T>& f, const std::vector<T>& a)
{
    check_len(f.n(), a.size(), "point");
    if (f.d() < 2) throw WrongDegree("Hessian needs degree >= 2");
    const std::size_t n = f.n();
    Matrix<T> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        const MultiForm<T> fi = partial_derivative(f, i);
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = eval(partial_derivative(fi, j), a);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

template <class T>
UniPoly<T> restrict_line(const MultiForm<T>& f, const std::vector<T>& x, const std::vector<T>& v,
                         const Tolerance& tol)
{
    check_len(f.n(), x.size(), "point");
    check_len(f.n(), v.size(), "direction");
    std::vector<T> a(f.d() + 1);
    MultiForm<T> g = f;
    for (std::size_t k = 0; k <= f.d(); ++k) {
        a[k] = eval(g, x) / factorial<T>(k);
        if (k < f.d()) g = dir_derivative(g, v);
    }
    UniPoly<T> iterated(std::move(a));
    const UniPoly<T> expanded = expand_restriction(f, x, v);
    if constexpr (is_exact_v<T>) {
        if (!(iterated == expanded)) throw InternalMismatch("line restriction: derivative and expansion routes differ");
    } else {
        const double band = tol.band(restriction_scale(f, x, v));
        for (std::size_t k = 0; k <= f.d(); ++k) {
            const long kk = static_cast<long>(k);
            if (std::fabs(iterated.coeff(kk) - expanded.coeff(kk)) > band)
                throw InternalMismatch("line restriction: derivative and expansion routes differ at t^" +
                                       std::to_string(k));
        }
    }
    return iterated;
}

template <class T>
Inertia inertia(const Matrix<T>& q, const Tolerance& tol)
{
    Inertia in;
    const std::size_t n = q.size();
    if constexpr (is_exact_v<T>) {
        // det(tI - Q) is real-rooted, so Descartes' count is exact.
        const UniPoly<T> chi = char_poly(q);
        const auto& c = chi.coeffs();
        std::size_t z = 0;
        while (z < c.size() && is_zero(c[z])) ++z;
        int last = 0;
        for (std::size_t i = z; i < c.size(); ++i) {
            const int s = sgn(c[i]);
            if (s == 0) continue;
            if (last != 0 && s != last) ++in.positive;
            last = s;
        }
        in.zero = z;
        in.negative = n - z - in.positive;
    } else {
        const auto vals = sym_eigs(q, tol).values;
        double scale = frobenius_norm(q);
        const double band = tol.band(scale);
        for (double l : vals) {
            if (l > band) ++in.positive;
            else if (l < -band) ++in.negative;
            else ++in.zero;
        }
    }
    return in;
}

template <class T>
FormReport quadratic_lorentzian_check(const Matrix<T>& q, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    check_len(k.dim(), q.size(), "matrix");
    if (!is_symmetric(q, tol)) throw InputError("quadratic form matrix is not symmetric");
    FormReport r;
    r.property = "quadratic-lorentzian";
    r.eigenvalues = sym_eigs(q, tol).values;
    const Inertia in = inertia(q, tol);
    r.counts = {{"positive_eigenvalues", in.positive}, {"zero_eigenvalues", in.zero},
                {"negative_eigenvalues", in.negative}};

    Verdict spectrum = make_verdict(Status::Holds, "exactly one positive eigenvalue");
    if (in.positive != 1) {
        spectrum = make_verdict(Status::Fails);
        spectrum.witness = witness({in.positive}, {r.eigenvalues},
                                   std::to_string(in.positive) + " positive eigenvalues");
    }
    r.details.emplace_back("one_positive_eigenvalue", spectrum);

    const double qn = frobenius_norm(q);
    Verdict cond;
    if (k.kind() != ConeKind::SecondOrder) {
        // y^T Q x >= 0 over pairs of extreme rays; within the band counts as zero
        const auto& rays = k.rays();
        std::vector<std::vector<T>> rt;
        for (const auto& ray : rays) {
            std::vector<T> x;
            for (const auto& c : ray) x.push_back(scalar_from_rational<T>(c));
            rt.push_back(std::move(x));
        }
        InequalityChain<T> chain(tol, false);
        for (std::size_t i = 0; i < rt.size() && !chain.failed(); ++i) {
            const auto qx = q * rt[i];
            for (std::size_t j = i; j < rt.size(); ++j) {
                T s(0);
                double ni = 0, nj = 0;
                for (std::size_t c = 0; c < qx.size(); ++c) {
                    s += rt[j][c] * qx[c];
                    ni += magnitude(rt[i][c]) * magnitude(rt[i][c]);
                    nj += magnitude(rt[j][c]) * magnitude(rt[j][c]);
                }
                const double scale = qn * std::sqrt(ni * nj);
                Sign sg = sign_of(s, scale, tol);
                if (sg == Sign::Indeterminate) sg = Sign::Zero;
                chain.record(sg, to_double(s) / std::max(scale, 1e-300), {i, j}, "y^T Q x < 0 on extreme rays");
                if (chain.failed()) break;
            }
        }
        cond = chain.finish();
        if (cond.fails() && cond.witness) {
            const auto& w = cond.witness->indices;
            cond.witness->points = {vector_to_double(rt[w[0]]), vector_to_double(rt[w[1]])};
        }
    } else {
        // x^T Q x > 0 on the axis and on sampled interior points
        const Matrix<double> qd = convert<double>(q);
        std::vector<std::vector<double>> pts;
        std::vector<double> axis(k.dim(), 0.0);
        axis.back() = 1.0;
        pts.push_back(axis);
        for (std::size_t t = 0; t < opt.trials; ++t) {
            auto rng = stream_rng(opt.seed, t);
            pts.push_back(sample_interior(k, rng));
        }
        InequalityChain<T> chain(tol, true);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto x = vector_from_double<T>(pts[i]);
            const auto qx = q * x;
            T s(0);
            double nx = 0;
            for (std::size_t c = 0; c < x.size(); ++c) {
                s += x[c] * qx[c];
                nx += pts[i][c] * pts[i][c];
            }
            const double scale = qn * nx;
            chain.record(sign_of(s, scale, tol), to_double(s) / std::max(scale, 1e-300), {i},
                         "x^T Q x <= 0 at an interior point");
            if (chain.failed()) break;
        }
        cond = chain.finish();
        if (cond.witness && !cond.witness->indices.empty()) cond.witness->points = {pts[cond.witness->indices[0]]};
        if (cond.status == Status::Holds) {
            cond.status = Status::HoldsSampled;
            cond.note = "sampled over " + std::to_string(pts.size()) + " interior points";
        }
    }
    r.details.emplace_back("cone_condition", cond);

    if (spectrum.fails()) r.verdict = spectrum;
    else r.verdict = cond;

    if (k.is_self_dual()) {
        r.details.emplace_back("k_nonnegative", matrix_k_nonnegative(q, k, tol, opt));
        r.details.emplace_back("dichotomy", dichotomy(q, k, is_singular(q, in), tol, opt));
    }
    return r;
}

template <class T>
FormReport lorentzian_sample_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    check_len(k.dim(), f.n(), "form");
    FormReport r;
    r.property = "lorentzian-sampled";
    if (f.d() == 0) {
        const T c = f.coeff(Exponent(f.n(), 0));
        r.verdict = make_verdict(exact_sign(c) >= 0 ? Status::Holds : Status::Fails, "degree 0: sign of the constant");
        if (r.verdict.fails()) r.verdict.witness = witness({0}, {}, "negative constant");
        return r;
    }
    if (f.d() == 1) {
        std::vector<T> l(f.n(), T(0));
        for (const auto& [e, c] : f.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] == 1) l[i] = c;
        // a linear form is nonnegative on K exactly when it lies in K*
        const bool ok = dual_contains(k, l, tol);
        r.verdict = make_verdict(ok ? Status::Holds : Status::Fails, "degree 1: coefficient vector in the dual cone");
        if (!ok) r.verdict.witness = witness({}, {vector_to_double(l)}, "linear form negative somewhere on K");
        return r;
    }
    if (f.d() == 2) {
        FormReport q = quadratic_lorentzian_check(constant_hessian(f), k, tol, opt);
        q.property = r.property;
        return q;
    }

    const SampleOptions inner{std::min(opt.trials, kInnerTrials), splitmix64(opt.seed)};
    std::size_t undecided = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        MultiForm<T> g = f;
        std::vector<std::vector<double>> tuple;
        for (std::size_t s = 0; s + 2 < f.d(); ++s) {
            tuple.push_back(sample_interior(k, rng));
            g = dir_derivative(g, vector_from_double<T>(tuple.back()));
        }
        const FormReport q = quadratic_lorentzian_check(constant_hessian(g), k, tol, inner);
        ++r.samples;
        r.eigenvalues = q.eigenvalues;
        if (q.verdict.fails()) {
            r.verdict = make_verdict(Status::Fails);
            const std::string why = q.verdict.witness ? q.verdict.witness->detail : "quadratic reduction not Lorentzian";
            r.verdict.witness = witness({t}, tuple, why);
            r.details = q.details;
            return r;
        }
        if (q.verdict.unknown()) ++undecided;
    }
    close_sampled(r, undecided, "interior tuples");
    return r;
}

template <class T>
FormReport clc_necessary_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    check_len(k.dim(), f.n(), "form");
    FormReport r;
    r.property = "clc-necessary";
    std::vector<T> fact(f.d() + 1);
    for (std::size_t j = 0; j <= f.d(); ++j) fact[j] = factorial<T>(j);

    std::size_t undecided = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        const auto xd = sample_interior(k, rng);
        const auto vd = sample_interior(k, rng);
        const auto p = restrict_line(f, vector_from_double<T>(xd), vector_from_double<T>(vd), tol);
        ++r.samples;
        std::vector<T> seq(f.d() + 1);
        double scale = 0;
        for (std::size_t j = 0; j <= f.d(); ++j) {
            seq[j] = fact[j] * p.coeff(static_cast<long>(j));
            scale = std::max(scale, magnitude(seq[j]));
        }
        bool unsure = false;
        for (std::size_t j = 0; j <= f.d(); ++j) {
            const Sign s = sign_of(seq[j], scale, tol);
            if (s == Sign::Negative || s == Sign::Zero) {
                r.verdict = make_verdict(Status::Fails);
                r.verdict.witness = witness({t, j}, {xd, vd}, "coefficient of f(x + t v) not positive");
                return r;
            }
            if (s == Sign::Indeterminate) unsure = true;
        }
        if (unsure) {
            ++undecided;
            continue;
        }
        const Verdict lc = is_log_concave(seq, false, tol);
        if (lc.fails()) {
            r.verdict = make_verdict(Status::Fails);
            std::vector<std::size_t> idx{t};
            if (lc.witness)
                for (auto i : lc.witness->indices) idx.push_back(i);
            r.verdict.witness = witness(idx, {xd, vd}, "D_v^k f(x) not log-concave");
            return r;
        }
        if (lc.unknown()) ++undecided;
    }

    // Limits from the interior: on x in the boundary of K the values stay
    // nonnegative and the non-strict inequalities persist.
    InequalityChain<T> edge(tol, false);
    std::size_t probes = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed ^ 0x5bd1e995ULL, t);
        const auto xd = sample_cone(k, rng);
        if (interior_contains(k, xd, tol)) continue;
        const auto vd = sample_interior(k, rng);
        const auto p = restrict_line(f, vector_from_double<T>(xd), vector_from_double<T>(vd), tol);
        ++probes;
        std::vector<T> seq(f.d() + 1);
        double scale = 0;
        for (std::size_t j = 0; j <= f.d(); ++j) {
            seq[j] = fact[j] * p.coeff(static_cast<long>(j));
            scale = std::max(scale, magnitude(seq[j]));
        }
        // sampled boundary points are only rounded onto the boundary, so
        // values within the band count as zero even in exact mode
        for (std::size_t j = 0; j <= f.d(); ++j) {
            Sign s = sign_of(to_double(seq[j]), scale, tol);
            if (s == Sign::Indeterminate) s = Sign::Zero;
            edge.record(s, to_double(seq[j]) / std::max(scale, 1e-300), {t, j}, "D_v^k f(x) < 0 at a boundary point");
        }
        for (std::size_t j = 1; j + 1 <= f.d(); ++j) {
            const double lhs = to_double(seq[j] * seq[j]);
            const double rhs = to_double(seq[j - 1] * seq[j + 1]);
            Sign s = sign_of(lhs - rhs, scale * scale, tol);
            if (s == Sign::Indeterminate) s = Sign::Zero;
            edge.record(s, normalized_slack(lhs, rhs), {t, j}, "log-concavity fails at a boundary point");
        }
        if (edge.failed()) {
            r.verdict = make_verdict(Status::Fails);
            r.verdict.witness = edge.finish().witness;
            r.verdict.witness->points = {xd, vd};
            return r;
        }
    }
    Verdict bv = edge.finish();
    bv.status = Status::HoldsSampled;
    bv.note = "strict log-concavity where a derivative vanishes identically on a face is not decided";
    r.details.emplace_back("boundary", bv);
    r.counts = {{"interior_samples", r.samples}, {"boundary_probes", probes}};
    close_sampled(r, undecided, "interior line samples");
    return r;
}

template <class T>
FormReport hessian_signature_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    check_len(k.dim(), f.n(), "form");
    if (f.d() < 2) throw WrongDegree("Hessian signature needs degree >= 2");
    FormReport r;
    r.property = "hessian-signature";
    const SampleOptions inner{std::min(opt.trials, kInnerTrials), splitmix64(opt.seed)};
    std::size_t undecided = 0, nonsingular = 0, singular = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        const auto ad = sample_interior(k, rng);
        const Matrix<T> h = hessian_at(f, vector_from_double<T>(ad));
        const Inertia in = inertia(h, tol);
        ++r.samples;
        r.eigenvalues = sym_eigs(h, tol).values;
        auto refute = [&](std::string why) {
            r.verdict = make_verdict(Status::Fails);
            r.verdict.witness = witness({t}, {ad, r.eigenvalues}, std::move(why));
        };
        if (in.positive != 1) {
            refute(std::to_string(in.positive) + " positive Hessian eigenvalues");
            return r;
        }
        if (!k.is_self_dual()) continue;
        const bool sing = is_singular(h, in);
        const Verdict dv = dichotomy(h, k, sing, tol, inner);
        if (dv.fails()) {
            refute(dv.note);
            return r;
        }
        if (dv.unknown()) {
            ++undecided;
            continue;
        }
        if (sing) {
            ++singular;
            continue;
        }
        ++nonsingular;
        const auto pf = perron_frobenius_check(h, k, tol, inner).perron;
        if (!(pf.rho_is_eigenvalue && pf.simple && pf.eigenvector_interior)) {
            refute("Perron eigenvector of the nonsingular Hessian is not simple and interior");
            return r;
        }
    }
    if (k.is_self_dual()) r.counts = {{"nonsingular_irreducible", nonsingular}, {"singular_nonnegative", singular}};
    close_sampled(r, undecided, "interior points");
    return r;
}

template <class T>
FormReport hurwitz_over_cone_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol, SampleOptions opt,
                                   const std::vector<LineProbe>& probes)
{
    validate(tol);
    check_len(k.dim(), f.n(), "form");
    if (f.d() < 1) throw WrongDegree("Hurwitz stability over a cone needs degree >= 1");
    FormReport r;
    r.property = "hurwitz-over-K";
    for (const auto& pr : probes) {
        if (!interior_contains(k, pr.x, tol) || !interior_contains(k, pr.v, tol))
            throw NotInterior("probe point is not interior to the cone");
    }
    std::size_t undecided = 0;
    auto run = [&](std::size_t idx, const std::vector<double>& xd, const std::vector<double>& vd) {
        const auto p = restrict_line(f, vector_from_double<T>(xd), vector_from_double<T>(vd), tol);
        ++r.samples;
        const Verdict v = routh_hurwitz_stable(p, tol);
        if (v.fails()) {
            r.verdict = make_verdict(Status::Fails);
            r.verdict.witness =
                witness({idx}, {xd, vd}, "f(x + t v) not Hurwitz-stable" + (v.witness ? ": " + v.witness->detail : ""));
            return true;
        }
        if (v.unknown()) ++undecided;
        return false;
    };
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (run(i, probes[i].x, probes[i].v)) return r;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        const auto xd = sample_interior(k, rng);
        const auto vd = sample_interior(k, rng);
        if (run(probes.size() + t, xd, vd)) return r;
    }
    r.counts = {{"probes", probes.size()}, {"samples", opt.trials}};
    close_sampled(r, undecided, "line restrictions");
    return r;
}

template <class T>
bool verify_sum_condition(const MultiForm<T>& f, const MultiForm<T>& g, const std::vector<T>& b,
                          const std::vector<T>& c, const Tolerance& tol)
{
    if (f.n() != g.n()) throw DimensionMismatch("forms in different numbers of variables");
    if (f.d() != g.d()) throw DegreeMismatch("forms of different degrees");
    check_len(f.n(), b.size(), "b");
    check_len(f.n(), c.size(), "c");
    if (f.d() == 0) return false;
    const MultiForm<T> fb = dir_derivative(f, b);
    const MultiForm<T> gc = dir_derivative(g, c);
    if constexpr (is_exact_v<T>) {
        return !fb.is_zero() && fb == gc;
    } else {
        bool nonzero = false;
        auto check = [&](const MultiForm<T>& p, const MultiForm<T>& q) {
            for (const auto& [e, x] : p.terms()) {
                const T y = q.coeff(e);
                const double s = std::max(magnitude(x), magnitude(y));
                if (std::fabs(x - y) > tol.band(s)) return false;
                if (s > tol.band(0.0)) nonzero = true;
            }
            return true;
        };
        return check(fb, gc) && check(gc, fb) && nonzero;
    }
}

#define LORENTZ_INSTANTIATE(T)                                                                                  \
    template class MultiForm<T>;                                                                                 \
    template MultiForm<T> operator+(const MultiForm<T>&, const MultiForm<T>&);                                   \
    template T eval(const MultiForm<T>&, const std::vector<T>&);                                                 \
    template MultiForm<T> partial_derivative(const MultiForm<T>&, std::size_t);                                  \
    template MultiForm<T> dir_derivative(const MultiForm<T>&, const std::vector<T>&);                            \
    template Matrix<T> hessian_at(const MultiForm<T>&, const std::vector<T>&);                                   \
    template UniPoly<T> restrict_line(const MultiForm<T>&, const std::vector<T>&, const std::vector<T>&,         \
                                      const Tolerance&);                                                         \
    template Inertia inertia(const Matrix<T>&, const Tolerance&);                                                \
    template FormReport quadratic_lorentzian_check(const Matrix<T>&, const Cone&, const Tolerance&, SampleOptions); \
    template FormReport lorentzian_sample_check(const MultiForm<T>&, const Cone&, const Tolerance&, SampleOptions); \
    template FormReport clc_necessary_check(const MultiForm<T>&, const Cone&, const Tolerance&, SampleOptions);  \
    template FormReport hessian_signature_check(const MultiForm<T>&, const Cone&, const Tolerance&, SampleOptions); \
    template FormReport hurwitz_over_cone_check(const MultiForm<T>&, const Cone&, const Tolerance&, SampleOptions, \
                                                const std::vector<LineProbe>&);                                  \
    template bool verify_sum_condition(const MultiForm<T>&, const MultiForm<T>&, const std::vector<T>&,         \
                                       const std::vector<T>&, const Tolerance&);

LORENTZ_INSTANTIATE(double)
LORENTZ_INSTANTIATE(Rational)
#undef LORENTZ_INSTANTIATE

template MultiForm<double> convert(const MultiForm<Rational>&);
template MultiForm<Rational> convert(const MultiForm<double>&);
template MultiForm<double> convert(const MultiForm<double>&);
template MultiForm<Rational> convert(const MultiForm<Rational>&);

} // namespace lorentz
