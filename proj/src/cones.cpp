#include "lorentz/cones.hpp"

#include "lorentz/eigen.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/random.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <type_traits>

namespace lorentz {

namespace {

constexpr std::size_t kMaxFacetEnumerationDim = 6;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::vector<RationalVector> null_space(std::vector<RationalVector> rows, std::size_t n)
{
    const auto pivots = rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Positive rescaling with the first nonzero entry of absolute value one.
RationalVector canonical_direction(RationalVector v)
{
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            const Rational s = abs(x);
            for (auto& y : v) y /= s;
            break;
        }
    }
    return v;
}

bool is_zero_vector(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<RationalVector> enumerate_facets(const std::vector<RationalVector>& gens, std::size_t n)
{
    std::vector<RationalVector> facets;
    auto consider = [&](const std::vector<RationalVector>& subset) {
        const auto ns = null_space(subset, n);
        if (ns.size() != 1) return;
        RationalVector v = ns.front();
        int s = 0;
        for (const auto& g : gens) {
            const int d = sgn(dot(v, g));
            if (d == 0) continue;
            if (s == 0) s = d;
            else if (d != s) return;
        }
        if (s < 0)
            for (auto& x : v) x = -x;
        v = canonical_direction(std::move(v));
        if (std::find(facets.begin(), facets.end(), v) == facets.end()) facets.push_back(std::move(v));
    };
    const std::size_t m = gens.size();
    const std::size_t k = n - 1;
    if (k > m) return facets;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<RationalVector> subset;
        for (auto i : idx) subset.push_back(gens[i]);
        consider(subset);
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return facets;
}

double norm(const std::vector<double>& v)
{
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

template <class T>
double norm_of(const std::vector<T>& v)
{
    double s = 0;
    for (const auto& x : v) s += to_double(x) * to_double(x);
    return std::sqrt(s);
}

std::vector<double> unit(std::vector<double> v)
{
    const double s = norm(v);
    if (s > 0)
        for (auto& x : v) x /= s;
    return v;
}

template <class T>
std::vector<T> convert_vector(const RationalVector& v)
{
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(scalar_from_rational<T>(x));
    return out;
}

void check_dim(const Cone& k, std::size_t got)
{
    if (got != k.dim())
        throw DimensionMismatch("vector of length " + std::to_string(got) + " for a cone in dimension " +
                                std::to_string(k.dim()));
}

enum class Place { Outside, Boundary, Interior };

// Worst-case facet slack; within the band counts as boundary.
template <class T>
Place locate(const Cone& k, const std::vector<T>& x, const Tolerance& tol, double* slack = nullptr)
{
    check_dim(k, x.size());
    const double xn = norm_of(x);
    double worst = std::numeric_limits<double>::infinity();
    Place place = Place::Interior;
    auto update = [&](Sign s, double value) {
        worst = std::min(worst, value);
        if (s == Sign::Negative) place = Place::Outside;
        else if (s != Sign::Positive && place == Place::Interior) place = Place::Boundary;
    };
    if (k.kind() == ConeKind::SecondOrder) {
        const std::size_t n = x.size();
        T radial(0);
        for (std::size_t i = 0; i + 1 < n; ++i) radial += x[i] * x[i];
        if constexpr (is_exact_v<T>) {
            const T& top = x[n - 1];
            const int st = sgn(top);
            const int sd = sgn(T(top * top - radial));
            Sign s = Sign::Positive;
            if (st < 0 || (st == 0 && sd != 0) || (st > 0 && sd < 0)) s = Sign::Negative;
            else if (sd == 0) s = Sign::Zero;
            update(s, (to_double(top) - std::sqrt(to_double(radial))) / std::max(xn, 1e-300));
        } else {
            const double gap = x[n - 1] - std::sqrt(radial);
            update(sign_of(gap, xn, tol), gap / std::max(xn, 1e-300));
        }
    } else {
        for (const auto& f : k.facets()) {
            const std::vector<T> ft = convert_vector<T>(f);
            T p(0);
            for (std::size_t i = 0; i < x.size(); ++i) p += ft[i] * x[i];
            const double scale = norm_of(ft) * xn;
            update(sign_of(p, scale, tol), to_double(p) / std::max(scale, 1e-300));
        }
    }
    if (slack) *slack = worst;
    return place;
}

std::vector<double> soc_boundary(std::mt19937_64& rng, std::size_t n)
{
    std::normal_distribution<double> normal;
    std::vector<double> x(n);
    double r = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        x[i] = normal(rng);
        r += x[i] * x[i];
    }
    x[n - 1] = std::sqrt(r);
    if (x[n - 1] == 0.0) x[n - 1] = 1.0;
    return x;
}

// Fixed probe points of the second-order cone: the axis and the boundary
// points +-e_i + e_n.
std::vector<std::vector<double>> soc_probes(std::size_t n)
{
    std::vector<std::vector<double>> out;
    std::vector<double> axis(n, 0.0);
    axis[n - 1] = 1.0;
    out.push_back(axis);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (double s : {1.0, -1.0}) {
            std::vector<double> p(n, 0.0);
            p[i] = s;
            p[n - 1] = 1.0;
            out.push_back(p);
        }
    }
    return out;
}

// Nonzero points of K used by the sampled checks on the second-order cone.
std::vector<std::vector<double>> soc_test_points(const Cone& k, const SampleOptions& opt, bool boundary_only)
{
    auto pts = soc_probes(k.dim());
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        if (boundary_only) pts.push_back(soc_boundary(rng, k.dim()));
        else pts.push_back(sample_cone(k, rng));
    }
    return pts;
}

template <class T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& x)
{
    return a * x;
}

Witness point_witness(std::vector<std::size_t> idx, std::vector<std::vector<double>> pts, std::string detail)
{
    return Witness{std::move(idx), std::move(pts), std::move(detail)};
}

// Maps each test point through `step` and requires the image to be in K
// (or in int K). Exact rays for polyhedral cones, samples otherwise.
template <class T, class Step>
Verdict image_check(const Matrix<T>& a, const Cone& k, const Tolerance& tol, const SampleOptions& opt,
                    bool interior, Step step, const char* what)
{
    if (a.size() != k.dim()) throw DimensionMismatch("matrix and cone dimensions differ");
    Verdict v;
    if (k.kind() == ConeKind::SecondOrder) {
        const Matrix<double> ad = convert<double>(a);
        std::size_t idx = 0;
        for (const auto& x : soc_test_points(k, opt, interior)) {
            const auto y = step(ad, x);
            double slack = 0;
            const Place p = locate(k, y, tol, &slack);
            v.margin = std::min(v.margin, slack);
            if (p == Place::Outside || (interior && p != Place::Interior)) {
                v.status = Status::Fails;
                v.witness = point_witness({idx}, {x, y}, what);
                return v;
            }
            ++idx;
        }
        v.status = Status::HoldsSampled;
        v.note = "sampled over " + std::to_string(idx) + " points of the second-order cone";
        return v;
    }
    const auto& rays = k.rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto x = convert_vector<T>(rays[i]);
        const auto y = step(a, x);
        double slack = 0;
        const Place p = locate(k, y, tol, &slack);
        v.margin = std::min(v.margin, slack);
        if (p == Place::Outside || (interior && p != Place::Interior)) {
            v.status = Status::Fails;
            v.witness = point_witness({i}, {vector_to_double(x), vector_to_double(y)}, what);
            return v;
        }
    }
    v.status = Status::Holds;
    return v;
}

template <class T>
T quadratic_value(const Matrix<T>& q, const std::vector<T>& x)
{
    const auto qx = q * x;
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * qx[i];
    return s;
}

} // namespace

std::size_t rank_of(const std::vector<RationalVector>& rows)
{
    if (rows.empty()) return 0;
    auto m = rows;
    return rref(m, rows.front().size()).size();
}

Cone Cone::orthant(std::size_t n)
{
    if (n == 0) throw InputError("cone dimension must be positive");
    Cone c;
    c.kind_ = ConeKind::Orthant;
    c.n_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = 1;
        c.generators_.push_back(e);
    }
    c.facets_ = c.generators_;
    c.rays_ = c.generators_;
    return c;
}

Cone Cone::second_order(std::size_t n)
{
    if (n < 2) throw InputError("second-order cone needs dimension >= 2");
    Cone c;
    c.kind_ = ConeKind::SecondOrder;
    c.n_ = n;
    return c;
}

Cone Cone::polyhedral(std::vector<RationalVector> generators, std::vector<RationalVector> facets)
{
    if (generators.empty()) throw InputError("polyhedral cone needs generators");
    const std::size_t n = generators.front().size();
    if (n == 0) throw InputError("cone dimension must be positive");
    for (const auto& g : generators) {
        if (g.size() != n) throw DimensionMismatch("generators have different lengths");
        if (is_zero_vector(g)) throw InputError("zero generator");
    }
    for (const auto& f : facets) {
        if (f.size() != n) throw DimensionMismatch("facet normal has the wrong length");
        if (is_zero_vector(f)) throw InputError("zero facet normal");
    }
    if (rank_of(generators) != n) throw InputError("generators do not span R^n; the cone is not solid");
    if (facets.empty()) {
        if (n > kMaxFacetEnumerationDim)
            throw Unsupported("facet normals must be supplied for polyhedral cones above dimension 6");
        facets = enumerate_facets(generators, n);
    }
    for (std::size_t j = 0; j < facets.size(); ++j)
        for (const auto& g : generators)
            if (sgn(dot(facets[j], g)) < 0) throw InputError("a generator violates facet " + std::to_string(j));
    if (rank_of(facets) != n) throw InputError("cone is not pointed");

    Cone c;
    c.kind_ = ConeKind::Polyhedral;
    c.n_ = n;
    c.generators_ = std::move(generators);
    c.facets_ = std::move(facets);
    std::vector<RationalVector> seen;
    for (const auto& g : c.generators_) {
        const auto dir = canonical_direction(g);
        if (std::find(seen.begin(), seen.end(), dir) != seen.end()) continue;
        seen.push_back(dir);
        std::vector<RationalVector> tight;
        for (const auto& f : c.facets_)
            if (sgn(dot(f, g)) == 0) tight.push_back(f);
        if (rank_of(tight) == n - 1) c.rays_.push_back(g);
    }
    return c;
}

Cone Cone::polyhedral(const std::vector<std::vector<double>>& generators)
{
    std::vector<RationalVector> g;
    for (const auto& row : generators) g.push_back(vector_from_double<Rational>(row));
    return polyhedral(std::move(g));
}

const std::vector<RationalVector>& Cone::rays() const
{
    if (kind_ == ConeKind::SecondOrder) throw Unsupported("the second-order cone has a continuum of extreme rays");
    return rays_;
}

template <class T>
bool contains(const Cone& k, const std::vector<T>& x, const Tolerance& tol)
{
    return locate(k, x, tol) != Place::Outside;
}

template <class T>
bool interior_contains(const Cone& k, const std::vector<T>& x, const Tolerance& tol)
{
    return locate(k, x, tol) == Place::Interior;
}

template <class T>
bool dual_contains(const Cone& k, const std::vector<T>& y, const Tolerance& tol)
{
    check_dim(k, y.size());
    if (k.is_self_dual()) return contains(k, y, tol);
    const double yn = norm_of(y);
    for (const auto& g : k.generators()) {
        const auto gt = convert_vector<T>(g);
        T p(0);
        for (std::size_t i = 0; i < y.size(); ++i) p += gt[i] * y[i];
        if (sign_of(p, norm_of(gt) * yn, tol) == Sign::Negative) return false;
    }
    return true;
}

std::vector<std::vector<double>> extreme_rays(const Cone& k)
{
    std::vector<std::vector<double>> out;
    for (const auto& r : k.rays()) out.push_back(unit(vector_to_double(r)));
    return out;
}

std::vector<double> sample_interior(const Cone& k, std::mt19937_64& rng)
{
    std::exponential_distribution<double> expo(1.0);
    const std::size_t n = k.dim();
    if (k.kind() == ConeKind::SecondOrder) {
        auto x = soc_boundary(rng, n);
        x[n - 1] += 0.05 + expo(rng);
        return x;
    }
    std::vector<double> x(n, 0.0);
    for (const auto& g : k.generators()) {
        const auto u = unit(vector_to_double(g));
        const double w = 0.05 + expo(rng);
        for (std::size_t i = 0; i < n; ++i) x[i] += w * u[i];
    }
    return x;
}

std::vector<double> sample_interior(const Cone& k, std::uint64_t seed)
{
    auto rng = stream_rng(seed, 0);
    return sample_interior(k, rng);
}

std::vector<double> sample_cone(const Cone& k, std::mt19937_64& rng)
{
    std::exponential_distribution<double> expo(1.0);
    const std::size_t n = k.dim();
    if (k.kind() == ConeKind::SecondOrder) {
        if (rng() % 2 == 0) return soc_boundary(rng, n);
        return sample_interior(k, rng);
    }
    const auto rays = extreme_rays(k);
    switch (rng() % 3) {
    case 0: return rays[rng() % rays.size()];
    case 1: {
        std::vector<double> x(n, 0.0);
        const std::size_t forced = rng() % rays.size();
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (r != forced && rng() % 2 == 0) continue;
            const double w = 0.05 + expo(rng);
            for (std::size_t i = 0; i < n; ++i) x[i] += w * rays[r][i];
        }
        return x;
    }
    default: return sample_interior(k, rng);
    }
}

std::vector<double> sample_cone(const Cone& k, std::uint64_t seed)
{
    auto rng = stream_rng(seed, 0);
    return sample_cone(k, rng);
}

Verdict dual_contained_in(const Cone& k, DualDirection dir)
{
    if (k.is_self_dual()) return make_verdict(Status::Holds, "self-dual cone");
    const Tolerance exact{0.0, 0.0};
    if (dir == DualDirection::DualInCone) {
        // K* is generated by the facet normals
        for (std::size_t j = 0; j < k.facets().size(); ++j) {
            if (!contains(k, k.facets()[j], exact)) {
                Verdict v = make_failure({j}, "facet normal of K lies outside K");
                v.witness->points.push_back(vector_to_double(k.facets()[j]));
                return v;
            }
        }
        return make_verdict(Status::Holds);
    }
    const auto& g = k.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            if (sgn(dot(g[i], g[j])) < 0) return make_failure({i, j}, "generators with negative inner product");
        }
    }
    return make_verdict(Status::Holds);
}

template <class T>
Verdict matrix_k_nonnegative(const Matrix<T>& a, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    return image_check(
        a, k, tol, opt, false, [](const auto& m, const auto& x) { return apply(m, x); }, "A x leaves K");
}

template <class T>
Verdict matrix_k_positive(const Matrix<T>& a, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    return image_check(
        a, k, tol, opt, true, [](const auto& m, const auto& x) { return apply(m, x); },
        "A x is not interior to K");
}

template <class T>
Verdict matrix_k_irreducible(const Matrix<T>& a, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    const Verdict nn = matrix_k_nonnegative(a, k, tol, opt);
    if (nn.fails()) {
        const std::size_t idx = nn.witness && !nn.witness->indices.empty() ? nn.witness->indices.front() : 0;
        throw Inapplicable("matrix is not K-nonnegative", idx);
    }
    if (nn.unknown()) return make_verdict(Status::Unknown, "K-nonnegativity undecided");
    const std::size_t n = k.dim();
    // x -> (I + A)^{n-1} x, renormalized after each step in floating point
    auto power = [n](const auto& m, auto x) {
        using V = std::decay_t<decltype(x[0])>;
        for (std::size_t s = 0; s + 1 < n; ++s) {
            const auto y = m * x;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
            if constexpr (!is_exact_v<V>) {
                const double s2 = norm(x);
                if (s2 > 0)
                    for (auto& xi : x) xi /= s2;
            }
        }
        return x;
    };
    Verdict v = image_check(a, k, tol, opt, true, power, "(I + A)^{n-1} x is not interior to K");
    if (v.status == Status::Holds && nn.status == Status::HoldsSampled) v.status = Status::HoldsSampled;
    return v;
}

template <class T>
Verdict matrix_k_copositive_refute(const Matrix<T>& q, const Cone& k, bool strict, const Tolerance& tol,
                                   SampleOptions opt)
{
    validate(tol);
    if (q.size() != k.dim()) throw DimensionMismatch("matrix and cone dimensions differ");
    const double qn = frobenius_norm(q);
    Verdict v;
    auto test = [&](const auto& m, const auto& x, std::size_t idx) {
        const auto val = quadratic_value(m, x);
        const double xn = norm_of(x);
        const double scale = qn * xn * xn;
        v.margin = std::min(v.margin, to_double(val) / std::max(scale, 1e-300));
        const Sign s = sign_of(val, scale, tol);
        bool refuted = s == Sign::Negative;
        if (strict && !refuted) refuted = s == Sign::Zero || (s == Sign::Indeterminate && exact_sign(val) <= 0);
        if (refuted) {
            v.status = Status::Fails;
            v.witness = point_witness({idx}, {vector_to_double(x)},
                                      strict ? "x^T Q x <= 0 for x in K" : "x^T Q x < 0 for x in K");
        }
        return refuted;
    };
    std::size_t idx = 0;
    if (k.kind() != ConeKind::SecondOrder) {
        const auto& rays = k.rays();
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (test(q, convert_vector<T>(rays[i]), idx++)) return v;
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                RationalVector s = rays[i];
                for (std::size_t c = 0; c < s.size(); ++c) s[c] += rays[j][c];
                if (test(q, convert_vector<T>(s), idx++)) return v;
            }
        }
    } else {
        for (const auto& p : soc_probes(k.dim()))
            if (test(convert<double>(q), p, idx++)) return v;
    }
    const Matrix<double> qd = convert<double>(q);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = stream_rng(opt.seed, t);
        if (test(qd, sample_cone(k, rng), idx++)) return v;
    }
    v.status = Status::Unknown;
    v.note = "no refuting point found; copositivity is not certified";
    return v;
}

template <class T>
ConeMatrixReport perron_frobenius_check(const Matrix<T>& a, const Cone& k, const Tolerance& tol, SampleOptions opt)
{
    validate(tol);
    if (a.size() != k.dim()) throw DimensionMismatch("matrix and cone dimensions differ");
    ConeMatrixReport r;
    r.k_nonnegative = matrix_k_nonnegative(a, k, tol, opt);
    r.k_positive = matrix_k_positive(a, k, tol, opt);
    try {
        r.k_irreducible = matrix_k_irreducible(a, k, tol, opt);
    } catch (const Inapplicable&) {
        r.k_irreducible = make_verdict(Status::NotApplicable, "matrix is not K-nonnegative");
    }

    const Matrix<double> ad = convert<double>(a);
    const auto eigs = eigenvalues(ad);
    auto& p = r.perron;
    for (const auto& l : eigs) p.rho = std::max(p.rho, std::abs(l));
    // eigenvalues of a defective or repeated cluster are only accurate to
    // about sqrt(eps) relative, so clusters are judged with a wider band
    const double band = std::max(tol.band(p.rho), 1e-6 * std::max(1.0, frobenius_norm(ad)));
    const std::complex<double>* top = nullptr;
    std::size_t at_rho = 0, on_circle = 0;
    for (const auto& l : eigs) {
        if (std::abs(l - p.rho) <= band) {
            ++at_rho;
            if (!top) top = &l;
        }
        if (std::fabs(std::abs(l) - p.rho) <= band) ++on_circle;
    }
    p.rho_is_eigenvalue = top != nullptr;
    p.rho_positive = p.rho > band;
    p.simple = at_rho == 1;
    p.modulus_tie = on_circle > 1;
    if (!top) return r;

    auto orient = [&](std::vector<double> u) {
        auto score = [&](const std::vector<double>& w) {
            if (k.kind() == ConeKind::SecondOrder) return std::make_pair(w.back() > 0 ? 1.0 : 0.0, w.back());
            double count = 0, sum = 0;
            for (const auto& f : k.facets()) {
                double d = 0;
                for (std::size_t i = 0; i < w.size(); ++i) d += to_double(f[i]) * w[i];
                count += d > 0 ? 1.0 : 0.0;
                sum += d;
            }
            return std::make_pair(count, sum);
        };
        std::vector<double> neg(u);
        for (auto& x : neg) x = -x;
        return score(neg) > score(u) ? neg : u;
    };
    p.eigenvector = orient(real_eigenvector(ad, top->real()));
    p.eigenvector_in_cone = contains(k, p.eigenvector, tol);
    p.eigenvector_interior = interior_contains(k, p.eigenvector, tol);

    p.unique_semipositive = true;
    for (const auto& l : eigs) {
        if (std::abs(l - p.rho) <= band || std::fabs(l.imag()) > band) continue;
        const auto w = real_eigenvector(ad, l.real());
        std::vector<double> neg(w);
        for (auto& x : neg) x = -x;
        if (contains(k, w, tol) || contains(k, neg, tol)) p.unique_semipositive = false;
    }
    return r;
}

#define LORENTZ_INSTANTIATE(T)                                                                             \
    template bool contains(const Cone&, const std::vector<T>&, const Tolerance&);                           \
    template bool interior_contains(const Cone&, const std::vector<T>&, const Tolerance&);                  \
    template bool dual_contains(const Cone&, const std::vector<T>&, const Tolerance&);                      \
    template Verdict matrix_k_nonnegative(const Matrix<T>&, const Cone&, const Tolerance&, SampleOptions);  \
    template Verdict matrix_k_positive(const Matrix<T>&, const Cone&, const Tolerance&, SampleOptions);     \
    template Verdict matrix_k_irreducible(const Matrix<T>&, const Cone&, const Tolerance&, SampleOptions);  \
    template Verdict matrix_k_copositive_refute(const Matrix<T>&, const Cone&, bool, const Tolerance&,      \
                                                SampleOptions);                                             \
    template ConeMatrixReport perron_frobenius_check(const Matrix<T>&, const Cone&, const Tolerance&,       \
                                                     SampleOptions);

LORENTZ_INSTANTIATE(double)
LORENTZ_INSTANTIATE(Rational)
#undef LORENTZ_INSTANTIATE

} // namespace lorentz
