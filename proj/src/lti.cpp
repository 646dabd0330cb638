#include "lorentz/lti.hpp"

#include "lorentz/eigen.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace lorentz {

namespace {

template <class T>
Verdict eigen_verdict(const Matrix<T>& a, const UniPoly<T>& chi, const Tolerance& tol,
                      std::vector<std::complex<double>>* eigs, double* abscissa)
{
    if (a.size() == 0) return make_verdict(Status::Holds, "empty system");
    if (is_zero(chi.coeff(0))) {
        Verdict v = make_verdict(Status::Fails, "det A = 0: zero eigenvalue");
        v.witness = Witness{{0}, {}, "zero eigenvalue"};
        if (eigs) {
            try {
                *eigs = eigenvalues(convert<double>(a));
                *abscissa = spectral_abscissa(*eigs);
            } catch (const NonConvergence&) {
            }
        }
        return v;
    }
    try {
        const Matrix<double> ad = convert<double>(a);
        *eigs = eigenvalues(ad);
        *abscissa = spectral_abscissa(*eigs);
        double rho = 0;
        for (const auto& l : *eigs) rho = std::max(rho, std::abs(l));
        const double band = tol.band(std::max(rho, frobenius_norm(ad)));
        Verdict v;
        v.margin = -*abscissa / std::max(1.0, rho);
        if (*abscissa < -band) v.status = Status::Holds;
        else if (*abscissa > band) v.status = Status::Fails;
        else v.status = Status::Unknown;
        if (v.status != Status::Holds) {
            std::size_t at = 0;
            for (std::size_t i = 0; i < eigs->size(); ++i)
                if ((*eigs)[i].real() == *abscissa) at = i;
            v.witness = Witness{{at}, {{(*eigs)[at].real(), (*eigs)[at].imag()}}, "rightmost eigenvalue"};
        }
        return v;
    } catch (const NonConvergence& e) {
        return make_verdict(Status::Unknown, e.what());
    }
}

} // namespace

std::string_view to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::Stable: return "stable";
    case Conclusion::Unstable: return "unstable";
    case Conclusion::Inconclusive: return "criterion-inconclusive";
    }
    return "criterion-inconclusive";
}

template <class T>
const Verdict& LTIReport<T>::criterion(const std::string& name) const
{
    for (const auto& [n, v] : criteria)
        if (n == name) return v;
    throw InputError("no criterion named " + name);
}

template <class T>
LTIReport<T> lti_report(const Matrix<T>& a, const Tolerance& tol)
{
    validate(tol);
    LTIReport<T> r;
    r.char_poly = char_poly(a);
    const std::size_t d = a.size();
    r.eigen_stable = eigen_verdict(a, r.char_poly, tol, &r.eigenvalues, &r.spectral_abscissa);
    const Verdict na = make_verdict(Status::NotApplicable, "degree out of range");
    // Computed float coefficients carry rounding error of order
    // C(d, j) |A|^j in the coefficient of t^{d-j}; one inside that band
    // may be a rounded zero and decides nothing.
    std::optional<Verdict> blurred;
    if constexpr (!is_exact_v<T>) {
        const double norm = frobenius_norm(a);
        for (std::size_t k = 0; k < r.char_poly.coeffs().size(); ++k) {
            const std::size_t j = d - k;
            double scale = std::pow(norm, static_cast<double>(j));
            for (std::size_t i = 0; i < j; ++i) scale *= static_cast<double>(d - i) / static_cast<double>(i + 1);
            if (std::fabs(r.char_poly.coeffs()[k]) > tol.band(scale)) continue;
            blurred = make_verdict(Status::Unknown, "coefficient of det(tI - A) within rounding band of zero");
            blurred->witness = Witness{{k}, {{r.char_poly.coeffs()[k]}}, "coefficient of t^" + std::to_string(k)};
            break;
        }
    }
    auto gated = [&](bool applies, auto&& run) { return !applies ? na : blurred ? *blurred : run(); };
    r.routh_hurwitz = blurred ? *blurred : routh_hurwitz_stable(r.char_poly, tol);
    r.criteria.emplace_back("clc_d_le_4", gated(d >= 1 && d <= 4, [&] { return clc_d_le_4_criterion(r.char_poly, tol); }));
    r.criteria.emplace_back("quintic", gated(d == 5, [&] { return quintic_criterion(r.char_poly, tol); }));
    r.criteria.emplace_back("alpha_product",
                            gated(d >= 5, [&] { return alpha_criterion(r.char_poly, AlphaMode::Product, tol); }));
    r.criteria.emplace_back("alpha_square",
                            gated(d >= 5, [&] { return alpha_criterion(r.char_poly, AlphaMode::Square, tol); }));

    const Status rh = r.routh_hurwitz.status, ev = r.eigen_stable.status;
    const bool says_stable = rh == Status::Holds || ev == Status::Holds;
    const bool says_unstable = rh == Status::Fails || ev == Status::Fails;
    if (says_stable && says_unstable) {
        r.consistent = false;
        r.conclusion = Conclusion::Inconclusive;
    } else if (says_stable) {
        r.conclusion = Conclusion::Stable;
    } else if (says_unstable) {
        r.conclusion = Conclusion::Unstable;
    }
    if (ev == Status::Fails)
        for (const auto& [name, v] : r.criteria)
            if (v.status == Status::Holds) r.consistent = false;
    return r;
}

template <class T>
RealizationReport restriction_realization_check(const MultiForm<T>& f, const Cone& k, const std::vector<T>& x0,
                                                const std::vector<T>& v, const Matrix<T>& a, const Tolerance& tol)
{
    validate(tol);
    if (f.n() != k.dim()) throw DimensionMismatch("form and cone dimensions differ");
    if (f.d() != a.size())
        throw DegreeMismatch("form of degree " + std::to_string(f.d()) + " for a " + std::to_string(a.size()) +
                             "-dimensional system");
    if (!interior_contains(k, x0, tol)) throw NotInterior("x0 is not interior to the cone");
    if (!interior_contains(k, v, tol)) throw NotInterior("v is not interior to the cone");

    RealizationReport r;
    const UniPoly<T> p = restrict_line(f, x0, v, tol);
    const UniPoly<T> chi = char_poly(a);
    const std::size_t d = f.d();
    r.verdict = make_verdict(Status::Holds, "det(tI - A) = f(x0 + t v) / f(v)");
    if (p.coeffs().size() != d + 1) {
        r.verdict = make_verdict(Status::Fails, "restriction loses degree: f(v) = 0");
        r.verdict.witness = Witness{{d}, {}, "leading coefficient vanishes"};
    } else {
        const UniPoly<T> q = scale(p, T(T(1) / p.leading()));
        for (std::size_t i = 0; i <= d; ++i) {
            const long ii = static_cast<long>(i);
            bool same;
            if constexpr (is_exact_v<T>) {
                same = q.coeff(ii) == chi.coeff(ii);
            } else {
                const double s = std::max(std::fabs(q.coeff(ii)), std::fabs(chi.coeff(ii)));
                same = std::fabs(q.coeff(ii) - chi.coeff(ii)) <= tol.band(s);
            }
            if (!same) {
                r.verdict = make_verdict(Status::Fails, "coefficients differ");
                r.verdict.witness = Witness{{i}, {{to_double(q.coeff(ii)), to_double(chi.coeff(ii))}},
                                            "coefficient of t^" + std::to_string(i) + " differs"};
                break;
            }
        }
    }

    std::vector<std::complex<double>> eigs;
    double abscissa = 0;
    r.eigen_stable = eigen_verdict(a, chi, tol, &eigs, &abscissa);
    if (!r.verdict.holds()) return r;

    const UniPoly<T> q = scale(p, T(T(1) / p.leading()));
    if (d == 0) {
        r.implied_stable = true;
    } else if (d <= 4) {
        r.criteria.emplace_back("clc_d_le_4", clc_d_le_4_criterion(q, tol));
    } else {
        if (d == 5) r.criteria.emplace_back("quintic", quintic_criterion(q, tol));
        r.criteria.emplace_back("alpha_product", alpha_criterion(q, AlphaMode::Product, tol));
        r.criteria.emplace_back("alpha_square", alpha_criterion(q, AlphaMode::Square, tol));
    }
    for (const auto& [name, c] : r.criteria) r.implied_stable = r.implied_stable || c.status == Status::Holds;
    if (r.implied_stable && r.eigen_stable.status == Status::Fails) r.consistent = false;
    return r;
}

#define LORENTZ_INSTANTIATE(T)                                                                          \
    template struct LTIReport<T>;                                                                       \
    template LTIReport<T> lti_report(const Matrix<T>&, const Tolerance&);                               \
    template RealizationReport restriction_realization_check(const MultiForm<T>&, const Cone&,          \
                                                             const std::vector<T>&, const std::vector<T>&, \
                                                             const Matrix<T>&, const Tolerance&);

LORENTZ_INSTANTIATE(double)
LORENTZ_INSTANTIATE(Rational)
#undef LORENTZ_INSTANTIATE

} // namespace lorentz
